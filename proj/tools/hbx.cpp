#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hbx/io.hpp"

/* hbx: exact verification of Hopf algebras, Hopf braces, 1-cocycles and
 * their modules from structure-constant files.
 *
 * Exit codes are the machine contract: 0 all laws hold, 1 some law fails,
 * 2 the input could not be read or has the wrong shape. */

namespace {

using namespace hbx;

int report_outcome(const CheckReport& rep) {
    std::cout << rep.str();
    return rep.passed() ? 0 : 1;
}

size_t thread_budget() {
    const char* env = std::getenv("HBX_THREADS");
    if (!env)
        return 1;
    long v = std::strtol(env, nullptr, 10);
    return v > 0 ? size_t(v) : 1;
}

CheckReport run_suite(const ParsedStructure& s, const std::string& suite) {
    switch (s.kind) {
        case ParsedStructure::Kind::hopf:
            if (suite != "auto" && suite != "hopf")
                throw error("file contains a hopf structure, suite is " + suite);
            return check_hopf(*s.hopf);
        case ParsedStructure::Kind::brace:
            if (suite != "auto" && suite != "brace")
                throw error("file contains a hopf_brace structure, suite is " + suite);
            return check_hopf_brace(*s.brace);
        case ParsedStructure::Kind::cocycle:
            if (suite != "auto" && suite != "cocycle")
                throw error("file contains a cocycle structure, suite is " + suite);
            return check_cocycle(*s.cocycle);
        case ParsedStructure::Kind::module:
            if (suite != "auto" && suite != "module")
                throw error("file contains a module structure, suite is " + suite);
            return check_left_module(*s.module);
        case ParsedStructure::Kind::brace_module: {
            if (suite != "auto" && suite != "module")
                throw error("file contains a brace_module structure, suite is " + suite);
            CheckReport rep("brace-module-file");
            rep.absorb(check_hopf_brace(s.brace_module->over), "over.");
            if (rep.passed())
                rep.absorb(check_brace_module(*s.brace_module), "");
            return rep;
        }
        case ParsedStructure::Kind::cocycle_module: {
            if (suite != "auto" && suite != "module")
                throw error("file contains a cocycle_module structure, suite is " + suite);
            CheckReport rep("cocycle-module-file");
            rep.absorb(check_cocycle(s.cocycle_module->over), "over.");
            if (rep.passed())
                rep.absorb(check_cocycle_module(*s.cocycle_module), "");
            return rep;
        }
    }
    throw error("unreachable");
}

int cmd_check(const std::string& path, const std::string& suite) {
    return report_outcome(run_suite(load_structure(path), suite));
}

int cmd_roundtrip(const std::string& path) {
    ParsedStructure s = load_structure(path);
    switch (s.kind) {
        case ParsedStructure::Kind::brace: {
            CheckReport inner = check_hopf_brace(*s.brace);
            if (!inner.passed())
                return report_outcome(inner);
            return report_outcome(verify_brace_cocycle_equivalence(
                {NamedBrace{"file", *s.brace}}, {}));
        }
        case ParsedStructure::Kind::cocycle: {
            CheckReport inner = check_cocycle(*s.cocycle);
            if (!inner.passed())
                return report_outcome(inner);
            return report_outcome(verify_brace_cocycle_equivalence(
                {}, {NamedCocycle{"file", *s.cocycle}}));
        }
        case ParsedStructure::Kind::cocycle_module: {
            CheckReport inner("cocycle-module-file");
            inner.absorb(check_cocycle(s.cocycle_module->over), "over.");
            if (inner.passed())
                inner.absorb(check_cocycle_module(*s.cocycle_module), "");
            if (!inner.passed())
                return report_outcome(inner);
            return report_outcome(verify_module_equivalence(
                s.cocycle_module->over,
                {NamedCocycleModule{"file", *s.cocycle_module}}));
        }
        default:
            throw error("roundtrip needs a hopf_brace, cocycle or cocycle_module file");
    }
}

int cmd_enumerate(size_t order, bool up_to_iso, const std::string& out_path) {
    SkewBraceCensus census = enumerate_skew_braces(order, up_to_iso);
    std::string text = dump_json(census_to_json(census));
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_catalog(bool run_all, bool inject_mutant) {
    (void)run_all;
    Catalog cat = catalog();
    if (inject_mutant) {
        // test hook: corrupt one multiplication entry of the first
        // nontrivial group algebra
        HopfData& h = cat.hopfs.at(1).hopf;
        std::vector<Scalar> m = h.mult.entries();
        m[0] = m[0] + Scalar::one(h.obj.field());
        h = HopfData(h.obj, h.unit, Morphism(h.obj, tensor(h.obj, h.obj), std::move(m)),
                     h.counit, h.comult, h.antipode);
    }

    struct Row {
        std::string name;
        bool ok;
    };
    std::vector<Row> rows;
    bool all_ok = true;
    auto add = [&](const std::string& name, const CheckReport& rep) {
        rows.push_back(Row{name, rep.passed()});
        all_ok = all_ok && rep.passed();
    };

    size_t threads = thread_budget();
    (void)threads;  // checks are cheap enough to run inline in fixed order

    for (const auto& [name, h] : cat.hopfs)
        add(name, check_hopf(h));
    for (const auto& [name, hb] : cat.braces)
        add(name, check_hopf_brace(hb));
    for (const auto& [name, c] : cat.cocycles)
        add(name, check_cocycle(c));
    for (const auto& [name, m, over] : cat.modules)
        add(name, check_left_module(m));
    for (const auto& [name, m] : cat.brace_modules)
        add(name, check_brace_module(m));
    for (const auto& [name, m] : cat.cocycle_modules)
        add(name, check_cocycle_module(m));

    add("equivalence/brace-cocycle",
        verify_brace_cocycle_equivalence(cat.braces, cat.cocycles));
    for (const auto& [name, c] : cat.cocycles) {
        std::vector<NamedCocycleModule> mods;
        for (const auto& nm : cat.cocycle_modules)
            if (nm.name.find("(" + name + ")") != std::string::npos)
                mods.push_back(nm);
        add("equivalence/modules(" + name + ")", verify_module_equivalence(c, mods));
    }

    size_t width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.name.size());
    for (const auto& r : rows)
        std::cout << r.name << std::string(width + 2 - r.name.size(), ' ')
                  << (r.ok ? "ok" : "FAIL") << "\n";
    std::cout << (all_ok ? "catalog: all checks passed\n" : "catalog: FAILURES\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for Hopf braces, 1-cocycles and their modules"};
    app.require_subcommand(1);

    std::string path, suite = "auto", out_path;
    size_t order = 0;
    bool up_to_iso = false, run_all = false, inject_mutant = false;

    CLI::App* check = app.add_subcommand("check", "run the axiom suite of a structure file");
    check->add_option("path", path)->required();
    check->add_option("--suite", suite)
        ->check(CLI::IsMember({"auto", "hopf", "brace", "cocycle", "module"}));

    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "run the applicable equivalence round trip");
    roundtrip->add_option("path", path)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "skew brace census for one order");
    enumerate->add_option("--order", order)->required();
    enumerate->add_flag("--up-to-iso", up_to_iso);
    enumerate->add_option("--out", out_path);

    CLI::App* catalog_cmd =
        app.add_subcommand("catalog", "build the instance catalog and run every verifier");
    catalog_cmd->add_flag("--run-all", run_all);
    catalog_cmd->add_flag("--inject-mutant", inject_mutant)->group("");  // test hook

    try {
        app.parse(argc, argv);
        if (*check)
            return cmd_check(path, suite);
        if (*roundtrip)
            return cmd_roundtrip(path);
        if (*enumerate) {
            if (order == 0 || order > 8) {
                std::cerr << "error: OrderTooLarge: order must be in 1..8\n";
                return 2;
            }
            return cmd_enumerate(order, up_to_iso, out_path);
        }
        return cmd_catalog(run_all, inject_mutant);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
