#include "hbx/io.hpp"

#include <fstream>

namespace hbx {

using nlohmann::json;

namespace {

FieldSpec parse_field(const json& doc) {
    if (!doc.contains("field"))
        throw error("missing key 'field'");
    const json& f = doc["field"];
    std::string kind = f.value("kind", "");
    if (kind == "Q")
        return FieldSpec::rationals();
    if (kind == "Fp") {
        if (!f.contains("p") || !f["p"].is_number_unsigned())
            throw error("field kind 'Fp' needs an unsigned 'p'");
        return FieldSpec::prime(f["p"].get<uint32_t>());
    }
    throw error("unknown field kind '" + kind + "'");
}

Scalar parse_scalar(const json& v, const FieldSpec& field, const std::string& where) {
    if (v.is_number_integer())
        return Scalar::of_int(v.get<int64_t>(), field);
    if (v.is_string())
        return Scalar::parse(v.get<std::string>(), field);
    throw error("scalar at " + where + " must be an integer or 'num/den' string");
}

BraidSpec parse_braiding(const json& doc, const FieldSpec& field) {
    if (!doc.contains("braiding"))
        return BraidSpec::swap(field);
    const json& b = doc["braiding"];
    std::string kind = b.value("kind", "");
    if (kind == "swap")
        return BraidSpec::swap(field);
    if (kind == "sign")
        return BraidSpec::sign(field);
    if (kind == "bicharacter") {
        if (!b.contains("N") || !b["N"].is_number_unsigned())
            throw error("bicharacter braiding needs an unsigned 'N'");
        if (!b.contains("q"))
            throw error("bicharacter braiding needs 'q'");
        return BraidSpec::bicharacter(b["N"].get<uint32_t>(),
                                      parse_scalar(b["q"], field, "braiding.q"));
    }
    throw error("unknown braiding kind '" + kind + "'");
}

FinObject parse_object(const json& doc, const BraidSpec& braid, const std::string& dim_key,
                       const std::string& grading_key) {
    if (!doc.contains(dim_key) || !doc[dim_key].is_number_unsigned())
        throw error("missing or invalid '" + dim_key + "'");
    size_t dim = doc[dim_key].get<size_t>();
    if (!doc.contains(grading_key))
        return FinObject(dim, braid);
    const json& g = doc[grading_key];
    if (!g.is_array() || g.size() != dim)
        throw error("'" + grading_key + "' must be an array of length " + std::to_string(dim));
    std::vector<uint32_t> grading;
    for (const auto& v : g) {
        if (!v.is_number_unsigned())
            throw error("'" + grading_key + "' entries must be unsigned integers");
        grading.push_back(v.get<uint32_t>());
    }
    return FinObject(dim, std::move(grading), braid);
}

// f[i][j]: coefficient of e_j in f(e_i); morphism matrix is dst x src
Morphism parse_map(const json& v, const FinObject& dst, const FinObject& src,
                   const std::string& where) {
    if (!v.is_array() || v.size() != src.dim())
        throw error("'" + where + "' must be an array of length " + std::to_string(src.dim()));
    MatrixBuilder b(dst, src);
    for (size_t i = 0; i < src.dim(); ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != dst.dim())
            throw error("'" + where + "[" + std::to_string(i) + "]' must have length " +
                        std::to_string(dst.dim()));
        for (size_t j = 0; j < dst.dim(); ++j)
            b.at(j, i) = parse_scalar(row[j], src.field(),
                                      where + "[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "]");
    }
    return Morphism(dst, src, b.take());
}

// t[i][j][k]: coefficient of e_k in op(e_i (x) e_j); builds X (x) Y -> Z
Morphism parse_rank3(const json& v, const FinObject& z, const FinObject& x, const FinObject& y,
                     const std::string& where) {
    if (!v.is_array() || v.size() != x.dim())
        throw error("'" + where + "' must be an array of length " + std::to_string(x.dim()));
    MatrixBuilder b(z, tensor(x, y));
    for (size_t i = 0; i < x.dim(); ++i) {
        const json& mid = v[i];
        if (!mid.is_array() || mid.size() != y.dim())
            throw error("'" + where + "[" + std::to_string(i) + "]' must have length " +
                        std::to_string(y.dim()));
        for (size_t j = 0; j < y.dim(); ++j) {
            const json& row = mid[j];
            if (!row.is_array() || row.size() != z.dim())
                throw error("'" + where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                            "]' must have length " + std::to_string(z.dim()));
            for (size_t k = 0; k < z.dim(); ++k)
                b.at(k, i * y.dim() + j) =
                    parse_scalar(row[k], z.field(), where + " entry");
        }
    }
    return Morphism(z, tensor(x, y), b.take());
}

// comult[i][j][k]: coefficient of e_j (x) e_k in the coproduct of e_i
Morphism parse_comult(const json& v, const FinObject& obj, const std::string& where) {
    size_t d = obj.dim();
    if (!v.is_array() || v.size() != d)
        throw error("'" + where + "' must be an array of length " + std::to_string(d));
    MatrixBuilder b(tensor(obj, obj), obj);
    for (size_t i = 0; i < d; ++i) {
        const json& mid = v[i];
        if (!mid.is_array() || mid.size() != d)
            throw error("'" + where + "[" + std::to_string(i) + "]' must have length " +
                        std::to_string(d));
        for (size_t j = 0; j < d; ++j) {
            const json& row = mid[j];
            if (!row.is_array() || row.size() != d)
                throw error("'" + where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                            "]' must have length " + std::to_string(d));
            for (size_t k = 0; k < d; ++k)
                b.at(j * d + k, i) = parse_scalar(row[k], obj.field(), where + " entry");
        }
    }
    return Morphism(tensor(obj, obj), obj, b.take());
}

Morphism parse_vector_as_unit(const json& v, const FinObject& obj, const std::string& where) {
    if (!v.is_array() || v.size() != obj.dim())
        throw error("'" + where + "' must be an array of length " + std::to_string(obj.dim()));
    FinObject k = FinObject::unit(obj.braid());
    MatrixBuilder b(obj, k);
    for (size_t i = 0; i < obj.dim(); ++i)
        b.at(i, 0) = parse_scalar(v[i], obj.field(), where);
    return Morphism(obj, k, b.take());
}

Morphism parse_vector_as_counit(const json& v, const FinObject& obj, const std::string& where) {
    if (!v.is_array() || v.size() != obj.dim())
        throw error("'" + where + "' must be an array of length " + std::to_string(obj.dim()));
    FinObject k = FinObject::unit(obj.braid());
    MatrixBuilder b(k, obj);
    for (size_t i = 0; i < obj.dim(); ++i)
        b.at(0, i) = parse_scalar(v[i], obj.field(), where);
    return Morphism(k, obj, b.take());
}

const json& need(const json& doc, const std::string& key, const std::string& ctx) {
    if (!doc.contains(key))
        throw error("missing key '" + ctx + key + "'");
    return doc[key];
}

HopfData parse_hopf_tables(const json& v, const FinObject& obj, const std::string& ctx) {
    return HopfData(obj, parse_vector_as_unit(need(v, "unit", ctx), obj, ctx + "unit"),
                    parse_rank3(need(v, "mult", ctx), obj, obj, obj, ctx + "mult"),
                    parse_vector_as_counit(need(v, "counit", ctx), obj, ctx + "counit"),
                    parse_comult(need(v, "comult", ctx), obj, ctx + "comult"),
                    parse_map(need(v, "antipode", ctx), obj, obj, ctx + "antipode"));
}

HopfBraceData parse_brace_tables(const json& v, const FinObject& obj, const std::string& ctx) {
    return HopfBraceData(
        obj, parse_vector_as_counit(need(v, "counit", ctx), obj, ctx + "counit"),
        parse_comult(need(v, "comult", ctx), obj, ctx + "comult"),
        parse_vector_as_unit(need(v, "unit1", ctx), obj, ctx + "unit1"),
        parse_rank3(need(v, "mult1", ctx), obj, obj, obj, ctx + "mult1"),
        parse_map(need(v, "antipode1", ctx), obj, obj, ctx + "antipode1"),
        parse_vector_as_unit(need(v, "unit2", ctx), obj, ctx + "unit2"),
        parse_rank3(need(v, "mult2", ctx), obj, obj, obj, ctx + "mult2"),
        parse_map(need(v, "antipode2", ctx), obj, obj, ctx + "antipode2"));
}

// A and H share the top-level dimension; either may override the grading.
FinObject sub_object(const json& j, const FinObject& base) {
    if (!j.contains("grading"))
        return base;
    json wrapper{{"dim", base.dim()}, {"grading", j["grading"]}};
    return parse_object(wrapper, base.braid(), "dim", "grading");
}

CocycleData parse_cocycle_tables(const json& v, const json& top, const BraidSpec& braid,
                                 const std::string& ctx) {
    FinObject base = parse_object(top, braid, "dim", "grading");
    const json& ja = need(v, "A", ctx);
    const json& jh = need(v, "H", ctx);
    FinObject a_obj = sub_object(ja, base);
    FinObject h_obj = sub_object(jh, base);
    HopfData a = parse_hopf_tables(ja, a_obj, ctx + "A.");
    HopfData h = parse_hopf_tables(jh, h_obj, ctx + "H.");
    return CocycleData(a, h,
                       parse_rank3(need(v, "phi", ctx), h_obj, a_obj, h_obj, ctx + "phi"),
                       parse_map(need(v, "pi", ctx), h_obj, a_obj, ctx + "pi"),
                       parse_map(need(v, "pi_inv", ctx), a_obj, h_obj, ctx + "pi_inv"));
}

}  // namespace

ParsedStructure parse_structure(const json& doc) {
    FieldSpec field = parse_field(doc);
    BraidSpec braid = parse_braiding(doc, field);
    ParsedStructure out;

    if (doc.contains("hopf")) {
        out.kind = ParsedStructure::Kind::hopf;
        FinObject obj = parse_object(doc, braid, "dim", "grading");
        out.hopf = parse_hopf_tables(doc["hopf"], obj, "hopf.");
        return out;
    }
    if (doc.contains("hopf_brace")) {
        out.kind = ParsedStructure::Kind::brace;
        FinObject obj = parse_object(doc, braid, "dim", "grading");
        out.brace = parse_brace_tables(doc["hopf_brace"], obj, "hopf_brace.");
        return out;
    }
    if (doc.contains("cocycle")) {
        out.kind = ParsedStructure::Kind::cocycle;
        out.cocycle = parse_cocycle_tables(doc["cocycle"], doc, braid, "cocycle.");
        return out;
    }
    if (doc.contains("module")) {
        out.kind = ParsedStructure::Kind::module;
        const json& v = doc["module"];
        FinObject obj = parse_object(doc, braid, "dim", "grading");
        HopfData h = parse_hopf_tables(need(v, "hopf", "module."), obj, "module.hopf.");
        FinObject carrier = parse_object(v, braid, "carrier_dim", "carrier_grading");
        out.module_over = h;
        out.module = ModuleData(
            carrier, parse_rank3(need(v, "act", "module."), carrier, obj, carrier, "module.act"),
            h.algebra());
        return out;
    }
    if (doc.contains("brace_module")) {
        out.kind = ParsedStructure::Kind::brace_module;
        const json& v = doc["brace_module"];
        FinObject obj = parse_object(doc, braid, "dim", "grading");
        HopfBraceData hb =
            parse_brace_tables(need(v, "brace", "brace_module."), obj, "brace_module.brace.");
        FinObject carrier = parse_object(v, braid, "carrier_dim", "carrier_grading");
        out.brace_module = BraceModuleData(
            carrier,
            parse_rank3(need(v, "psi1", "brace_module."), carrier, obj, carrier,
                        "brace_module.psi1"),
            parse_rank3(need(v, "psi2", "brace_module."), carrier, obj, carrier,
                        "brace_module.psi2"),
            hb);
        return out;
    }
    if (doc.contains("cocycle_module")) {
        out.kind = ParsedStructure::Kind::cocycle_module;
        const json& v = doc["cocycle_module"];
        CocycleData c = parse_cocycle_tables(need(v, "cocycle", "cocycle_module."), doc, braid,
                                             "cocycle_module.cocycle.");
        FinObject m = parse_object(v, braid, "m_dim", "m_grading");
        FinObject n = parse_object(v, braid, "n_dim", "n_grading");
        out.cocycle_module = CocycleModuleData(
            m, n,
            parse_rank3(need(v, "act_m", "cocycle_module."), m, c.a.obj, m,
                        "cocycle_module.act_m"),
            parse_rank3(need(v, "hact_m", "cocycle_module."), m, c.h.obj, m,
                        "cocycle_module.hact_m"),
            parse_rank3(need(v, "act_n", "cocycle_module."), n, c.a.obj, n,
                        "cocycle_module.act_n"),
            parse_map(need(v, "gamma", "cocycle_module."), m, n, "cocycle_module.gamma"),
            parse_map(need(v, "gamma_inv", "cocycle_module."), n, m,
                      "cocycle_module.gamma_inv"),
            c);
        return out;
    }
    throw error(
        "no structure key (expected one of hopf, hopf_brace, cocycle, module, brace_module, "
        "cocycle_module)");
}

ParsedStructure load_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw error("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_structure(doc);
}

namespace {

json scalar_to_json(const Scalar& s) {
    if (s.den() == 1)
        return json(s.num());
    return json(s.str());
}

json field_to_json(const FieldSpec& f) {
    if (f.is_prime_field())
        return json{{"kind", "Fp"}, {"p", f.p}};
    return json{{"kind", "Q"}};
}

json braiding_to_json(const BraidSpec& b) {
    switch (b.kind()) {
        case BraidSpec::Kind::swap:
            return json{{"kind", "swap"}};
        case BraidSpec::Kind::sign:
            return json{{"kind", "sign"}};
        default:
            return json{{"kind", "bicharacter"},
                        {"N", b.modulus()},
                        {"q", scalar_to_json(b.q())}};
    }
}

json map_to_json(const Morphism& f) {
    json rows = json::array();
    for (size_t i = 0; i < f.cols(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < f.rows(); ++j)
            row.push_back(scalar_to_json(f.at(j, i)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json rank3_to_json(const Morphism& f, size_t x, size_t y) {
    json out = json::array();
    for (size_t i = 0; i < x; ++i) {
        json mid = json::array();
        for (size_t j = 0; j < y; ++j) {
            json row = json::array();
            for (size_t k = 0; k < f.rows(); ++k)
                row.push_back(scalar_to_json(f.at(k, i * y + j)));
            mid.push_back(std::move(row));
        }
        out.push_back(std::move(mid));
    }
    return out;
}

json comult_to_json(const Morphism& f) {
    size_t d = f.cols();
    json out = json::array();
    for (size_t i = 0; i < d; ++i) {
        json mid = json::array();
        for (size_t j = 0; j < d; ++j) {
            json row = json::array();
            for (size_t k = 0; k < d; ++k)
                row.push_back(scalar_to_json(f.at(j * d + k, i)));
            mid.push_back(std::move(row));
        }
        out.push_back(std::move(mid));
    }
    return out;
}

json vector_unit_to_json(const Morphism& f) {
    json row = json::array();
    for (size_t i = 0; i < f.rows(); ++i)
        row.push_back(scalar_to_json(f.at(i, 0)));
    return row;
}

json vector_counit_to_json(const Morphism& f) {
    json row = json::array();
    for (size_t i = 0; i < f.cols(); ++i)
        row.push_back(scalar_to_json(f.at(0, i)));
    return row;
}

json grading_to_json(const FinObject& obj) {
    json g = json::array();
    for (size_t i = 0; i < obj.dim(); ++i)
        g.push_back(obj.degree(i));
    return g;
}

json hopf_tables(const HopfData& h) {
    size_t d = h.obj.dim();
    return json{{"unit", vector_unit_to_json(h.unit)},
                {"mult", rank3_to_json(h.mult, d, d)},
                {"counit", vector_counit_to_json(h.counit)},
                {"comult", comult_to_json(h.comult)},
                {"antipode", map_to_json(h.antipode)}};
}

json header(const FinObject& obj) {
    return json{{"field", field_to_json(obj.field())},
                {"braiding", braiding_to_json(obj.braid())},
                {"dim", obj.dim()},
                {"grading", grading_to_json(obj)}};
}

}  // namespace

json hopf_to_json(const HopfData& h) {
    json doc = header(h.obj);
    doc["hopf"] = hopf_tables(h);
    return doc;
}

json brace_to_json(const HopfBraceData& hb) {
    size_t d = hb.obj.dim();
    json doc = header(hb.obj);
    doc["hopf_brace"] = json{{"counit", vector_counit_to_json(hb.counit)},
                             {"comult", comult_to_json(hb.comult)},
                             {"unit1", vector_unit_to_json(hb.unit1)},
                             {"mult1", rank3_to_json(hb.mult1, d, d)},
                             {"antipode1", map_to_json(hb.antipode1)},
                             {"unit2", vector_unit_to_json(hb.unit2)},
                             {"mult2", rank3_to_json(hb.mult2, d, d)},
                             {"antipode2", map_to_json(hb.antipode2)}};
    return doc;
}

json cocycle_to_json(const CocycleData& c) {
    json doc = header(c.a.obj);
    doc["cocycle"] = json{{"A", hopf_tables(c.a)},
                          {"H", hopf_tables(c.h)},
                          {"phi", rank3_to_json(c.phi, c.a.obj.dim(), c.h.obj.dim())},
                          {"pi", map_to_json(c.pi)},
                          {"pi_inv", map_to_json(c.pi_inv)}};
    if (!(c.h.obj.grading() == c.a.obj.grading()))
        doc["cocycle"]["H"]["grading"] = grading_to_json(c.h.obj);
    return doc;
}

json module_to_json(const HopfData& over, const ModuleData& m) {
    json doc = header(over.obj);
    doc["module"] = json{{"hopf", hopf_tables(over)},
                         {"carrier_dim", m.carrier.dim()},
                         {"carrier_grading", grading_to_json(m.carrier)},
                         {"act", rank3_to_json(m.act, over.obj.dim(), m.carrier.dim())}};
    return doc;
}

json brace_module_to_json(const BraceModuleData& m) {
    size_t d = m.over.obj.dim();
    json doc = header(m.over.obj);
    json brace = brace_to_json(m.over);
    doc["brace_module"] = json{{"brace", brace["hopf_brace"]},
                               {"carrier_dim", m.carrier.dim()},
                               {"carrier_grading", grading_to_json(m.carrier)},
                               {"psi1", rank3_to_json(m.psi1, d, m.carrier.dim())},
                               {"psi2", rank3_to_json(m.psi2, d, m.carrier.dim())}};
    return doc;
}

json cocycle_module_to_json(const CocycleModuleData& m) {
    json doc = header(m.over.a.obj);
    json c = cocycle_to_json(m.over);
    doc["cocycle_module"] =
        json{{"cocycle", c["cocycle"]},
             {"m_dim", m.m.dim()},
             {"m_grading", grading_to_json(m.m)},
             {"n_dim", m.n.dim()},
             {"n_grading", grading_to_json(m.n)},
             {"act_m", rank3_to_json(m.act_m, m.over.a.obj.dim(), m.m.dim())},
             {"hact_m", rank3_to_json(m.hact_m, m.over.h.obj.dim(), m.m.dim())},
             {"act_n", rank3_to_json(m.act_n, m.over.a.obj.dim(), m.n.dim())},
             {"gamma", map_to_json(m.gamma)},
             {"gamma_inv", map_to_json(m.gamma_inv)}};
    return doc;
}

json census_to_json(const SkewBraceCensus& census) {
    json out{{"order", census.order},
             {"labeled_count", census.labeled_count},
             {"up_to_iso", census.up_to_iso}};
    if (census.iso_count)
        out["iso_count"] = *census.iso_count;
    json structures = json::array();
    for (const auto& s : census.structures) {
        json d = json::array(), c = json::array();
        for (const auto& row : s.diamond.op)
            d.push_back(row);
        for (const auto& row : s.circ.op)
            c.push_back(row);
        structures.push_back(json{{"diamond", d}, {"circ", c}});
    }
    out["structures"] = std::move(structures);
    return out;
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot write '" + path + "'");
    out << text;
}

}  // namespace hbx
