#ifndef HBX_IO_HPP
#define HBX_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "hbx/constructions.hpp"

namespace hbx {

/* JSON structure files.
 *
 * Every file declares "field", "braiding", "dim" and optionally "grading"
 * (zeros when omitted; swap requires all zeros), then exactly one structure
 * key. Structure constants are input-major nested arrays: mult[i][j][k] is
 * the coefficient of e_k in e_i e_j, comult[i][j][k] the coefficient of
 * e_j (x) e_k in the coproduct of e_i, rank-2 maps f[i][j] the coefficient
 * of e_j in f(e_i), and unit/counit are plain coordinate vectors. Scalars
 * are integers or "num/den" strings. */
struct ParsedStructure {
    enum class Kind { hopf, brace, cocycle, module, brace_module, cocycle_module };

    Kind kind;
    std::optional<HopfData> hopf;
    std::optional<HopfBraceData> brace;
    std::optional<CocycleData> cocycle;
    std::optional<HopfData> module_over;
    std::optional<ModuleData> module;
    std::optional<BraceModuleData> brace_module;
    std::optional<CocycleModuleData> cocycle_module;
};

ParsedStructure parse_structure(const nlohmann::json& doc);
ParsedStructure load_structure(const std::string& path);

// Writers for shipping instances to disk (fixtures, mutants, examples).
nlohmann::json hopf_to_json(const HopfData& h);
nlohmann::json brace_to_json(const HopfBraceData& hb);
nlohmann::json cocycle_to_json(const CocycleData& c);
nlohmann::json module_to_json(const HopfData& over, const ModuleData& m);
nlohmann::json brace_module_to_json(const BraceModuleData& m);
nlohmann::json cocycle_module_to_json(const CocycleModuleData& m);

nlohmann::json census_to_json(const SkewBraceCensus& census);

// Deterministic serialization: sorted keys, two-space indent, one trailing
// newline.
std::string dump_json(const nlohmann::json& doc);
void write_file(const std::string& path, const std::string& text);

}  // namespace hbx

#endif
