#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpcalc/global.hpp"

namespace mpcalc {

struct ScenarioResult {
    std::string markdown;   // human report, ends with the machine block
    Json machine;           // deterministic machine-readable result
};

/// classification, component group, distinguished elements, splitting table
/// with endoscopic data and the two epsilon routes, phi_psi, the component
/// map, and the descent verification.
ScenarioResult run_analyze(const ArthurParameter& psi);

/// the multiplicity evaluator: sign characters, the character constraint
/// set over V, global packet member tuples and the stable coefficient table.
/// The product-rule sign character can be replaced by an explicit one.
ScenarioResult run_multiplicity(const GlobalParameter& gp, const std::vector<std::string>& v,
                                const std::map<std::string, PacketModel>& packets,
                                const std::optional<BitVec>& art_override = std::nullopt);

/// catalog load + pairwise cross constraints.
ScenarioResult run_validate(const Catalog& cat);

/// Dispatch on a scenario document: {"command": ..., "catalog": {...} |
/// "catalog_file": path, ...}. The --catalog files, when present, replace
/// the document's catalog. A relative catalog_file is resolved against the
/// current directory first, then against scenario_dir.
ScenarioResult run_scenario(const Json& doc, const std::vector<std::string>& catalog_files,
                            const std::string& scenario_dir = "");

/// md: markdown report (with embedded machine block); json: machine block only.
std::string emit(const ScenarioResult& r, const std::string& format);

} // namespace mpcalc
