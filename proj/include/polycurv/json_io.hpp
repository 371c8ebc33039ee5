#pragma once

#include <string>

#include "json.hpp"

#include "polycurv/translative.hpp"
#include "polycurv/verify.hpp"

namespace polycurv {

/// Polytope document: {"dim": d, "vertices": [[x,...],...]} with optional
/// "facets": [{"normal": [...], "offset": h}, ...] and
/// "faces": {"0": [[ids], ...], ...} for explicit combinatorial input (d >= 4).
Polytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const Polytope& p);
Polytope load_polytope(const std::string& path);

nlohmann::json mixed_report_to_json(const MixedMeasureReport& rep);
std::string mixed_report_to_csv(const MixedMeasureReport& rep);

/// TifSpec document: {"bodies": [polytope, ...], "k": k,
/// "integrator": "mc"|"grid", "grid_step": h, "samples": n, "seed": s}.
TifSpec tif_spec_from_json(const nlohmann::json& j);
nlohmann::json tif_report_to_json(const TifReport& rep);

nlohmann::json verify_report_to_json(const VerifyReport& rep);
std::string verify_report_to_csv(const VerifyReport& rep);

}  // namespace polycurv
