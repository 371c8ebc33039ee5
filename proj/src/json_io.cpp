#include "polycurv/json_io.hpp"

#include <fstream>
#include <sstream>

namespace polycurv {

using nlohmann::json;

namespace {

Vec vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("expected a nonempty number array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ValidationError("expected a number array");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

json vec_to_json(const Vec& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

}  // namespace

Polytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ValidationError("polytope document needs 'dim' and 'vertices'");
  const int d = j.at("dim").get<int>();
  if (d < 2) throw ValidationError("ambient dimension must be at least 2");
  std::vector<Vec> vertices;
  for (const json& row : j.at("vertices")) {
    Vec v = vec_from_json(row);
    if (v.size() != d) throw ValidationError("vertex dimension does not match 'dim'");
    vertices.push_back(std::move(v));
  }
  if (!j.contains("facets")) {
    if (d > 3)
      throw ValidationError("d >= 4 requires explicit 'facets' and 'faces'");
    return Polytope::from_vertices(vertices);
  }
  std::vector<Halfspace> facets;
  for (const json& f : j.at("facets")) {
    Halfspace h;
    h.normal = vec_from_json(f.at("normal"));
    if (h.normal.size() != d) throw ValidationError("facet normal dimension mismatch");
    h.offset = f.at("offset").get<double>();
    facets.push_back(std::move(h));
  }
  if (!j.contains("faces")) throw ValidationError("'facets' requires 'faces'");
  std::vector<std::vector<std::vector<int>>> faces_by_dim(static_cast<size_t>(d) + 1);
  for (const auto& [key, lists] : j.at("faces").items()) {
    int fd = std::stoi(key);
    if (fd < 0 || fd > d) throw ValidationError("face dimension out of range");
    for (const json& ids : lists)
      faces_by_dim[static_cast<size_t>(fd)].push_back(ids.get<std::vector<int>>());
  }
  return Polytope::from_combinatorial(d, std::move(vertices), std::move(facets),
                                      std::move(faces_by_dim));
}

json polytope_to_json(const Polytope& p) {
  json j;
  j["dim"] = p.dim();
  j["vertices"] = json::array();
  for (const Vec& v : p.vertices()) j["vertices"].push_back(vec_to_json(v));
  j["facets"] = json::array();
  for (const Halfspace& h : p.facet_halfspaces())
    j["facets"].push_back({{"normal", vec_to_json(h.normal)}, {"offset", h.offset}});
  json faces = json::object();
  for (int fd = 0; fd <= p.dim(); ++fd) {
    json lists = json::array();
    for (const Face& f : p.faces(fd)) lists.push_back(f.vertex_ids);
    faces[std::to_string(fd)] = std::move(lists);
  }
  j["faces"] = std::move(faces);
  return j;
}

Polytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);  // parse_error propagates to the caller
  return polytope_from_json(j);
}

json mixed_report_to_json(const MixedMeasureReport& rep) {
  json j;
  j["value"] = rep.value;
  j["std_error"] = rep.std_error;
  j["degenerate_tuples_skipped"] = rep.degenerate_tuples_skipped;
  json contribs = json::array();
  for (const MixedContribution& c : rep.contributions)
    contribs.push_back({{"face_ids", c.face_ids},
                        {"gamma", c.gamma},
                        {"bracket", c.bracket},
                        {"support", c.support},
                        {"value", c.value}});
  j["contributions"] = std::move(contribs);
  return j;
}

std::string mixed_report_to_csv(const MixedMeasureReport& rep) {
  std::ostringstream os;
  os.precision(17);
  os << "face_ids,gamma,bracket,support,value\n";
  for (const MixedContribution& c : rep.contributions) {
    for (size_t i = 0; i < c.face_ids.size(); ++i)
      os << (i ? ";" : "") << c.face_ids[i];
    os << "," << c.gamma << "," << c.bracket << "," << c.support << "," << c.value << "\n";
  }
  os << "total,,," << "," << rep.value << "\n";
  return os.str();
}

TifSpec tif_spec_from_json(const json& j) {
  TifSpec spec;
  if (!j.is_object() || !j.contains("bodies") || !j.contains("k"))
    throw ValidationError("tif document needs 'bodies' and 'k'");
  for (const json& b : j.at("bodies")) spec.bodies.push_back(polytope_from_json(b));
  spec.k = j.at("k").get<int>();
  if (j.contains("integrator")) {
    std::string name = j.at("integrator").get<std::string>();
    if (name == "mc")
      spec.integrator = Integrator::MonteCarlo;
    else if (name == "grid")
      spec.integrator = Integrator::Grid;
    else
      throw ValidationError("unknown integrator: " + name);
  }
  if (j.contains("grid_step")) spec.grid_step = j.at("grid_step").get<double>();
  if (j.contains("samples")) spec.mc.samples = j.at("samples").get<unsigned long long>();
  if (j.contains("seed")) spec.mc.seed = j.at("seed").get<unsigned long long>();
  return spec;
}

json tif_report_to_json(const TifReport& rep) {
  json j;
  j["lhs"] = {{"value", rep.lhs.value}, {"std_error", rep.lhs.std_error}};
  j["rhs"] = {{"value", rep.rhs.value}, {"std_error", rep.rhs.std_error}};
  j["discrepancy"] = rep.discrepancy;
  j["discrepancy_sigma"] = rep.discrepancy_sigma;
  j["empty_translates"] = rep.empty_translates;
  j["degenerate_translates"] = rep.degenerate_translates;
  json breakdown = json::array();
  for (const auto& [r, value] : rep.rhs_breakdown)
    breakdown.push_back({{"orders", r}, {"value", value}});
  j["rhs_breakdown"] = std::move(breakdown);
  return j;
}

json verify_report_to_json(const VerifyReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["passed"] = rep.passed();
  json checks = json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"observed", c.observed},
                      {"bound", c.bound},
                      {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

std::string verify_report_to_csv(const VerifyReport& rep) {
  std::ostringstream os;
  os.precision(17);
  os << "name,passed,observed,bound\n";
  for (const CheckResult& c : rep.checks)
    os << '"' << c.name << "\"," << (c.passed ? 1 : 0) << "," << c.observed << ","
       << c.bound << "\n";
  return os.str();
}

}  // namespace polycurv
