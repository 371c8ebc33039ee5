#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polycurv/json_io.hpp"

namespace {

using namespace polycurv;
using nlohmann::json;

Vec parse_vec(const std::string& s) {
  Vec v;
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
  v.resize(static_cast<Eigen::Index>(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i) v[static_cast<Eigen::Index>(i)] = parts[i];
  return v;
}

/// "l1,l2:h1,h2" -> axis-aligned box region.
SpatialRegion parse_box(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ValidationError("box spec needs lo:hi");
  return SpatialRegion::box(parse_vec(s.substr(0, colon)), parse_vec(s.substr(colon + 1)));
}

/// "x,y,..:angle" -> spherical cap region.
SphericalRegion parse_cap(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ValidationError("cap spec needs axis:angle");
  return SphericalRegion::cap(parse_vec(s.substr(0, colon)),
                              std::stod(s.substr(colon + 1)));
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open " + output);
    out << text;
  }
}

std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> orders;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) orders.push_back(std::stoi(item));
  return orders;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature and mixed curvature measures of convex polytopes"};
  app.require_subcommand(1);

  unsigned long long seed = kDefaultSeed;
  unsigned long long samples = 100000;
  double tol = 0.0;  // 0 means use each suite's built-in bounds
  std::string output, format = "json";
  int threads = 0;
  app.add_option("--seed", seed, "RNG seed for Monte Carlo estimators");
  app.add_option("--samples", samples, "Monte Carlo sample count");
  app.add_option("--tol", tol, "override tolerance where applicable");
  app.add_option("--output", output, "write the report to this path");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "parallelism cap (0 = library default)");

  auto* cmd_curv = app.add_subcommand("curvature", "curvature measure C_k of a polytope");
  cmd_curv->fallthrough();
  std::string curv_path, curv_box, curv_cap;
  int curv_k = 0;
  bool curv_all = false;
  cmd_curv->add_option("polytope", curv_path, "polytope JSON path")->required();
  cmd_curv->add_option("-k,--order", curv_k, "measure index k");
  cmd_curv->add_flag("--all", curv_all, "print the full intrinsic-volume table");
  cmd_curv->add_option("--box", curv_box, "spatial window lo1,lo2,..:hi1,hi2,..");
  cmd_curv->add_option("--cap", curv_cap, "direction cap x,y,..:angular_radius");

  auto* cmd_mixed = app.add_subcommand("mixed", "mixed curvature measure of several polytopes");
  cmd_mixed->fallthrough();
  std::vector<std::string> mixed_paths;
  std::string mixed_orders;
  cmd_mixed->add_option("polytopes", mixed_paths, "polytope JSON paths")->required();
  cmd_mixed->add_option("--orders", mixed_orders, "comma-separated face orders r1,..,rq")
      ->required();

  auto* cmd_tif = app.add_subcommand("tif", "translative-formula check from a spec document");
  cmd_tif->fallthrough();
  std::string tif_path;
  cmd_tif->add_option("spec", tif_path, "TifSpec JSON path")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a built-in verification suite");
  cmd_verify->fallthrough();
  std::string suite;
  cmd_verify->add_option("suite", suite, "signs|moments|steiner|mixedvol|mu|tif|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  McConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;

  try {
    if (cmd_curv->parsed()) {
      Polytope p = load_polytope(curv_path);
      CurvatureQuery q;
      q.k = curv_k;
      if (!curv_box.empty()) q.b = parse_box(curv_box);
      if (!curv_cap.empty()) q.c = parse_cap(curv_cap);
      json j;
      if (curv_all) {
        json table = json::array();
        for (int k = 0; k <= p.dim(); ++k) table.push_back(intrinsic_volume(p, k));
        j["intrinsic_volumes"] = std::move(table);
      } else {
        j["k"] = q.k;
        j["value"] = curvature_measure(p, q, cfg);
      }
      emit(j.dump(2), output);
      return 0;
    }
    if (cmd_mixed->parsed()) {
      std::vector<Polytope> bodies;
      for (const std::string& path : mixed_paths) bodies.push_back(load_polytope(path));
      MixedQuery query;
      query.r = parse_orders(mixed_orders);
      if (query.r.size() != bodies.size())
        throw ValidationError("need one order per polytope");
      const int d = bodies.empty() ? 0 : bodies[0].dim();
      int sum = 0;
      for (int r : query.r) sum += r;
      const int q = static_cast<int>(bodies.size());
      if (sum < (q - 1) * d || sum > q * d)
        throw ValidationError("order sum must lie in [(q-1)d, qd]");
      MixedMeasureReport rep = mixed_curvature_measure(bodies, query, cfg);
      emit(format == "csv" ? mixed_report_to_csv(rep) : mixed_report_to_json(rep).dump(2),
           output);
      return 0;
    }
    if (cmd_tif->parsed()) {
      std::ifstream in(tif_path);
      if (!in) throw std::runtime_error("cannot open " + tif_path);
      TifSpec spec = tif_spec_from_json(json::parse(in));
      if (!app.count("--seed")) cfg.seed = spec.mc.seed;
      if (!app.count("--samples")) cfg.samples = spec.mc.samples;
      spec.mc = cfg;
      TifReport rep = tif_verify(spec);
      emit(tif_report_to_json(rep).dump(2), output);
      return 0;
    }
    if (cmd_verify->parsed()) {
      std::vector<std::string> names = verify_suite_names();
      if (suite != "all" &&
          std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      VerifyReport rep = run_verify_suite(suite, cfg);
      emit(format == "csv" ? verify_report_to_csv(rep) : verify_report_to_json(rep).dump(2),
           output);
      return rep.passed() ? 0 : 1;
    }
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
