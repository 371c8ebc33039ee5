#include "polycurv/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "polycurv/corpus.hpp"

namespace polycurv {

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void add(VerifyReport& rep, const std::string& name, double observed, double bound,
         std::string detail = {}) {
  rep.checks.push_back({name, observed <= bound, observed, bound, std::move(detail)});
}

void enumerate_tuples(int d, int q, int pos, std::vector<int>& r,
                      const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == q) {
    fn(r);
    return;
  }
  for (int v = 0; v <= d; ++v) {
    r[pos] = v;
    enumerate_tuples(d, q, pos + 1, r, fn);
  }
}

VerifyReport suite_signs() {
  VerifyReport rep;
  rep.suite = "signs";
  int identity_violations = 0, reduced_mismatches = 0;
  long long tuples = 0;
  for (int d = 2; d <= 6; ++d) {
    for (int q = 1; q <= 3; ++q) {
      std::vector<int> r(q, 0);
      enumerate_tuples(d, q, 0, r, [&](const std::vector<int>& t) {
        ++tuples;
        SignParities p = sign_parities(d, t);
        SignParities pr = sign_parities_reduced(d, t);
        int total = (p.c1 + p.c2 + p.c3 + (d - 1) * q * (q - 1) / 2) % 2;
        if (total != 0) ++identity_violations;
        if (p.c1 != pr.c1 || p.c2 != pr.c2 || p.c3 != pr.c3) ++reduced_mismatches;
      });
    }
  }
  add(rep, "sign parity identity", identity_violations, 0,
      format_double(static_cast<double>(tuples)) + " tuples");
  add(rep, "reduced sign forms agree", reduced_mismatches, 0);
  return rep;
}

VerifyReport suite_moments(const McConfig& cfg) {
  VerifyReport rep;
  rep.suite = "moments";
  add(rep, "projection moment d=2 l=1 p=1", std::abs(projection_moment(2, 1, 1.0) - 4.0),
      1e-12);
  struct Case {
    int d, l;
    double p;
  };
  for (const Case& c : {Case{2, 1, 1.0}, Case{3, 1, 2.0}, Case{3, 2, 1.0}, Case{4, 2, 1.5}}) {
    double exact = projection_moment(c.d, c.l, c.p);
    Estimate mc = mc_projection_moment(c.d, c.l, c.p, cfg);
    double sigma = mc.std_error > 0 ? std::abs(mc.value - exact) / mc.std_error : 0.0;
    std::ostringstream name;
    name << "projection moment mc d=" << c.d << " l=" << c.l << " p=" << c.p;
    add(rep, name.str(), sigma, 3.0, "exact " + format_double(exact));
  }
  return rep;
}

VerifyReport suite_steiner(const McConfig& cfg) {
  VerifyReport rep;
  rep.suite = "steiner";
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < 3; ++t) {
    Polytope p = t < 2 ? random_polygon(rng) : random_polytope3(rng);
    double rho = 0.3 + 0.2 * t;
    double exact = steiner_volume(p, rho);
    Estimate mc = mc_parallel_volume(p, rho, cfg);
    double sigma = mc.std_error > 0 ? std::abs(mc.value - exact) / mc.std_error : 0.0;
    add(rep, "steiner polynomial d=" + std::to_string(p.dim()) + " trial " + std::to_string(t),
        sigma, 3.0, "exact " + format_double(exact) + " mc " + format_double(mc.value));
  }
  return rep;
}

VerifyReport suite_mixedvol(const McConfig& cfg) {
  VerifyReport rep;
  rep.suite = "mixedvol";
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < 5; ++t) {
    Polytope a = random_polygon(rng);
    Polytope b = random_polygon(rng);
    double via = mixed_volume_via_measures(a, b, 1, cfg);
    double oracle = oracle_mixed_volume(a, b, 1);
    add(rep, "mixed volume d=2 pair " + std::to_string(t), std::abs(via - oracle), 1e-8,
        "oracle " + format_double(oracle));
  }
  for (int t = 0; t < 2; ++t) {
    Polytope a = random_simplex3(rng);
    Polytope b = random_simplex3(rng);
    double via = mixed_volume_via_measures(a, b, 2, cfg);
    double oracle = oracle_mixed_volume(a, b, 2);
    add(rep, "mixed volume d=3 pair " + std::to_string(t), std::abs(via - oracle), 1e-6,
        "oracle " + format_double(oracle));
  }
  return rep;
}

VerifyReport suite_mu(const McConfig& cfg) {
  VerifyReport rep;
  rep.suite = "mu";
  Vec e1 = Vec::Zero(2), e2 = Vec::Zero(2);
  e1(0) = 1;
  e2(1) = 1;
  double w = mu_weight({e1, e2}, {1, 1}, SphericalRegion::all(), cfg);
  add(rep, "weight of an orthogonal pair", std::abs(w - 1.0 / (4.0 * std::numbers::pi)),
      1e-9);
  double wd = mu_weight({e1, e1}, {1, 1}, SphericalRegion::all(), cfg);
  add(rep, "weight of a dependent pair", std::abs(wd), 0.0);
  return rep;
}

VerifyReport suite_tif(const McConfig& cfg) {
  VerifyReport rep;
  rep.suite = "tif";
  {
    TifSpec spec;
    spec.bodies = {unit_square(), unit_square()};
    spec.k = 0;
    spec.mc = cfg;
    TifReport r = tif_verify(spec);
    add(rep, "two squares k=0 monte carlo", r.discrepancy_sigma, 4.0,
        "lhs " + format_double(r.lhs.value) + " rhs " + format_double(r.rhs.value));
  }
  {
    TifSpec spec;
    spec.bodies = {unit_cube3(), unit_cube3(), unit_cube3()};
    spec.k = 0;
    spec.mc = cfg;
    TifSide rhs = tif_rhs(spec);
    add(rep, "three cubes expansion total", std::abs(rhs.value - 27.0), 1e-9);
  }
  return rep;
}

}  // namespace

bool VerifyReport::passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> verify_suite_names() {
  return {"signs", "moments", "steiner", "mixedvol", "mu", "tif"};
}

VerifyReport run_verify_suite(const std::string& suite, const McConfig& cfg) {
  if (suite == "signs") return suite_signs();
  if (suite == "moments") return suite_moments(cfg);
  if (suite == "steiner") return suite_steiner(cfg);
  if (suite == "mixedvol") return suite_mixedvol(cfg);
  if (suite == "mu") return suite_mu(cfg);
  if (suite == "tif") return suite_tif(cfg);
  if (suite == "all") {
    VerifyReport rep;
    rep.suite = "all";
    for (const std::string& name : verify_suite_names()) {
      VerifyReport sub = run_verify_suite(name, cfg);
      for (CheckResult& c : sub.checks) {
        c.name = sub.suite + ": " + c.name;
        rep.checks.push_back(std::move(c));
      }
    }
    return rep;
  }
  throw ValidationError("unknown verification suite: " + suite);
}

}  // namespace polycurv
