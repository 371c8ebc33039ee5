#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>

#include "doctest.h"
#include "polycurv/corpus.hpp"
#include "polycurv/translative.hpp"

using namespace polycurv;

TEST_CASE("two squares expansion breakdowns") {
  Polytope sq = unit_square();
  TifSpec spec;
  spec.bodies = {sq, sq};

  spec.k = 0;
  std::map<std::vector<int>, double> breakdown;
  TifSide rhs = tif_rhs(spec, &breakdown);
  CHECK(rhs.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(breakdown.at({0, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(breakdown.at({1, 1}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(breakdown.at({2, 0}) == doctest::Approx(1.0).epsilon(1e-12));

  spec.k = 1;
  breakdown.clear();
  rhs = tif_rhs(spec, &breakdown);
  CHECK(rhs.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(breakdown.at({1, 2}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(breakdown.at({2, 1}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("three cubes expansion totals 27") {
  Polytope c = unit_cube3();
  TifSpec spec;
  spec.bodies = {c, c, c};
  spec.k = 0;
  std::map<std::vector<int>, double> breakdown;
  TifSide rhs = tif_rhs(spec, &breakdown);
  CHECK(rhs.value == doctest::Approx(27.0).epsilon(1e-10));
  CHECK(breakdown.at({2, 2, 2}) == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(breakdown.at({3, 3, 0}) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(breakdown.at({3, 2, 1}) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(breakdown.at({1, 2, 3}) == doctest::Approx(3.0).epsilon(1e-10));
  double total = 0.0;
  for (const auto& [r, v] : breakdown) total += v;
  CHECK(total == doctest::Approx(rhs.value).epsilon(1e-12));
}

TEST_CASE("monte carlo lhs matches the expansion for squares") {
  Polytope sq = unit_square();
  TifSpec spec;
  spec.bodies = {sq, sq};
  spec.k = 0;
  spec.mc.samples = 100000;
  TifReport rep = tif_verify(spec);
  // The Euler characteristic of the intersection is 1 for every non-degenerate
  // translation inside the window, so the integrand is constant and the
  // estimator has zero variance.
  CHECK(rep.lhs.std_error == 0.0);
  CHECK(rep.discrepancy_sigma <= 4.0);
  CHECK(rep.rhs.value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("grid integrator converges for squares") {
  Polytope sq = unit_square();
  TifSpec spec;
  spec.bodies = {sq, sq};
  spec.k = 0;
  spec.integrator = Integrator::Grid;
  spec.grid_step = 0.01;
  TifSide lhs = tif_lhs(spec);
  CHECK(lhs.std_error == 0.0);
  CHECK(std::abs(lhs.value - 4.0) <= 0.05);
}

TEST_CASE("monte carlo lhs is reproducible and scales its error") {
  Polytope sq = unit_square();
  TifSpec spec;
  spec.bodies = {sq, sq};
  spec.k = 1;
  spec.mc.samples = 40000;
  TifSide a = tif_lhs(spec);
  TifSide b = tif_lhs(spec);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  spec.mc.samples = 160000;
  TifSide c = tif_lhs(spec);
  CHECK(c.std_error < a.std_error);
}

TEST_CASE("rhs symmetry under relabeling") {
  std::mt19937_64 rng(67);
  Polytope a = random_polygon(rng);
  Polytope b = random_polygon(rng);
  TifSpec ab, ba;
  ab.bodies = {a, b};
  ba.bodies = {b, a};
  ab.k = ba.k = 1;
  CHECK(tif_rhs(ab).value == doctest::Approx(tif_rhs(ba).value).epsilon(1e-10));
}

TEST_CASE("invalid specs are rejected") {
  Polytope sq = unit_square();
  TifSpec spec;
  spec.bodies = {sq};
  CHECK_THROWS_AS(tif_lhs(spec), ValidationError);
  spec.bodies = {sq, sq};
  spec.k = 2;
  CHECK_THROWS_AS(tif_rhs(spec), ValidationError);
}
