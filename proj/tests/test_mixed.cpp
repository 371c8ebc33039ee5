#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "polycurv/corpus.hpp"
#include "polycurv/mixed.hpp"

using namespace polycurv;

namespace {
Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
}  // namespace

TEST_CASE("two squares, orders (1,1)") {
  Polytope sq = unit_square();
  MixedQuery q;
  q.r = {1, 1};
  MixedMeasureReport rep = mixed_curvature_measure({sq, sq}, q);
  CHECK(rep.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.contributions.size() == 8);  // the perpendicular edge pairs
  double recomputed = 0.0;
  for (const MixedContribution& c : rep.contributions) recomputed += c.value;
  CHECK(recomputed == doctest::Approx(rep.value).epsilon(1e-12));
}

TEST_CASE("two squares, orders (2,1) factor out a volume") {
  Polytope sq = unit_square();
  MixedQuery q;
  q.r = {2, 1};
  CHECK(mixed_curvature_measure({sq, sq}, q).value == doctest::Approx(2.0).epsilon(1e-12));
  q.r = {1, 2};
  CHECK(mixed_curvature_measure({sq, sq}, q).value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("three cubes, orders (2,2,2)") {
  Polytope c = unit_cube3();
  MixedQuery q;
  q.r = {2, 2, 2};
  MixedMeasureReport rep = mixed_curvature_measure({c, c, c}, q);
  CHECK(rep.value == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(rep.contributions.size() == 48);
}

TEST_CASE("invalid order tuples are rejected") {
  Polytope sq = unit_square();
  MixedQuery q;
  q.r = {0, 1};
  CHECK_THROWS_AS(mixed_curvature_measure({sq, sq}, q), ValidationError);
  q.r = {1};
  CHECK_THROWS_AS(mixed_curvature_measure({sq, sq}, q), ValidationError);
  q.r = {3, 1};
  CHECK_THROWS_AS(mixed_curvature_measure({sq, sq}, q), ValidationError);
}

TEST_CASE("symmetry under permutation") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope a = random_polygon(rng);
    Polytope b = random_polygon(rng);
    MixedQuery q12, q21;
    q12.r = {1, 1};
    q21.r = {1, 1};
    double v12 = mixed_curvature_measure({a, b}, q12).value;
    double v21 = mixed_curvature_measure({b, a}, q21).value;
    CHECK(v12 == doctest::Approx(v21).epsilon(1e-10));
  }
}

TEST_CASE("homogeneity in one argument") {
  std::mt19937_64 rng(43);
  Polytope a = random_polygon(rng);
  Polytope b = random_polygon(rng);
  MixedQuery q;
  q.r = {1, 1};
  double base = mixed_curvature_measure({a, b}, q).value;
  double scaled = mixed_curvature_measure({a.scaled(2.5), b}, q).value;
  CHECK(scaled == doctest::Approx(2.5 * base).epsilon(1e-9));
}

TEST_CASE("translation covariance") {
  std::mt19937_64 rng(47);
  Polytope a = random_polygon(rng);
  Polytope b = random_polygon(rng);
  MixedQuery q;
  q.r = {1, 1};
  double base = mixed_curvature_measure({a, b}, q).value;
  double moved =
      mixed_curvature_measure({a.translated(vec2(3, -1)), b.translated(vec2(0, 9))}, q).value;
  CHECK(moved == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("nonnegativity on the corpus") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope a = random_polygon(rng);
    Polytope b = random_polygon(rng);
    for (int r1 = 0; r1 <= 2; ++r1) {
      int r2 = 2 - r1 + (trial % 2);  // k = 0 or 1
      if (r2 < 0 || r2 > 2) continue;
      MixedQuery q;
      q.r = {r1, r2};
      CHECK(mixed_curvature_measure({a, b}, q).value >= 0.0);
    }
  }
}

TEST_CASE("mixed volume hand values") {
  Polytope sq = unit_square();
  CHECK(mixed_volume_via_measures(sq, sq, 1) == doctest::Approx(1.0).epsilon(1e-12));
  Polytope rect =
      Polytope::from_vertices({vec2(0, 0), vec2(2, 0), vec2(2, 1), vec2(0, 1)});
  CHECK(mixed_volume_via_measures(sq, rect, 1) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(oracle_mixed_volume(sq, sq, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(oracle_mixed_volume(sq, rect, 1) == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("mixed volume of identical bodies is the volume") {
  std::mt19937_64 rng(59);
  Polytope a = random_polygon(rng);
  for (int alpha = 0; alpha <= 2; ++alpha)
    CHECK(mixed_volume_via_measures(a, a, alpha) ==
          doctest::Approx(a.volume()).epsilon(1e-9));
  Polytope s = random_simplex3(rng);
  for (int alpha = 1; alpha <= 2; ++alpha)
    CHECK(mixed_volume_via_measures(s, s, alpha) ==
          doctest::Approx(s.volume()).epsilon(1e-8));
}

TEST_CASE("measure bridge agrees with the polynomial oracle in d=3") {
  std::mt19937_64 rng(61);
  Polytope cube = unit_cube3();
  Polytope simplex = random_simplex3(rng);
  for (int alpha : {1, 2}) {
    double via = mixed_volume_via_measures(cube, simplex, alpha);
    double oracle = oracle_mixed_volume(cube, simplex, alpha);
    CHECK(via == doctest::Approx(oracle).epsilon(1e-7));
  }
}
