#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "polycurv/corpus.hpp"

using namespace polycurv;

namespace {

Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

}  // namespace

TEST_CASE("square lattice counts") {
  Polytope p = unit_square();
  CHECK(p.dim() == 2);
  CHECK(p.faces(0).size() == 4);
  CHECK(p.faces(1).size() == 4);
  CHECK(p.faces(2).size() == 1);
  CHECK(p.volume() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cube lattice counts") {
  Polytope p = unit_cube3();
  CHECK(p.faces(0).size() == 8);
  CHECK(p.faces(1).size() == 12);
  CHECK(p.faces(2).size() == 6);
  CHECK(p.volume() == doctest::Approx(1.0).epsilon(1e-12));
  for (const Face& f : p.faces(2))
    CHECK(p.face_measure(f, SpatialRegion::all()) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(Polytope::from_vertices({vec2(0, 0), vec2(1, 1), vec2(2, 2)}),
                  DegenerateInput);
  CHECK_THROWS_AS(
      Polytope::from_vertices({vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0), vec3(1, 1, 0)}),
      DegenerateInput);
}

TEST_CASE("normal cones of the square") {
  Polytope p = unit_square();
  for (const Face& e : p.faces(1)) {
    PolyhedralCone n = p.normal_cone(e);
    REQUIRE(n.generators.size() == 1);
    CHECK(n.is_pointed());
    CHECK(n.dim() == 1);
  }
  for (const Face& v : p.faces(0)) {
    PolyhedralCone n = p.normal_cone(v);
    CHECK(n.dim() == 2);
    CHECK(n.is_pointed());
  }
  CHECK(p.normal_cone(p.body()).is_zero());
}

TEST_CASE("vertex normal cone of the cube spans three facets") {
  Polytope p = unit_cube3();
  for (const Face& v : p.faces(0)) {
    PolyhedralCone n = p.normal_cone(v);
    CHECK(n.generators.size() == 3);
    CHECK(n.dim() == 3);
    CHECK(n.is_pointed());
  }
}

TEST_CASE("cone membership and pointedness") {
  PolyhedralCone quadrant{2, {vec2(1, 0), vec2(0, 1)}};
  CHECK(quadrant.is_pointed());
  CHECK(quadrant.contains(vec2(1, 1).normalized()));
  CHECK_FALSE(quadrant.contains(vec2(-1, 0.2).normalized()));

  PolyhedralCone halfplane{2, {vec2(1, 0), vec2(-1, 0), vec2(0, 1)}};
  CHECK_FALSE(halfplane.is_pointed());
}

TEST_CASE("facet inequalities hold on every vertex") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Polytope p = trial % 2 ? random_polygon(rng) : random_polytope3(rng);
    for (const Vec& v : p.vertices())
      for (const Halfspace& h : p.facet_halfspaces())
        CHECK(h.normal.dot(v) <= h.offset + 1e-9);
    // each facet carries at least d affinely independent vertices
    for (const Face& f : p.faces(p.dim() - 1))
      CHECK(static_cast<int>(f.vertex_ids.size()) >= p.dim());
  }
}

TEST_CASE("intersection of identical translates is idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope p = trial % 2 ? random_polygon(rng) : random_polytope3(rng);
    IntersectionResult r = intersect(p, p.translated(Vec::Zero(p.dim())));
    REQUIRE(r.status == IntersectionResult::Status::NonEmpty);
    CHECK(r.polytope->volume() == doctest::Approx(p.volume()).epsilon(1e-9));
  }
}

TEST_CASE("disjoint and touching intersections") {
  Polytope p = unit_square();
  Vec far = vec2(5, 0);
  CHECK(intersect(p, p.translated(far)).status == IntersectionResult::Status::Empty);
  Vec touch = vec2(1, 0);
  CHECK(intersect(p, p.translated(touch)).status ==
        IntersectionResult::Status::Degenerate);

  Polytope c = unit_cube3();
  CHECK(intersect(c, c.translated(vec3(1, 0, 0))).status ==
        IntersectionResult::Status::Degenerate);
  CHECK(intersect(c, c.translated(vec3(3, 0, 0))).status ==
        IntersectionResult::Status::Empty);
}

TEST_CASE("overlapping squares intersect in the overlap rectangle") {
  Polytope p = unit_square();
  IntersectionResult r = intersect(p, p.translated(vec2(0.25, 0.5)));
  REQUIRE(r.status == IntersectionResult::Status::NonEmpty);
  CHECK(r.polytope->volume() == doctest::Approx(0.75 * 0.5).epsilon(1e-10));
}

TEST_CASE("minkowski sums") {
  Polytope p = unit_square();
  Polytope s = minkowski_sum(p, p);
  CHECK(s.volume() == doctest::Approx(4.0).epsilon(1e-10));
  Polytope c = unit_cube3();
  CHECK(minkowski_sum(c, c.reflected()).volume() == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("volume under transforms") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope p = trial % 2 ? random_polygon(rng) : random_simplex3(rng);
    const double v = p.volume();
    Mat rot = random_rotation(rng, p.dim());
    CHECK(p.rotated(rot).volume() == doctest::Approx(v).epsilon(1e-9));
    CHECK(p.scaled(2.0).volume() == doctest::Approx(v * std::pow(2.0, p.dim())).epsilon(1e-9));
    CHECK(p.reflected().volume() == doctest::Approx(v).epsilon(1e-9));
    Vec z = Vec::Constant(p.dim(), 0.7);
    CHECK(p.translated(z).volume() == doctest::Approx(v).epsilon(1e-9));
  }
}

TEST_CASE("face measure restricted to a box") {
  Polytope p = unit_square();
  SpatialRegion half = SpatialRegion::box(vec2(0, 0), vec2(0.5, 1));
  CHECK(p.face_measure(p.body(), half) == doctest::Approx(0.5).epsilon(1e-10));
  double edge_total = 0.0;
  for (const Face& e : p.faces(1)) edge_total += p.face_measure(e, half);
  CHECK(edge_total == doctest::Approx(2.0).epsilon(1e-10));  // 2*0.5 + left edge + none
}

TEST_CASE("distance function") {
  Polytope p = unit_square();
  CHECK(p.distance(vec2(0.5, 0.5)) == 0.0);
  CHECK(p.distance(vec2(2, 0.5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.distance(vec2(2, 2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  Polytope c = unit_cube3();
  CHECK(c.distance(vec3(0.5, 0.5, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.distance(vec3(2, 2, 2)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("combinatorial input round trip for the square") {
  std::vector<Vec> verts = {vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)};
  std::vector<Halfspace> facets = {{vec2(0, -1), 0}, {vec2(1, 0), 1}, {vec2(0, 1), 1},
                                   {vec2(-1, 0), 0}};
  std::vector<std::vector<std::vector<int>>> faces(3);
  faces[0] = {{0}, {1}, {2}, {3}};
  faces[1] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  faces[2] = {{0, 1, 2, 3}};
  Polytope p = Polytope::from_combinatorial(2, verts, facets, faces);
  CHECK(p.volume() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p.faces(1).size() == 4);
}
