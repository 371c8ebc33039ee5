#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "polycurv/errors.hpp"
#include "polycurv/multilinear.hpp"

using namespace polycurv;

namespace {

Vec unit(int d, int i) {
  Vec v = Vec::Zero(d);
  v(i) = 1.0;
  return v;
}

Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec random_vec(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = gauss(rng);
  return v;
}

// <v1 ^ ... ^ vd, Omega^d> as a determinant.
double top_pairing(const std::vector<Vec>& vs) {
  const int d = static_cast<int>(vs.front().size());
  Mat m(d, d);
  for (int i = 0; i < d; ++i) m.col(i) = vs[static_cast<size_t>(i)];
  return m.determinant();
}

}  // namespace

TEST_CASE("gram volume basics") {
  CHECK(gram_volume({unit(3, 0), unit(3, 1)}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gram_volume({vec2(1, 0), vec2(1, 1)}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gram_volume({unit(2, 0), 2.0 * unit(2, 0)}) == 0.0);
  CHECK_THROWS_AS(gram_volume({unit(2, 0), unit(3, 0)}), ValidationError);
}

TEST_CASE("gram volume invariances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 3 + static_cast<int>(rng() % 4);
    int m = 2 + static_cast<int>(rng() % (d - 1));
    std::vector<Vec> vs;
    for (int i = 0; i < m; ++i) vs.push_back(random_vec(rng, d));
    double base = gram_volume(vs);
    std::vector<Vec> perm = vs;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(gram_volume(perm) == doctest::Approx(base).epsilon(1e-10));
    // an orthonormal basis of the same span has volume 1
    Subspace s = Subspace::from_span(d, vs);
    CHECK(gram_volume(s.basis) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("hodge star in the plane and space") {
  SimpleMultivector e1(2, {unit(2, 0)});
  SimpleMultivector s1 = hodge_star(e1);
  REQUIRE(s1.grade() == 1);
  CHECK((s1.vectors[0] - unit(2, 1)).norm() == doctest::Approx(0.0).epsilon(1e-12));

  SimpleMultivector e2(2, {unit(2, 1)});
  SimpleMultivector s2 = hodge_star(e2);
  CHECK((s2.vectors[0] + unit(2, 0)).norm() == doctest::Approx(0.0).epsilon(1e-12));

  SimpleMultivector e12(3, {unit(3, 0), unit(3, 1)});
  SimpleMultivector s12 = hodge_star(e12);
  REQUIRE(s12.grade() == 1);
  CHECK((s12.vectors[0] - unit(3, 2)).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("hodge star pairing identity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 2 + static_cast<int>(rng() % 5);
    int m = 1 + static_cast<int>(rng() % d);
    std::vector<Vec> vs;
    for (int i = 0; i < m; ++i) vs.push_back(random_vec(rng, d));
    SimpleMultivector a(d, vs);
    SimpleMultivector b = hodge_star(a);
    REQUIRE(b.grade() == d - m);
    CHECK(b.norm() == doctest::Approx(a.norm()).epsilon(1e-9));
    std::vector<Vec> all = vs;
    all.insert(all.end(), b.vectors.begin(), b.vectors.end());
    CHECK(b.coeff * top_pairing(all) ==
          doctest::Approx(a.norm() * a.norm()).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("p-product examples") {
  SimpleMultivector e1(2, {unit(2, 0)});
  SimpleMultivector e2(2, {unit(2, 1)});
  CHECK(p_product({e1, e2}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p_product({e1, e1}) == doctest::Approx(0.0).epsilon(1e-12));

  double c = std::cos(std::acos(-1.0) / 3.0), s = std::sin(std::acos(-1.0) / 3.0);
  SimpleMultivector tilted(2, {vec2(c, s)});
  CHECK(std::abs(p_product({e1, tilted})) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

  CHECK_THROWS_AS(p_product({e1, SimpleMultivector(2, {unit(2, 0), unit(2, 1)})}),
                  ValidationError);
}

TEST_CASE("bracket examples") {
  Subspace x_axis = Subspace::from_span(2, {unit(2, 0)});
  CHECK(bracket({x_axis, x_axis}, 2) == doctest::Approx(0.0).epsilon(1e-12));

  double c = std::cos(std::acos(-1.0) / 3.0), s = std::sin(std::acos(-1.0) / 3.0);
  Subspace tilted = Subspace::from_span(2, {vec2(c, s)});
  CHECK(bracket({x_axis, tilted}, 2) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

  Subspace xy = Subspace::from_span(3, {unit(3, 0), unit(3, 1)});
  Subspace xz = Subspace::from_span(3, {unit(3, 0), unit(3, 2)});
  CHECK(bracket({xy, xz}, 3) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(bracket({x_axis, x_axis, x_axis}, 2), ValidationError);
}

TEST_CASE("p-product equals bracket in absolute value") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 200) {
    int d = 2 + static_cast<int>(rng() % 5);
    // split d into q codimensions >= 1
    std::vector<int> codims;
    int left = d;
    while (left > 0) {
      int c = 1 + static_cast<int>(rng() % left);
      codims.push_back(c);
      left -= c;
    }
    bool ok = true;
    std::vector<SimpleMultivector> alphas;
    std::vector<Subspace> spans;
    for (int c : codims) {
      int grade = d - c;
      if (grade == 0) {
        ok = false;  // zero-grade factors are not represented
        break;
      }
      std::vector<Vec> vs;
      for (int i = 0; i < grade; ++i) vs.push_back(random_vec(rng, d));
      SimpleMultivector a(d, vs);
      if (a.norm() < 1e-6) {
        ok = false;
        break;
      }
      // normalize to a unit simple multivector
      const double scale = std::pow(a.norm(), 1.0 / grade);
      for (Vec& v : a.vectors) v /= scale;
      alphas.push_back(a);
      spans.push_back(Subspace::from_span(d, vs));
    }
    if (!ok) continue;
    ++done;
    CHECK(std::abs(p_product(alphas)) ==
          doctest::Approx(bracket(spans, d)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("sign parity hand values") {
  SignValues v = sign_values(2, {1, 1});
  CHECK(v.c1 == 11);
  CHECK(v.c2 % 2 == 0);
  CHECK(v.c3 % 2 == 0);
  SignParities p = sign_parities(2, {1, 1});
  CHECK(p.c1 == 1);
  CHECK(p.c2 == 0);
  CHECK(p.c3 == 0);
  CHECK((v.c1 + v.c2 + v.c3 + 1) % 2 == 0);

  // q = 1: c3 is an empty sum
  CHECK(sign_values(4, {2}).c3 == 0);
}

TEST_CASE("parity identity and reduced forms on a grid") {
  for (int d = 2; d <= 5; ++d) {
    std::vector<int> r(2, 0);
    for (r[0] = 0; r[0] <= d; ++r[0]) {
      for (r[1] = 0; r[1] <= d; ++r[1]) {
        SignParities p = sign_parities(d, r);
        SignParities pr = sign_parities_reduced(d, r);
        CHECK((p.c1 + p.c2 + p.c3 + (d - 1)) % 2 == 0);
        CHECK(p.c1 == pr.c1);
        CHECK(p.c2 == pr.c2);
        CHECK(p.c3 == pr.c3);
      }
    }
  }
}
