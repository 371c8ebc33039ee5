#include "polycurv/corpus.hpp"

#include <cmath>
#include <numbers>

namespace polycurv {

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

Polytope random_polygon(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(3, max_vertices);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (;;) {
    const int n = nv(rng);
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) pts.push_back(vec2(unif(rng), unif(rng)));
    try {
      return Polytope::from_vertices(pts);
    } catch (const DegenerateInput&) {
      // nearly collinear draw; try again
    }
  }
}

Polytope random_circle_polygon(std::mt19937_64& rng, int vertices, double radius) {
  std::uniform_real_distribution<double> unif(0.0, 2.0 * std::numbers::pi);
  for (;;) {
    std::vector<double> angles;
    for (int i = 0; i < vertices; ++i) angles.push_back(unif(rng));
    std::sort(angles.begin(), angles.end());
    bool spread = true;
    for (int i = 0; i < vertices; ++i) {
      double gap = (i + 1 < vertices ? angles[i + 1] : angles[0] + 2 * std::numbers::pi) -
                   angles[i];
      if (gap < 0.05 || gap > std::numbers::pi - 0.05) spread = false;
    }
    if (!spread) continue;
    std::vector<Vec> pts;
    for (double a : angles) pts.push_back(vec2(radius * std::cos(a), radius * std::sin(a)));
    return Polytope::from_polygon_loop(pts);
  }
}

Polytope random_simplex3(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (;;) {
    std::vector<Vec> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(vec3(unif(rng), unif(rng), unif(rng)));
    Mat m(3, 3);
    for (int i = 0; i < 3; ++i) m.col(i) = pts[i + 1] - pts[0];
    if (std::abs(m.determinant()) < 0.05) continue;
    return Polytope::from_vertices(pts);
  }
}

Polytope random_polytope3(std::mt19937_64& rng, int max_points) {
  std::uniform_int_distribution<int> np(4, max_points);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const int n = np(rng);
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) {
      Vec v = vec3(gauss(rng), gauss(rng), gauss(rng));
      double nrm = v.norm();
      if (nrm < 1e-6) continue;
      pts.push_back(v / nrm);
    }
    if (static_cast<int>(pts.size()) < 4) continue;
    try {
      Polytope p = Polytope::from_vertices(pts);
      if (p.volume() > 0.05) return p;
    } catch (const DegenerateInput&) {
    }
  }
}

Polytope unit_cube3() {
  std::vector<Vec> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(vec3(i & 1, (i >> 1) & 1, (i >> 2) & 1));
  return Polytope::from_vertices(pts);
}

Polytope unit_square() {
  return Polytope::from_vertices({vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)});
}

Mat random_rotation(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

}  // namespace polycurv
