#include "polycurv/curvature.hpp"

#include <cmath>

namespace polycurv {

double external_angle(const Polytope& p, const Face& f) {
  const int d = p.dim();
  if (f.dim == d) return 1.0;
  PolyhedralCone n = p.normal_cone(f);
  const int m = d - f.dim;
  Estimate gamma = cone_spherical_measure(n, SphericalRegion::all(), McConfig{});
  return gamma.value / sphere_surface(m);
}

double curvature_measure(const Polytope& p, const CurvatureQuery& query,
                         const McConfig& cfg) {
  const int d = p.dim();
  if (query.k < 0 || query.k > d) throw ValidationError("curvature index out of range");
  if (query.k == d) return p.face_measure(p.body(), query.b);

  double total = 0.0;
  for (const Face& f : p.faces(query.k)) {
    PolyhedralCone n = p.normal_cone(f);
    Estimate gamma = cone_spherical_measure(n, query.c, cfg);
    if (gamma.value == 0.0) continue;
    double area = p.face_measure(f, query.b);
    if (area == 0.0) continue;
    total += gamma.value / sphere_surface(d - query.k) * area;
  }
  return total;
}

double intrinsic_volume(const Polytope& p, int k) {
  CurvatureQuery q;
  q.k = k;
  return curvature_measure(p, q);
}

double steiner_volume(const Polytope& p, double rho) {
  const int d = p.dim();
  double total = 0.0;
  for (int k = 0; k <= d; ++k)
    total += ball_volume(d - k) * std::pow(rho, d - k) * intrinsic_volume(p, k);
  return total;
}

Estimate mc_parallel_volume(const Polytope& p, double rho, const McConfig& cfg) {
  const int d = p.dim();
  Vec lo, hi;
  p.bounding_box(lo, hi);
  Vec a = lo.array() - rho;
  Vec b = hi.array() + rho;
  double box_vol = 1.0;
  for (int i = 0; i < d; ++i) box_vol *= b[i] - a[i];

  Estimate e = mc_run(cfg, [&](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Vec x(d);
    for (int i = 0; i < d; ++i) x[i] = a[i] + (b[i] - a[i]) * unif(rng);
    return p.distance(x) <= rho ? 1.0 : 0.0;
  });
  e.value *= box_vol;
  e.std_error *= box_vol;
  return e;
}

}  // namespace polycurv
