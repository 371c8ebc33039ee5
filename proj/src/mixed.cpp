#include "polycurv/mixed.hpp"

#include <cmath>

namespace polycurv {

namespace {
constexpr double kBracketTol = 1e-12;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

MixedMeasureReport mixed_curvature_measure(const std::vector<Polytope>& bodies,
                                           const MixedQuery& query,
                                           const McConfig& cfg) {
  const int q = static_cast<int>(bodies.size());
  if (q == 0) throw ValidationError("no bodies");
  if (static_cast<int>(query.r.size()) != q)
    throw ValidationError("index tuple size does not match body count");
  const int d = bodies[0].dim();
  for (const Polytope& p : bodies)
    if (p.dim() != d) throw ValidationError("mixed bodies in different ambient dimensions");
  std::vector<SpatialRegion> regions = query.b;
  if (regions.empty()) regions.assign(q, SpatialRegion::all());
  if (static_cast<int>(regions.size()) != q)
    throw ValidationError("spatial region count does not match body count");

  int order_sum = 0;
  for (int ri : query.r) order_sum += ri;
  if (order_sum < (q - 1) * d || order_sum > q * d)
    throw ValidationError("order sum must lie in [(q-1)d, qd]");

  MixedMeasureReport report;

  // Bodies with index d contribute a plain volume factor.
  double vol_factor = 1.0;
  std::vector<int> active;
  for (int i = 0; i < q; ++i) {
    if (query.r[i] < 0 || query.r[i] > d) throw ValidationError("face index out of range");
    if (query.r[i] == d)
      vol_factor *= bodies[i].face_measure(bodies[i].body(), regions[i]);
    else
      active.push_back(i);
  }
  if (vol_factor == 0.0) return report;
  if (active.empty()) {
    report.value = vol_factor;
    return report;
  }

  const int qa = static_cast<int>(active.size());
  int m = 0;  // dimension of the span of every admissible summed normal cone
  for (int i : active) m += d - query.r[i];
  if (m > d) {
    // The complements cannot be independent, every bracket vanishes.
    return report;
  }
  const double omega = sphere_surface(m);

  std::vector<std::vector<Face>> face_lists(qa);
  for (int a = 0; a < qa; ++a) face_lists[a] = bodies[active[a]].faces(query.r[active[a]]);

  std::vector<int> idx(qa, 0);
  double total = 0.0;
  double err_sq = 0.0;
  while (true) {
    bool done = false;

    std::vector<Subspace> spans;
    spans.reserve(qa);
    for (int a = 0; a < qa; ++a) {
      const Face& f = face_lists[a][idx[a]];
      spans.push_back(Subspace::from_span(d, f.direction_basis));
    }
    double br = bracket(spans, d);
    if (br > kBracketTol) {
      std::vector<PolyhedralCone> cones;
      cones.reserve(qa);
      for (int a = 0; a < qa; ++a)
        cones.push_back(bodies[active[a]].normal_cone(face_lists[a][idx[a]]));
      PolyhedralCone sum = qa == 1 ? cones[0] : cone_sum(cones);
      if (!sum.is_pointed()) {
        ++report.degenerate_tuples_skipped;
      } else {
        Estimate gamma = cone_spherical_measure(sum, query.c, cfg);
        double support = 1.0;
        for (int a = 0; a < qa && support != 0.0; ++a)
          support *= bodies[active[a]].face_measure(face_lists[a][idx[a]],
                                                    regions[active[a]]);
        if (gamma.value != 0.0 && support != 0.0) {
          MixedContribution contrib;
          contrib.face_ids = idx;
          contrib.gamma = gamma.value / omega;
          contrib.bracket = br;
          contrib.support = support;
          contrib.value = contrib.gamma * br * support;
          total += contrib.value;
          double e = gamma.std_error / omega * br * support;
          err_sq += e * e;
          report.contributions.push_back(std::move(contrib));
        }
      }
    }

    for (int a = qa - 1; a >= 0; --a) {
      if (++idx[a] < static_cast<int>(face_lists[a].size())) break;
      idx[a] = 0;
      if (a == 0) done = true;
    }
    if (done) break;
  }

  report.value = vol_factor * total;
  report.std_error = vol_factor * std::sqrt(err_sq);
  for (MixedContribution& contrib : report.contributions) contrib.value *= vol_factor;
  return report;
}

double mixed_volume_via_measures(const Polytope& k1, const Polytope& k2, int alpha,
                                 const McConfig& cfg) {
  const int d = k1.dim();
  if (k2.dim() != d) throw ValidationError("mixed volume bodies in different dimensions");
  if (alpha < 0 || alpha > d) throw ValidationError("mixed volume index out of range");
  if (alpha == d) return k1.volume();
  if (alpha == 0) return k2.volume();
  MixedQuery query;
  query.r = {alpha, d - alpha};
  MixedMeasureReport rep =
      mixed_curvature_measure({k1, k2.reflected()}, query, cfg);
  return rep.value / binom(d, alpha);
}

double oracle_mixed_volume(const Polytope& k1, const Polytope& k2, int alpha) {
  const int d = k1.dim();
  if (k2.dim() != d) throw ValidationError("mixed volume bodies in different dimensions");
  if (alpha < 0 || alpha > d) throw ValidationError("mixed volume index out of range");
  Mat vander(d + 1, d + 1);
  Vec vols(d + 1);
  for (int s = 0; s <= d; ++s) {
    double lambda = s + 1.0;
    Polytope sum = minkowski_sum(k1.scaled(lambda), k2);
    vols[s] = sum.volume();
    for (int j = 0; j <= d; ++j) vander(s, j) = std::pow(lambda, j);
  }
  Vec coeffs = vander.fullPivLu().solve(vols);
  return coeffs[alpha] / binom(d, alpha);
}

}  // namespace polycurv
