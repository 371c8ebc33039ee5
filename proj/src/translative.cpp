#include "polycurv/translative.hpp"

#include <cmath>
#include <numbers>

namespace polycurv {

namespace {

constexpr double kWindowInflate = 1e-9;

struct Windows {
  std::vector<Vec> lo, hi;  // one window per translated body (bodies 2..q)
  double volume = 1.0;
};

Windows translation_windows(const std::vector<Polytope>& bodies) {
  const int d = bodies[0].dim();
  Vec lo1, hi1;
  bodies[0].bounding_box(lo1, hi1);
  Windows w;
  for (size_t i = 1; i < bodies.size(); ++i) {
    Vec loi, hii;
    bodies[i].bounding_box(loi, hii);
    Vec lo = lo1 - hii;
    Vec hi = hi1 - loi;
    lo.array() -= kWindowInflate;
    hi.array() += kWindowInflate;
    for (int j = 0; j < d; ++j) w.volume *= hi[j] - lo[j];
    w.lo.push_back(std::move(lo));
    w.hi.push_back(std::move(hi));
  }
  return w;
}

std::vector<SpatialRegion> effective_regions(const TifSpec& spec) {
  if (!spec.b.empty()) {
    if (spec.b.size() != spec.bodies.size())
      throw ValidationError("spatial region count does not match body count");
    return spec.b;
  }
  return std::vector<SpatialRegion>(spec.bodies.size(), SpatialRegion::all());
}

double evaluate_at(const TifSpec& spec, const std::vector<SpatialRegion>& regions,
                   const std::vector<Vec>& zs, long long& empty, long long& degenerate) {
  std::vector<const Polytope*> qs;
  for (size_t i = 1; i < spec.bodies.size(); ++i) qs.push_back(&spec.bodies[i]);
  IntersectionResult res = intersect_translates(spec.bodies[0], qs, zs);
  if (res.status == IntersectionResult::Status::Empty) {
    ++empty;
    return 0.0;
  }
  if (res.status == IntersectionResult::Status::Degenerate) {
    ++degenerate;
    return 0.0;
  }
  std::vector<SpatialRegion> moved;
  moved.push_back(regions[0]);
  for (size_t i = 1; i < regions.size(); ++i)
    moved.push_back(regions[i].translated(zs[i - 1]));
  CurvatureQuery cq;
  cq.k = spec.k;
  cq.b = SpatialRegion::intersection(moved);
  cq.c = spec.c;
  return curvature_measure(*res.polytope, cq, spec.mc);
}

void validate(const TifSpec& spec) {
  if (spec.bodies.size() < 2) throw ValidationError("need at least two bodies");
  const int d = spec.bodies[0].dim();
  for (const Polytope& p : spec.bodies)
    if (p.dim() != d) throw ValidationError("bodies in different ambient dimensions");
  if (spec.k < 0 || spec.k >= d) throw ValidationError("support measure index out of range");
}

}  // namespace

TifSide tif_lhs(const TifSpec& spec, long long* empty_translates,
                long long* degenerate_translates) {
  validate(spec);
  const int d = spec.bodies[0].dim();
  const int q = static_cast<int>(spec.bodies.size());
  std::vector<SpatialRegion> regions = effective_regions(spec);
  Windows w = translation_windows(spec.bodies);
  long long empty = 0, degenerate = 0;
  TifSide side;

  if (spec.integrator == Integrator::MonteCarlo) {
    Estimate e = mc_run(spec.mc, [&](std::mt19937_64& rng) {
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      // Degenerate (touching, lower-dimensional) intersections form a null
      // set of translations; resample them.
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Vec> zs;
        for (int i = 0; i < q - 1; ++i) {
          Vec z(d);
          for (int j = 0; j < d; ++j)
            z[j] = w.lo[i][j] + (w.hi[i][j] - w.lo[i][j]) * unif(rng);
          zs.push_back(std::move(z));
        }
        long long degenerate_before = degenerate;
        double v = evaluate_at(spec, regions, zs, empty, degenerate);
        if (degenerate == degenerate_before) return v;
      }
      return 0.0;
    });
    side.value = e.value * w.volume;
    side.std_error = e.std_error * w.volume;
  } else {
    if (q != 2) throw ValidationError("grid integrator supports exactly two bodies");
    if (spec.grid_step <= 0) throw ValidationError("grid step must be positive");
    const double h = spec.grid_step;
    const double offset = (std::numbers::sqrt2 - 1.0) / 2.0;  // irrational phase
    std::vector<long long> counts(d);
    for (int j = 0; j < d; ++j)
      counts[j] = static_cast<long long>(std::ceil((w.hi[0][j] - w.lo[0][j]) / h));
    std::vector<long long> idx(d, 0);
    double total = 0.0;
    while (true) {
      Vec z(d);
      for (int j = 0; j < d; ++j) z[j] = w.lo[0][j] + (idx[j] + offset) * h;
      bool in_window = true;
      for (int j = 0; j < d; ++j)
        if (z[j] > w.hi[0][j]) in_window = false;
      if (in_window) {
        std::vector<Vec> zs = {z};
        total += evaluate_at(spec, regions, zs, empty, degenerate);
      }
      int j = d - 1;
      for (; j >= 0; --j) {
        if (++idx[j] < counts[j]) break;
        idx[j] = 0;
      }
      if (j < 0) break;
    }
    side.value = total * std::pow(h, d);
    side.std_error = 0.0;
  }

  if (empty_translates) *empty_translates = empty;
  if (degenerate_translates) *degenerate_translates = degenerate;
  return side;
}

TifSide tif_rhs(const TifSpec& spec, std::map<std::vector<int>, double>* breakdown) {
  validate(spec);
  const int d = spec.bodies[0].dim();
  const int q = static_cast<int>(spec.bodies.size());
  std::vector<SpatialRegion> regions = effective_regions(spec);
  const int target = (q - 1) * d + spec.k;

  TifSide side;
  double err_sq = 0.0;
  std::vector<int> r(q, 0);
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == q - 1) {
      if (remaining < 0 || remaining > d) return;
      r[pos] = remaining;
      MixedQuery query;
      query.r = r;
      query.b = regions;
      query.c = spec.c;
      MixedMeasureReport rep = mixed_curvature_measure(spec.bodies, query, spec.mc);
      side.value += rep.value;
      err_sq += rep.std_error * rep.std_error;
      if (breakdown) (*breakdown)[r] = rep.value;
      return;
    }
    for (int v = 0; v <= d && v <= remaining; ++v) {
      r[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, target);
  side.std_error = std::sqrt(err_sq);
  return side;
}

TifReport tif_verify(const TifSpec& spec) {
  TifReport report;
  report.lhs = tif_lhs(spec, &report.empty_translates, &report.degenerate_translates);
  report.rhs = tif_rhs(spec, &report.rhs_breakdown);
  report.discrepancy = std::abs(report.lhs.value - report.rhs.value);
  double se = std::hypot(report.lhs.std_error, report.rhs.std_error);
  if (se > 0) report.discrepancy_sigma = report.discrepancy / se;
  return report;
}

}  // namespace polycurv
