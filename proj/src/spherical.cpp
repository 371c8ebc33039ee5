#include "polycurv/spherical.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "detail_nnls.hpp"
#include "polycurv/errors.hpp"
#include "polycurv/multilinear.hpp"

namespace polycurv {

namespace {
constexpr double kPi = std::numbers::pi;

Mat columns(const std::vector<Vec>& v) {
  Mat m(v.empty() ? 0 : v.front().size(), static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = v[static_cast<size_t>(j)];
  return m;
}

double wrap_angle(double a) {
  while (a <= -kPi) a += 2 * kPi;
  while (a > kPi) a -= 2 * kPi;
  return a;
}
}  // namespace

double sphere_surface(int n) {
  if (n < 1) throw ValidationError("sphere_surface: n must be >= 1");
  return 2.0 * std::exp(0.5 * n * std::log(kPi) - std::lgamma(0.5 * n));
}

double ball_volume(int n) {
  if (n < 0) throw ValidationError("ball_volume: n must be >= 0");
  return std::exp(0.5 * n * std::log(kPi) - std::lgamma(1.0 + 0.5 * n));
}

// --- SphericalRegion ------------------------------------------------------

SphericalRegion SphericalRegion::all() { return SphericalRegion(); }

SphericalRegion SphericalRegion::cap(Vec axis, double angular_radius) {
  const double n = axis.norm();
  if (n < 1e-12) throw ValidationError("cap: zero axis");
  if (angular_radius <= 0.0 || angular_radius > kPi)
    throw ValidationError("cap: angular radius must lie in (0, pi]");
  SphericalRegion r;
  r.kind_ = Kind::Cap;
  r.constraints_.push_back({axis / n, std::cos(angular_radius)});
  return r;
}

SphericalRegion SphericalRegion::cone(const PolyhedralCone& k) {
  SphericalRegion r;
  r.kind_ = Kind::Cone;
  for (const Halfspace& h : k.halfspaces()) r.constraints_.push_back({-h.normal, 0.0});
  return r;
}

bool SphericalRegion::contains(const Vec& u, double tol) const {
  for (const LinearConstraint& c : constraints_)
    if (c.normal.dot(u) < c.bound - tol) return false;
  return true;
}

SphericalRegion SphericalRegion::rotated(const Mat& r) const {
  SphericalRegion out = *this;
  for (LinearConstraint& c : out.constraints_) c.normal = r * c.normal;
  return out;
}

// --- cone measures --------------------------------------------------------

namespace {

// Length of the arc cut out of a pointed planar cone by the region constraints.
double planar_arc_measure(const PolyhedralCone& k, const SphericalRegion& c) {
  const std::vector<Vec> basis = k.span_basis();
  const Mat b = columns(basis);
  // generator angles relative to the first generator
  double a0 = 0.0;
  bool first = true;
  double lo = 0.0, hi = 0.0;
  for (const Vec& g : k.generators) {
    const Vec s = b.transpose() * g.normalized();
    const double ang = std::atan2(s(1), s(0));
    if (first) {
      a0 = ang;
      first = false;
      continue;
    }
    const double rel = wrap_angle(ang - a0);
    lo = std::min(lo, rel);
    hi = std::max(hi, rel);
  }
  std::vector<std::pair<double, double>> intervals = {{lo, hi}};
  for (const SphericalRegion::LinearConstraint& lc : c.constraints()) {
    const Vec a = b.transpose() * lc.normal;
    const double amp = a.norm();
    std::vector<std::pair<double, double>> next;
    if (amp < 1e-14) {
      if (lc.bound <= 1e-14) next = intervals;  // constraint vacuous in the plane
      intervals = std::move(next);
      continue;
    }
    const double ratio = lc.bound / amp;
    if (ratio > 1.0) {
      intervals.clear();
      continue;
    }
    const double beta = ratio < -1.0 ? kPi : std::acos(ratio);
    const double psi = wrap_angle(std::atan2(a(1), a(0)) - a0);
    for (const auto& [x, y] : intervals)
      for (int shift = -1; shift <= 1; ++shift) {
        const double s = 2 * kPi * shift;
        const double xx = std::max(x, psi - beta + s);
        const double yy = std::min(y, psi + beta + s);
        if (yy > xx) next.push_back({xx, yy});
      }
    intervals = std::move(next);
  }
  double total = 0.0;
  for (const auto& [x, y] : intervals) total += y - x;
  return total;
}

// Solid angle of a pointed full 3-dimensional cone via a spherical fan.
double solid_angle_3d(const PolyhedralCone& k) {
  const std::vector<Vec> basis = k.span_basis();
  const Mat b = columns(basis);
  std::vector<Eigen::Vector3d> rays;
  for (const Vec& g : k.extreme_rays()) {
    const Vec s = b.transpose() * g;
    rays.emplace_back(s(0), s(1), s(2));
  }
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  for (const auto& r : rays) axis += r;
  axis.normalize();
  Eigen::Vector3d ref = rays.front() - rays.front().dot(axis) * axis;
  if (ref.norm() < 1e-12) ref = axis.unitOrthogonal();
  ref.normalize();
  const Eigen::Vector3d ref2 = axis.cross(ref);
  std::sort(rays.begin(), rays.end(),
            [&](const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
              return std::atan2(p.dot(ref2), p.dot(ref)) <
                     std::atan2(q.dot(ref2), q.dot(ref));
            });
  double total = 0.0;
  for (size_t i = 1; i + 1 < rays.size(); ++i) {
    const Eigen::Vector3d& a = rays[0];
    const Eigen::Vector3d& bb = rays[i];
    const Eigen::Vector3d& cc = rays[i + 1];
    const double num = std::abs(a.dot(bb.cross(cc)));
    const double den = 1.0 + a.dot(bb) + bb.dot(cc) + cc.dot(a);
    total += 2.0 * std::atan2(num, den);
  }
  return total;
}

}  // namespace

Estimate cone_spherical_measure(const PolyhedralCone& k, const SphericalRegion& c,
                                const McConfig& cfg) {
  Estimate e;
  e.seed = cfg.seed;
  if (k.is_zero()) return e;
  if (!k.is_pointed()) throw NonPointedCone("cone_spherical_measure: cone contains a line");
  const int m = k.dim();
  if (m == 1) {
    const Vec u = k.generators.front().normalized();
    e.value = c.contains(u, 1e-9) ? 1.0 : 0.0;
    return e;
  }
  if (m == 2) {
    e.value = planar_arc_measure(k, c);
    return e;
  }
  if (m == 3 && c.kind() == SphericalRegion::Kind::All) {
    e.value = solid_angle_3d(k);
    return e;
  }
  // Monte Carlo on the unit sphere of lin K
  const Mat b = columns(k.span_basis());
  const Mat gens = columns(k.generators);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Estimate hit = mc_run(cfg, [&](std::mt19937_64& rng) -> double {
    Vec s(m);
    for (int i = 0; i < m; ++i) s(i) = gauss(rng);
    s.normalize();
    const Vec u = b * s;
    if (!c.contains(u, 1e-12)) return 0.0;
    return detail::nnls_residual(gens, u) <= 1e-9 ? 1.0 : 0.0;
  });
  const double area = sphere_surface(m);
  e.value = area * hit.value;
  e.std_error = area * hit.std_error;
  e.samples = hit.samples;
  return e;
}

// --- projection moments ---------------------------------------------------

double projection_moment(int d, int l, double p) {
  if (d < 2 || l < 1 || l > d - 1)
    throw ValidationError("projection_moment: need 1 <= l <= d-1");
  if (p + l <= 0.0)
    throw DivergentIntegral("projection_moment: requires p + l > 0");
  const double log_val = std::log(sphere_surface(l)) + std::log(sphere_surface(d - l)) +
                         std::lgamma(0.5 * (d - l)) + std::lgamma(0.5 * (p + l)) -
                         std::log(2.0) - std::lgamma(0.5 * (d + p));
  return std::exp(log_val);
}

Estimate mc_projection_moment(int d, int l, double p, const McConfig& cfg) {
  if (d < 2 || l < 1 || l > d - 1)
    throw ValidationError("mc_projection_moment: need 1 <= l <= d-1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Estimate e = mc_run(cfg, [&](std::mt19937_64& rng) -> double {
    Vec u(d);
    for (int i = 0; i < d; ++i) u(i) = gauss(rng);
    u.normalize();
    return std::pow(u.head(l).norm(), p);
  });
  const double total = sphere_surface(d);
  e.value *= total;
  e.std_error *= total;
  return e;
}

// --- simplex weight -------------------------------------------------------

double mu_weight(const std::vector<Vec>& u, const std::vector<int>& r,
                 const SphericalRegion& c, const McConfig& cfg) {
  const int q = static_cast<int>(u.size());
  if (q == 0 || u.size() != r.size())
    throw ValidationError("mu_weight: need matching nonempty u and r");
  const int d = static_cast<int>(u.front().size());
  int sum_r = 0;
  for (int ri : r) {
    if (ri < 0 || ri > d - 1) throw ValidationError("mu_weight: r_i out of [0, d-1]");
    sum_r += ri;
  }
  const int k = sum_r - (q - 1) * d;
  if (k < 0) throw ValidationError("mu_weight: order sum below (q-1)d");
  const Mat um = columns(u);
  {
    Eigen::JacobiSVD<Mat> svd(um);
    if (svd.singularValues().size() < q || svd.singularValues()(q - 1) < 1e-10)
      return 0.0;  // dependent directions
  }
  const double norm_const = sphere_surface(d - k);
  auto integrand = [&](const Vec& t) -> double {
    Vec ut = Vec::Zero(d);
    double weight = 1.0;
    for (int i = 0; i < q; ++i) {
      ut += t(i) * u[static_cast<size_t>(i)];
      weight *= std::pow(t(i), d - r[static_cast<size_t>(i)]);
    }
    const double len = ut.norm();
    if (len < 1e-300) return 0.0;
    if (!c.contains(ut / len, 1e-12)) return 0.0;
    return weight * std::pow(len, -(d - k));
  };
  using boost::math::quadrature::gauss_kronrod;
  if (q == 1) {
    Vec t(1);
    t << 1.0;
    return integrand(t) / norm_const;
  }
  if (q == 2) {
    auto f = [&](double theta) {
      Vec t(2);
      t << std::cos(theta), std::sin(theta);
      return integrand(t);
    };
    const double val = gauss_kronrod<double, 31>::integrate(f, 0.0, kPi / 2, 12, 1e-10);
    return val / norm_const;
  }
  if (q == 3) {
    auto outer = [&](double th1) {
      auto inner = [&](double th2) {
        Vec t(3);
        t << std::cos(th1), std::sin(th1) * std::cos(th2), std::sin(th1) * std::sin(th2);
        return integrand(t);
      };
      return std::sin(th1) *
             gauss_kronrod<double, 31>::integrate(inner, 0.0, kPi / 2, 10, 1e-9);
    };
    const double val = gauss_kronrod<double, 31>::integrate(outer, 0.0, kPi / 2, 10, 1e-9);
    return val / norm_const;
  }
  // q >= 4: Monte Carlo on the positive orthant patch
  std::normal_distribution<double> gauss(0.0, 1.0);
  Estimate e = mc_run(cfg, [&](std::mt19937_64& rng) -> double {
    Vec t(q);
    for (int i = 0; i < q; ++i) t(i) = std::abs(gauss(rng));
    t.normalize();
    return integrand(t);
  });
  const double patch = sphere_surface(q) / std::pow(2.0, q);
  return e.value * patch / norm_const;
}

double simplex_jacobian(const std::vector<Vec>& u, const Vec& t,
                        const std::vector<int>& r,
                        const std::vector<std::vector<Vec>>& tangent_frames) {
  const int q = static_cast<int>(u.size());
  if (q == 0 || u.size() != r.size() || t.size() != q ||
      tangent_frames.size() != u.size())
    throw ValidationError("simplex_jacobian: inconsistent arguments");
  const int d = static_cast<int>(u.front().size());
  int sum_r = 0;
  for (int ri : r) sum_r += ri;
  const int k = sum_r - (q - 1) * d;
  const Mat um = columns(u);
  {
    Eigen::JacobiSVD<Mat> svd(um);
    if (svd.singularValues().size() < q || svd.singularValues()(q - 1) < 1e-10) return 0.0;
  }
  Vec ut = Vec::Zero(d);
  double tpow = 1.0;
  for (int i = 0; i < q; ++i) {
    ut += t(i) * u[static_cast<size_t>(i)];
    tpow *= std::pow(t(i), d - 1 - r[static_cast<size_t>(i)]);
  }
  std::vector<Vec> wedge;
  for (const auto& frame : tangent_frames)
    for (const Vec& a : frame) wedge.push_back(a);
  for (const Vec& ui : u) wedge.push_back(ui);
  return std::pow(ut.norm(), -(d - k)) * tpow * gram_volume(wedge);
}

}  // namespace polycurv
