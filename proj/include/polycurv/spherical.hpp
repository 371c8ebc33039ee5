#pragma once

#include <vector>

#include "polycurv/mc.hpp"
#include "polycurv/polytope.hpp"

namespace polycurv {

/// omega_n = H^{n-1}(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2).
double sphere_surface(int n);
/// kappa_n = volume of the unit n-ball.
double ball_volume(int n);

/// Borel direction region on the sphere: everything, a geodesic cap, or the
/// sphere patch cut out by a full-dimensional pointed cone.
class SphericalRegion {
 public:
  enum class Kind { All, Cap, Cone };

  static SphericalRegion all();
  static SphericalRegion cap(Vec axis, double angular_radius);  ///< radius in (0, pi]
  static SphericalRegion cone(const PolyhedralCone& k);

  Kind kind() const { return kind_; }
  bool contains(const Vec& u, double tol = 1e-12) const;

  /// Constraints {u : normal . u >= bound} whose conjunction defines the
  /// region; empty for All.
  struct LinearConstraint {
    Vec normal;
    double bound = 0.0;
  };
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  SphericalRegion rotated(const Mat& r) const;

 private:
  SphericalRegion() = default;
  Kind kind_ = Kind::All;
  std::vector<LinearConstraint> constraints_;
};

/// H^{m-1}(K cap S^{d-1} cap C) for a pointed cone K with m = dim lin K.
/// Exact for m <= 2 (and m = 3 with C = All); Monte Carlo otherwise,
/// with the standard error reported. Exact paths return std_error 0.
Estimate cone_spherical_measure(const PolyhedralCone& k, const SphericalRegion& c,
                                const McConfig& cfg = {});

/// Integral of |p_L u|^p over the unit sphere for an l-dimensional subspace L:
/// omega_l omega_{d-l} Gamma((d-l)/2) Gamma((p+l)/2) / (2 Gamma((d+p)/2)).
double projection_moment(int d, int l, double p);

/// Sphere Monte Carlo oracle for projection_moment.
Estimate mc_projection_moment(int d, int l, double p, const McConfig& cfg = {});

/// Simplex weight mu_r(u; C): (1/omega_{d-k}) times the integral over the
/// positive orthant of S^{q-1} of 1_C(ubar(t)) prod t_i^{d-r_i} |utilde(t)|^{-(d-k)}.
/// Returns 0 when the u_i are linearly dependent.
double mu_weight(const std::vector<Vec>& u, const std::vector<int>& r,
                 const SphericalRegion& c, const McConfig& cfg = {});

/// Jacobian of the simplex-to-sphere map at (u, t):
/// |utilde(t)|^{-(d-k)} prod t_j^{d-1-r_j} |wedge of tangent frames and the u_j|.
double simplex_jacobian(const std::vector<Vec>& u, const Vec& t,
                        const std::vector<int>& r,
                        const std::vector<std::vector<Vec>>& tangent_frames);

}  // namespace polycurv
