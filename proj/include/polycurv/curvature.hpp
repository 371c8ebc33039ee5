#pragma once

#include "polycurv/spherical.hpp"

namespace polycurv {

struct CurvatureQuery {
  int k = 0;
  SpatialRegion b = SpatialRegion::all();
  SphericalRegion c = SphericalRegion::all();
};

/// External angle of P at F: normalized spherical measure of N(P, F).
double external_angle(const Polytope& p, const Face& f);

/// Curvature (support) measure C_k(P; B x C). For k = d this is the Lebesgue
/// measure of P cap B and the direction region is ignored.
double curvature_measure(const Polytope& p, const CurvatureQuery& query,
                         const McConfig& cfg = {});

/// Total measure C_k(P; all), the k-th intrinsic volume.
double intrinsic_volume(const Polytope& p, int k);

/// Exact parallel-body volume via the Steiner polynomial
/// sum_k kappa_{d-k} rho^{d-k} C_k(P; all).
double steiner_volume(const Polytope& p, double rho);

/// Hit-or-miss Monte Carlo of the parallel body, the oracle for steiner_volume.
Estimate mc_parallel_volume(const Polytope& p, double rho, const McConfig& cfg = {});

}  // namespace polycurv
