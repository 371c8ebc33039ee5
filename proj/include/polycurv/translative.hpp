#pragma once

#include "polycurv/mixed.hpp"

namespace polycurv {

enum class Integrator { MonteCarlo, Grid };

/// Specification of one translative-formula check: integrate the k-th support
/// measure of P_1 cap (P_2 + z_2) cap ... over the translations and compare
/// with the face-tuple expansion summed over all index tuples with
/// r_1 + ... + r_q = (q-1)d + k.
struct TifSpec {
  std::vector<Polytope> bodies;
  int k = 0;
  std::vector<SpatialRegion> b;  // empty means all-space for every body
  SphericalRegion c = SphericalRegion::all();
  Integrator integrator = Integrator::MonteCarlo;
  double grid_step = 0.05;  // per-axis step of the deterministic integrator
  McConfig mc;
};

struct TifSide {
  double value = 0.0;
  double std_error = 0.0;  // 0 for deterministic evaluations
};

struct TifReport {
  TifSide lhs;
  TifSide rhs;
  std::map<std::vector<int>, double> rhs_breakdown;  // index tuple -> contribution
  long long empty_translates = 0;
  long long degenerate_translates = 0;
  double discrepancy = 0.0;        // |lhs - rhs|
  double discrepancy_sigma = 0.0;  // |lhs - rhs| / combined std error (MC only)
};

/// Translation-integral side, integrated over the product of windows
/// bbox(P_1) + (-bbox(P_i)).
TifSide tif_lhs(const TifSpec& spec, long long* empty_translates = nullptr,
                long long* degenerate_translates = nullptr);

/// Face-tuple expansion side, with per-tuple breakdown.
TifSide tif_rhs(const TifSpec& spec, std::map<std::vector<int>, double>* breakdown = nullptr);

TifReport tif_verify(const TifSpec& spec);

}  // namespace polycurv
