#pragma once

#include <map>

#include "polycurv/curvature.hpp"
#include "polycurv/multilinear.hpp"

namespace polycurv {

struct MixedQuery {
  std::vector<int> r;                 // one index per body, 0 <= r_i <= d
  std::vector<SpatialRegion> b;       // empty means all-space for every body
  SphericalRegion c = SphericalRegion::all();
};

struct MixedContribution {
  std::vector<int> face_ids;  // index into faces(r_i) of each body
  double gamma = 0.0;         // normalized spherical measure of the summed normal cone
  double bracket = 0.0;
  double support = 0.0;       // product of face measures inside the spatial regions
  double value = 0.0;
};

struct MixedMeasureReport {
  double value = 0.0;
  double std_error = 0.0;
  std::vector<MixedContribution> contributions;
  int degenerate_tuples_skipped = 0;
};

/// Mixed curvature measure C_{r_1,...,r_q}(P_1,...,P_q; B_1 x ... x B_q x C)
/// as an explicit sum over face tuples. Indices with r_i = d factor out as
/// plain volumes of P_i cap B_i.
MixedMeasureReport mixed_curvature_measure(const std::vector<Polytope>& bodies,
                                           const MixedQuery& query,
                                           const McConfig& cfg = {});

/// Mixed volume V(K1[alpha], K2[d - alpha]) recovered from the total mixed
/// curvature measure of (K1, -K2).
double mixed_volume_via_measures(const Polytope& k1, const Polytope& k2, int alpha,
                                 const McConfig& cfg = {});

/// Independent oracle: fit the polynomial vol(lambda K1 + K2) and read off the
/// coefficient of lambda^alpha.
double oracle_mixed_volume(const Polytope& k1, const Polytope& k2, int alpha);

double binom(int n, int k);

}  // namespace polycurv
