#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace polycurv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// m-volume of the parallelepiped spanned by the given d-vectors,
/// sqrt(det(Gram)). Returns 0 for dependent inputs.
double gram_volume(const std::vector<Vec>& v);

/// A simple multivector coeff * (v1 ^ ... ^ vm) in R^d, kept in factored
/// form. The scalar factor carries grade-0 values (duals of top-grade
/// multivectors), which have no vector part.
struct SimpleMultivector {
  int dim = 0;
  std::vector<Vec> vectors;
  double coeff = 1.0;

  SimpleMultivector() = default;
  SimpleMultivector(int d, std::vector<Vec> vs, double c = 1.0);

  int grade() const { return static_cast<int>(vectors.size()); }
  double norm() const { return std::abs(coeff) * gram_volume(vectors); }
  bool is_zero() const;
};

/// Hodge dual: a simple (d-m)-vector b with span(b) = span(a)^perp,
/// |b| = |a| and <a ^ b, Omega^d> = |a|^2.
SimpleMultivector hodge_star(const SimpleMultivector& a);

/// <(*a1) ^ ... ^ (*ap), Omega^d>; the grades must sum to (p-1)d.
double p_product(const std::vector<SimpleMultivector>& a);

/// Linear subspace with a stored orthonormal basis.
struct Subspace {
  int dim_ambient = 0;
  std::vector<Vec> basis;

  Subspace() = default;
  Subspace(int d, std::vector<Vec> orthonormal_basis);

  /// Orthonormalizes an arbitrary spanning set.
  static Subspace from_span(int d, const std::vector<Vec>& span);

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Vec> orthonormal_complement() const;
};

/// [[L1,...,Lq]]: Gram volume of the concatenated orthonormal bases of the
/// orthogonal complements. Requires sum of codimensions <= d.
double bracket(const std::vector<Subspace>& subspaces, int d);

struct SignParities {
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;
};

/// Parities of the sign constants c1, c2, c3 evaluated from their defining
/// sums (not the mod-2 reduced forms).
SignParities sign_parities(int d, const std::vector<int>& r);

/// Parities of the equivalent reduced/alternative expressions for c1, c2, c3.
/// Matching sign_parities mod 2 on the full index grid is a test invariant.
SignParities sign_parities_reduced(int d, const std::vector<int>& r);

/// Exact (unreduced) integer values of the three sums; c1 here is the value
/// whose parity drives the orientation sign.
struct SignValues {
  long long c1 = 0;
  long long c2 = 0;
  long long c3 = 0;
};
SignValues sign_values(int d, const std::vector<int>& r);

}  // namespace polycurv
