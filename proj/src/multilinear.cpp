#include "polycurv/multilinear.hpp"

#include <cmath>

#include "polycurv/errors.hpp"

namespace polycurv {

namespace {
constexpr double kDetClamp = 1e-14;
constexpr double kOrthoTol = 1e-12;

Mat columns(const std::vector<Vec>& v) {
  Mat m(v.empty() ? 0 : v.front().size(), static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = v[static_cast<size_t>(j)];
  return m;
}
}  // namespace

double gram_volume(const std::vector<Vec>& v) {
  if (v.empty()) return 1.0;
  const Eigen::Index d = v.front().size();
  if (static_cast<Eigen::Index>(v.size()) > d)
    throw ValidationError("gram_volume: more vectors than ambient dimension");
  for (const Vec& x : v)
    if (x.size() != d) throw ValidationError("gram_volume: dimension mismatch");
  const Mat m = columns(v);
  const Mat g = m.transpose() * m;
  double det = g.determinant();
  if (std::abs(det) < kDetClamp) det = 0.0;
  if (det < 0.0) det = 0.0;
  return std::sqrt(det);
}

SimpleMultivector::SimpleMultivector(int d, std::vector<Vec> vs, double c)
    : dim(d), vectors(std::move(vs)), coeff(c) {
  if (static_cast<int>(vectors.size()) > d)
    throw ValidationError("SimpleMultivector: grade exceeds dimension");
  for (const Vec& v : vectors)
    if (v.size() != d) throw ValidationError("SimpleMultivector: dimension mismatch");
}

bool SimpleMultivector::is_zero() const { return norm() < kOrthoTol; }

SimpleMultivector hodge_star(const SimpleMultivector& a) {
  const int d = a.dim;
  const int m = a.grade();
  const double g = a.norm();
  if (g < kOrthoTol) {
    // zero multivector of complementary grade
    return SimpleMultivector(
        d, std::vector<Vec>(static_cast<size_t>(d - m), Vec::Zero(d)), 0.0);
  }
  if (m == d) {
    // the dual of a top-grade multivector is the scalar <a, Omega^d>
    return SimpleMultivector(d, {}, a.coeff * columns(a.vectors).determinant());
  }
  // Extend an orthonormal basis of span(a) to a full orthonormal basis.
  Eigen::HouseholderQR<Mat> qr(columns(a.vectors));
  Mat q = qr.householderQ();
  std::vector<Vec> comp;
  comp.reserve(static_cast<size_t>(d - m));
  for (int j = m; j < d; ++j) comp.push_back(q.col(j));
  comp.back() *= g / std::abs(a.coeff);  // |*a| = |a|, coeff carried over
  // Fix the sign so that <a ^ *a, Omega^d> = |a|^2 >= 0.
  Mat wedge(d, d);
  for (int j = 0; j < m; ++j) wedge.col(j) = a.vectors[static_cast<size_t>(j)];
  for (int j = m; j < d; ++j) wedge.col(j) = comp[static_cast<size_t>(j - m)];
  if (wedge.determinant() < 0.0) comp.back() = -comp.back();
  return SimpleMultivector(d, std::move(comp), a.coeff);
}

double p_product(const std::vector<SimpleMultivector>& a) {
  if (a.empty()) throw ValidationError("p_product: empty input");
  const int d = a.front().dim;
  const int p = static_cast<int>(a.size());
  int grade_sum = 0;
  for (const auto& ai : a) {
    if (ai.dim != d) throw ValidationError("p_product: mixed ambient dimensions");
    grade_sum += ai.grade();
  }
  if (grade_sum != (p - 1) * d)
    throw ValidationError("p_product: grades must sum to (p-1)d");
  Mat wedge(d, d);
  int col = 0;
  double scalar = 1.0;
  for (const auto& ai : a) {
    const SimpleMultivector star = hodge_star(ai);
    scalar *= star.coeff;
    for (const Vec& v : star.vectors) wedge.col(col++) = v;
  }
  return scalar * wedge.determinant();
}

Subspace::Subspace(int d, std::vector<Vec> orthonormal_basis)
    : dim_ambient(d), basis(std::move(orthonormal_basis)) {
  const Mat b = columns(basis);
  if (b.cols() > 0) {
    if (b.rows() != d) throw ValidationError("Subspace: dimension mismatch");
    const Mat g = b.transpose() * b;
    if ((g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() > kOrthoTol)
      throw ValidationError("Subspace: basis not orthonormal");
  }
}

Subspace Subspace::from_span(int d, const std::vector<Vec>& span) {
  if (span.empty()) return Subspace(d, {});
  Mat m = columns(span);
  if (m.rows() != d) throw ValidationError("Subspace::from_span: dimension mismatch");
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  qr.setThreshold(1e-10);
  const int r = static_cast<int>(qr.rank());
  Mat q = Mat(qr.householderQ()).leftCols(r);
  std::vector<Vec> basis;
  basis.reserve(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) basis.push_back(q.col(j));
  return Subspace(d, std::move(basis));
}

std::vector<Vec> Subspace::orthonormal_complement() const {
  const int d = dim_ambient;
  const int r = dim();
  if (r == 0) {
    std::vector<Vec> out;
    for (int j = 0; j < d; ++j) {
      Vec e = Vec::Zero(d);
      e(j) = 1.0;
      out.push_back(std::move(e));
    }
    return out;
  }
  Eigen::HouseholderQR<Mat> qr(columns(basis));
  Mat q = qr.householderQ();
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(d - r));
  for (int j = r; j < d; ++j) out.push_back(q.col(j));
  return out;
}

double bracket(const std::vector<Subspace>& subspaces, int d) {
  int budget = 0;
  std::vector<Vec> concat;
  for (const auto& l : subspaces) {
    if (l.dim_ambient != d) throw ValidationError("bracket: dimension mismatch");
    budget += d - l.dim();
    for (Vec& v : l.orthonormal_complement()) concat.push_back(std::move(v));
  }
  if (budget > d) throw ValidationError("bracket: codimension budget exceeded");
  return gram_volume(concat);
}

namespace {
void check_orders(int d, const std::vector<int>& r) {
  if (d < 1) throw ValidationError("sign calculus: d must be positive");
  for (int ri : r)
    if (ri < 0 || ri > d) throw ValidationError("sign calculus: r_i out of range");
}
int parity(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }
}  // namespace

SignValues sign_values(int d, const std::vector<int>& r) {
  check_orders(d, r);
  const int q = static_cast<int>(r.size());
  SignValues s;
  // c1 = d*sum r_i + d*sum i*r_i + sum_{i<j} r_i r_j
  for (int i = 0; i < q; ++i) {
    s.c1 += static_cast<long long>(d) * r[static_cast<size_t>(i)];
    s.c1 += static_cast<long long>(d) * (i + 1) * r[static_cast<size_t>(i)];
    for (int j = i + 1; j < q; ++j)
      s.c1 += static_cast<long long>(r[static_cast<size_t>(i)]) * r[static_cast<size_t>(j)];
  }
  // c2 = sum_j (d-1-r_j)(R_q - R_j) with R_j the partial sums
  std::vector<long long> partial(static_cast<size_t>(q) + 1, 0);
  for (int i = 0; i < q; ++i)
    partial[static_cast<size_t>(i) + 1] =
        partial[static_cast<size_t>(i)] + r[static_cast<size_t>(i)];
  const long long rq = partial[static_cast<size_t>(q)];
  for (int j = 1; j <= q; ++j)
    s.c2 += (static_cast<long long>(d) - 1 - r[static_cast<size_t>(j - 1)]) *
            (rq - partial[static_cast<size_t>(j)]);
  // c3 = sum_{j=2}^q (j-1)(d-1-r_j); empty for q = 1
  for (int j = 2; j <= q; ++j)
    s.c3 += static_cast<long long>(j - 1) *
            (static_cast<long long>(d) - 1 - r[static_cast<size_t>(j - 1)]);
  return s;
}

SignParities sign_parities(int d, const std::vector<int>& r) {
  const SignValues s = sign_values(d, r);
  return {parity(s.c1), parity(s.c2), parity(s.c3)};
}

SignParities sign_parities_reduced(int d, const std::vector<int>& r) {
  check_orders(d, r);
  const int q = static_cast<int>(r.size());
  long long sum_r = 0, sum_ir = 0, cross = 0;
  for (int i = 0; i < q; ++i) {
    sum_r += r[static_cast<size_t>(i)];
    sum_ir += static_cast<long long>(i + 1) * r[static_cast<size_t>(i)];
    for (int j = i + 1; j < q; ++j)
      cross += static_cast<long long>(r[static_cast<size_t>(i)]) * r[static_cast<size_t>(j)];
  }
  SignParities p;
  // c1 via the proof-level expression (k-1)(q-1)d + sum_{i>=2} (d-r_i)(k_i-(i-2)d-1)
  {
    std::vector<long long> partial(static_cast<size_t>(q) + 1, 0);
    for (int i = 0; i < q; ++i)
      partial[static_cast<size_t>(i) + 1] =
          partial[static_cast<size_t>(i)] + r[static_cast<size_t>(i)];
    const long long k = partial[static_cast<size_t>(q)] -
                        static_cast<long long>(q - 1) * d;
    long long c1 = (k - 1) * static_cast<long long>(q - 1) * d;
    for (int i = 2; i <= q; ++i) {
      const long long ki = partial[static_cast<size_t>(i)] -
                           static_cast<long long>(i - 1) * d;
      c1 += (static_cast<long long>(d) - r[static_cast<size_t>(i - 1)]) *
            (ki - static_cast<long long>(i - 2) * d - 1);
    }
    p.c1 = parity(c1);
  }
  p.c2 = parity(static_cast<long long>(d - 1) * sum_r +
                static_cast<long long>(d - 1) * sum_ir + cross);
  const long long binom_q2 = static_cast<long long>(q) * (q - 1) / 2;
  p.c3 = parity(static_cast<long long>(d - 1) * binom_q2 + sum_ir + sum_r);
  return p;
}

}  // namespace polycurv
