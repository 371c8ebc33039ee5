#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

namespace polycurv::detail {

/// Lawson-Hanson active-set solver for min |A x - b| s.t. x >= 0.
inline Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                            double tol = 1e-12, int max_iter = 0) {
  const Eigen::Index n = a.cols();
  if (max_iter == 0) max_iter = static_cast<int>(3 * n + 30);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<size_t>(n), false);
  Eigen::VectorXd w = a.transpose() * (b - a * x);
  for (int iter = 0; iter < max_iter; ++iter) {
    // pick the most violated zero coordinate
    Eigen::Index t = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[static_cast<size_t>(j)] && w(j) > best) {
        best = w(j);
        t = j;
      }
    if (t < 0) break;
    passive[static_cast<size_t>(t)] = true;
    while (true) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<size_t>(j)]) idx.push_back(j);
      Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
      for (size_t j = 0; j < idx.size(); ++j) ap.col(static_cast<Eigen::Index>(j)) = a.col(idx[j]);
      Eigen::VectorXd z =
          ap.colPivHouseholderQr().solve(b);
      bool feasible = true;
      for (Eigen::Index j = 0; j < z.size(); ++j)
        if (z(j) <= 0.0) feasible = false;
      if (feasible) {
        x.setZero();
        for (size_t j = 0; j < idx.size(); ++j) x(idx[j]) = z(static_cast<Eigen::Index>(j));
        break;
      }
      // step back to the feasibility boundary and drop variables at zero
      double alpha = std::numeric_limits<double>::infinity();
      for (size_t j = 0; j < idx.size(); ++j) {
        const double zj = z(static_cast<Eigen::Index>(j));
        if (zj <= 0.0) {
          const double xj = x(idx[j]);
          if (xj - zj > 0.0) alpha = std::min(alpha, xj / (xj - zj));
        }
      }
      if (!std::isfinite(alpha)) alpha = 0.0;
      for (size_t j = 0; j < idx.size(); ++j) {
        const Eigen::Index jj = idx[j];
        x(jj) += alpha * (z(static_cast<Eigen::Index>(j)) - x(jj));
        if (x(jj) < tol) {
          x(jj) = 0.0;
          passive[static_cast<size_t>(jj)] = false;
        }
      }
    }
    w = a.transpose() * (b - a * x);
  }
  return x;
}

/// Residual of the best nonnegative representation of b over the columns of a.
inline double nnls_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::VectorXd x = nnls(a, b);
  return (a * x - b).norm();
}

}  // namespace polycurv::detail
