#pragma once

#include <stdexcept>
#include <string>

namespace polycurv {

/// Bad arguments: dimension mismatches, invalid order tuples, malformed input.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input point set does not span a full-dimensional body.
class DegenerateInput : public ValidationError {
 public:
  explicit DegenerateInput(const std::string& msg) : ValidationError(msg) {}
};

/// Cone contains a line; spherical measure of its cross-section is undefined here.
class NonPointedCone : public std::runtime_error {
 public:
  explicit NonPointedCone(const std::string& msg) : std::runtime_error(msg) {}
};

/// Integral parameter outside the convergence range.
class DivergentIntegral : public std::invalid_argument {
 public:
  explicit DivergentIntegral(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace polycurv
