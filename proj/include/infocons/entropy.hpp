#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <string>

#include "infocons/state.hpp"

namespace infocons {

namespace tolerance {
inline constexpr double bits = 1e-12;
}

/// Information in bits (log base 2). Values within 1e-12 below zero clamp to 0.
class Bits {
 public:
  constexpr Bits() = default;
  explicit Bits(double value) : value_(value) {
    if (!std::isfinite(value_)) throw ValidationError("Bits: non-finite value");
    if (value_ < 0.0) {
      if (value_ < -tolerance::bits) throw ValidationError("Bits: negative value " + std::to_string(value_));
      value_ = 0.0;
    }
  }

  constexpr double value() const noexcept { return value_; }
  auto operator<=>(const Bits&) const = default;

 private:
  double value_ = 0.0;
};

namespace detail {
// -x log2 x with the 0 log 0 = 0 convention as an explicit branch.
inline double neg_x_log2_x(double x) { return x == 0.0 ? 0.0 : -x * std::log2(x); }
}  // namespace detail

/// S(rho) = -sum_i lambda_i log2 lambda_i.
inline Bits von_neumann_entropy(const DensityOperator& rho) {
  const auto eig = hermitian_eigensystem(rho.op());
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues(i);
    if (lambda < 0.0) {
      if (lambda < -tolerance::psd)
        throw ValidationError("von_neumann_entropy: eigenvalue " + std::to_string(lambda) + " is negative");
      lambda = 0.0;
    }
    s += detail::neg_x_log2_x(lambda);
  }
  return Bits(s);
}

/// H(p) = -p log2 p - (1-p) log2 (1-p).
inline Bits binary_entropy(double p) {
  if (!(p >= -tolerance::probability && p <= 1.0 + tolerance::probability))
    throw ValidationError("binary_entropy: p out of range: " + std::to_string(p));
  p = std::clamp(p, 0.0, 1.0);
  return Bits(detail::neg_x_log2_x(p) + detail::neg_x_log2_x(1.0 - p));
}

/// Entropy of the ensemble-average state; the information content of a source.
inline Bits ensemble_information(const Ensemble& e) { return von_neumann_entropy(average_state(e)); }

/// Closed form for an equal mixture of two pure states whose overlap modulus is
/// `c`: the average state has eigenvalues (1 +- c)/2.
inline Bits two_pure_state_information(double c) {
  if (!(c >= -tolerance::probability && c <= 1.0 + tolerance::probability))
    throw ValidationError("two_pure_state_information: overlap out of [0,1]: " + std::to_string(c));
  return binary_entropy((1.0 + std::clamp(c, 0.0, 1.0)) / 2.0);
}

}  // namespace infocons
