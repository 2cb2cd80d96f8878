#pragma once

// Random generators for property tests. Kept independent of the library's
// own constructions (no use of materialize or the scenario builders).

#include <cmath>
#include <random>
#include <vector>

#include "infocons/state.hpp"

namespace infocons::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline Matrix random_gaussian(std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(n(rng()), n(rng()));
  return m;
}

inline PureState random_state(Dims dims) {
  const auto d = total_dimension(dims);
  Matrix v = random_gaussian(d, 1);
  return {Vector(v.col(0)), std::move(dims)};
}

/// Haar-like unitary: QR of a complex Gaussian matrix with phase-fixed R.
inline ComplexOperator random_unitary(Dims dims) {
  const auto d = total_dimension(dims);
  Eigen::MatrixXcd g = random_gaussian(d, d);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex ph = r(i, i) / std::abs(r(i, i));
    q.col(i) *= ph;
  }
  return {std::move(dims), Matrix(q)};
}

/// G G^dag / tr, a full-rank mixed state.
inline DensityOperator random_density(Dims dims) {
  const auto d = total_dimension(dims);
  Matrix g = random_gaussian(d, d);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityOperator(ComplexOperator(std::move(dims), rho));
}

inline Matrix random_hermitian(std::size_t d) {
  Matrix g = random_gaussian(d, d);
  return (g + g.adjoint()) * 0.5;
}

inline Ensemble random_ensemble(Dims dims, std::size_t members) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(members);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng()));
  std::vector<EnsembleMember> out;
  double acc = 0.0;
  for (std::size_t i = 0; i < members; ++i) {
    const double p = i + 1 == members ? 1.0 - acc : w[i] / total;
    acc += p;
    out.push_back({p, random_density(dims)});
  }
  return Ensemble(std::move(out));
}

/// Direct evaluation of H(p) in long double, independent of the library path.
inline long double binary_entropy_oracle(long double p) {
  auto term = [](long double x) { return x <= 0.0L ? 0.0L : -x * std::log2(x); };
  return term(p) + term(1.0L - p);
}

}  // namespace infocons::testing
