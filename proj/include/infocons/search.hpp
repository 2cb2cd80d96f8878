#pragma once

// Numerical probe of the unitary orbit: how close can any unitary on the full
// composite space come to realizing a scenario's target map?

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "infocons/nelder_mead.hpp"
#include "infocons/parallel.hpp"
#include "infocons/scenarios.hpp"

namespace infocons {

/// D*D real coefficients over a fixed Hermitian generator basis, in order:
///   [0, D)            diagonal projectors E_kk
///   then per pair j<k (lexicographic)
///                     (E_jk + E_kj)/2      symmetric
///                     (-i E_jk + i E_kj)/2 antisymmetric
/// so a coefficient of pi on a symmetric pair generator is a bit flip on that
/// pair up to a global phase.
struct UnitaryParameterization {
  std::size_t dim = 0;
  std::vector<double> params;

  static UnitaryParameterization zero(std::size_t dim) { return {dim, std::vector<double>(dim * dim, 0.0)}; }
};

inline std::size_t symmetric_generator_index(std::size_t dim, std::size_t j, std::size_t k) {
  if (j >= k || k >= dim) throw DimensionError("generator pair must satisfy j < k < dim");
  // Pairs before row j: sum_{r<j} (dim - 1 - r).
  const std::size_t before = j * (2 * dim - j - 1) / 2;
  return dim + 2 * (before + (k - j - 1));
}

inline Matrix hermitian_generator(const UnitaryParameterization& p) {
  const auto d = p.dim;
  if (p.params.size() != d * d)
    throw DimensionError("unitary parameterization needs " + std::to_string(d * d) + " parameters, got " +
                         std::to_string(p.params.size()));
  const auto di = static_cast<Eigen::Index>(d);
  Matrix h = Matrix::Zero(di, di);
  std::size_t idx = 0;
  for (Eigen::Index k = 0; k < di; ++k) h(k, k) = p.params[idx++];
  for (Eigen::Index j = 0; j < di; ++j)
    for (Eigen::Index k = j + 1; k < di; ++k) {
      const double s = p.params[idx++] / 2.0;
      const double a = p.params[idx++] / 2.0;
      h(j, k) += Complex(s, -a);
      h(k, j) += Complex(s, a);
    }
  return h;
}

/// U = exp(i H(params)), via the eigendecomposition of H.
inline ComplexOperator materialize(const UnitaryParameterization& p, Dims dims = {}) {
  if (dims.empty()) dims = Dims{p.dim};
  if (total_dimension(dims) != p.dim) throw DimensionError("materialize: dims do not match parameter dimension");
  if (p.dim == 0) throw DimensionError("materialize: zero dimension");
  for (double x : p.params)
    if (!std::isfinite(x)) throw ValidationError("materialize: non-finite parameter");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(hermitian_generator(p)));
  const Eigen::VectorXcd phases = (Complex(0.0, 1.0) * solver.eigenvalues().cast<Complex>()).array().exp();
  Matrix u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  return {std::move(dims), std::move(u)};
}

/// 1/2 sum_i (1 - |<target_i| U |input_i>|^2).
inline double scenario_error(const ComplexOperator& u, const Scenario& s) {
  const auto d = s.inputs()[0].dim();
  if (u.dim() != d || s.targets()[0].dim() != d)
    throw DimensionError("scenario_error: unitary is " + std::to_string(u.dim()) + "-dimensional, scenario input " +
                         std::to_string(d) + ", target " + std::to_string(s.targets()[0].dim()));
  if (u.dims().size() > 1 && u.dims() != s.inputs()[0].dims())
    throw DimensionError("scenario_error: unitary dims " + dims_to_string(u.dims()) + " vs scenario " +
                         dims_to_string(s.inputs()[0].dims()));
  double err = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    const Complex amp = s.targets()[i].amplitudes().dot(u.matrix() * s.inputs()[i].amplitudes());
    err += 1.0 - std::norm(amp);
  }
  return std::clamp(err / 2.0, 0.0, 1.0);
}

struct SearchResult {
  double best_error = 1.0;
  std::vector<double> best_params;
  std::size_t restarts_used = 0;
  std::size_t iterations_per_restart = 0;
  std::uint64_t seed = 0;
};

/// Seeded random start per restart, simplex descent on the generator
/// coefficients, minimum over restarts (ties go to the lowest restart index).
inline SearchResult minimize_error(const Scenario& s, std::size_t restarts, std::size_t iterations,
                                   std::uint64_t seed) {
  if (restarts == 0 || iterations == 0) throw ValidationError("minimize_error: restarts and iterations must be >= 1");
  const std::size_t d = s.inputs()[0].dim();
  if (s.targets()[0].dim() != d)
    throw DimensionError("minimize_error: input and target spaces differ in dimension; no unitary maps between them");

  auto objective = [&](const std::vector<double>& x) {
    return scenario_error(materialize(UnitaryParameterization{d, x}), s);
  };

  std::vector<SimplexResult> runs(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> start(-std::numbers::pi, std::numbers::pi);
    std::vector<double> x0(d * d);
    for (auto& x : x0) x = start(rng);
    SimplexOptions opt;
    opt.max_iterations = iterations;
    runs[r] = nelder_mead(objective, std::move(x0), opt);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r)
    if (runs[r].value < runs[best].value) best = r;
  return {std::clamp(runs[best].value, 0.0, 1.0), runs[best].x, restarts, iterations, seed};
}

}  // namespace infocons
