#pragma once

// Pure states, density operators and finite ensembles {p_i, rho_i}.

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infocons/numeric.hpp"

namespace infocons {

namespace tolerance {
inline constexpr double norm = 1e-9;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double probability = 1e-12;
}  // namespace tolerance

/// Unit-norm amplitude vector with subsystem structure.
class PureState {
 public:
  /// Renormalizes `amplitudes`; rejects a zero vector or a length that does not
  /// match the product of `dims`. The global phase is kept as given.
  PureState(Vector amplitudes, Dims dims) : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    validate_dims(dims_);
    if (static_cast<std::size_t>(amps_.size()) != total_dimension(dims_))
      throw DimensionError("pure_state: " + std::to_string(amps_.size()) +
                           " amplitudes for dims " + dims_to_string(dims_));
    if (!amps_.allFinite()) throw ValidationError("pure_state: non-finite amplitude");
    const double n = amps_.norm();
    if (n == 0.0) throw ValidationError("pure_state: zero vector cannot be normalized");
    amps_ /= n;
  }

  /// Computational basis vector |index> of a single subsystem of dimension `dim`.
  static PureState basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionError("basis index out of range");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return {std::move(v), Dims{dim}};
  }

  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const noexcept { return amps_; }

 private:
  Dims dims_;
  Vector amps_;
};

inline PureState pure_state(std::span<const Complex> amplitudes, Dims dims = {}) {
  Vector v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = amplitudes[i];
  if (dims.empty()) dims = Dims{amplitudes.size()};
  return {std::move(v), std::move(dims)};
}

inline PureState pure_state(std::initializer_list<Complex> amplitudes, Dims dims = {}) {
  return pure_state(std::span<const Complex>(amplitudes.begin(), amplitudes.size()), std::move(dims));
}

/// <a|b>, conjugate-linear in the first argument.
inline Complex overlap(const PureState& a, const PureState& b) {
  if (a.dims() != b.dims())
    throw DimensionError("overlap: dims " + dims_to_string(a.dims()) + " vs " +
                         dims_to_string(b.dims()));
  return a.amplitudes().dot(b.amplitudes());
}

inline PureState tensor_product(const PureState& a, const PureState& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  Vector v(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
    v.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
  return {std::move(v), std::move(dims)};
}

/// |psi><psi|.
inline ComplexOperator outer(const PureState& psi) {
  return {psi.dims(), psi.amplitudes() * psi.amplitudes().adjoint()};
}

/// Hermitian, unit-trace, positive semidefinite operator (all within tolerance).
class DensityOperator {
 public:
  explicit DensityOperator(const ComplexOperator& op) : op_(validated(op)) {}

  static DensityOperator from_pure(const PureState& psi) { return DensityOperator(outer(psi)); }
  static DensityOperator maximally_mixed(Dims dims) {
    const double d = static_cast<double>(total_dimension(dims));
    return DensityOperator((1.0 / d) * ComplexOperator::identity(std::move(dims)));
  }

  const ComplexOperator& op() const noexcept { return op_; }
  const Dims& dims() const noexcept { return op_.dims(); }
  std::size_t dim() const noexcept { return op_.dim(); }

 private:
  static ComplexOperator validated(const ComplexOperator& op) {
    const double defect = op.hermiticity_defect();
    if (defect > tolerance::hermitian)
      throw ValidationError("density operator is not Hermitian (defect " + std::to_string(defect) + ")");
    ComplexOperator sym = op.hermitian_part();
    const double tr = sym.trace().real();
    if (std::abs(tr - 1.0) > tolerance::trace)
      throw ValidationError("density operator trace is " + std::to_string(tr) + ", expected 1");
    const double min_eig = hermitian_eigensystem(sym).eigenvalues.minCoeff();
    if (min_eig < -tolerance::psd)
      throw ValidationError("density operator has negative eigenvalue " + std::to_string(min_eig));
    return sym;
  }

  ComplexOperator op_;
};

/// A source emitting `state` with probability `probability`.
struct EnsembleMember {
  double probability;
  DensityOperator state;
};

/// Finite ensemble {p_i, rho_i} with shared dims and probabilities summing to 1.
class Ensemble {
 public:
  explicit Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) throw ValidationError("ensemble has no members");
    double total = 0.0;
    for (const auto& m : members_) {
      if (!std::isfinite(m.probability) || m.probability < 0.0 || m.probability > 1.0)
        throw ValidationError("ensemble probability out of [0,1]: " + std::to_string(m.probability));
      if (m.state.dims() != members_.front().state.dims())
        throw DimensionError("ensemble members have differing dims");
      total += m.probability;
    }
    if (std::abs(total - 1.0) > tolerance::probability)
      throw ValidationError("ensemble probabilities sum to " + std::to_string(total));
  }

  /// Equal-weight ensemble of pure states.
  static Ensemble uniform(std::span<const PureState> states) {
    std::vector<EnsembleMember> members;
    const double p = 1.0 / static_cast<double>(states.size());
    for (const auto& s : states) members.push_back({p, DensityOperator::from_pure(s)});
    return Ensemble(std::move(members));
  }

  const std::vector<EnsembleMember>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Dims& dims() const noexcept { return members_.front().state.dims(); }

 private:
  std::vector<EnsembleMember> members_;
};

/// Stochastic mixture sum_i p_i rho_i.
inline ComplexOperator mixture(const Ensemble& e) {
  ComplexOperator acc = ComplexOperator::zero(e.dims());
  for (const auto& m : e.members()) acc = acc + m.probability * m.state.op();
  return acc;
}

inline DensityOperator average_state(const Ensemble& e) { return DensityOperator(mixture(e)); }

}  // namespace infocons
