#pragma once

// Mixing-linear dynamics: unitary evolution, enlargement by an ancilla,
// subsystem discard, Kraus maps and classical stochastic matrices.

#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "infocons/entropy.hpp"
#include "infocons/state.hpp"

namespace infocons {

namespace tolerance {
inline constexpr double unitarity = 1e-10;
inline constexpr double kraus_completeness = 1e-10;
inline constexpr double stochastic_column = 1e-12;
inline constexpr double diagonal = 1e-10;
}  // namespace tolerance

class Channel;

struct UnitaryStage {
  ComplexOperator u;
};
struct AppendAncillaStage {
  PureState ancilla;
};
struct DiscardStage {
  std::vector<std::size_t> keep;
};
struct KrausStage {
  std::vector<ComplexOperator> operators;
};
/// Column-stochastic matrix acting on the diagonal of a diagonal state.
struct ClassicalStochasticStage {
  Eigen::MatrixXd matrix;
};
struct SequenceStage {
  std::vector<Channel> stages;
};

/// A validated, immutable channel. Construct through the static factories.
class Channel {
 public:
  using Variant = std::variant<UnitaryStage, AppendAncillaStage, DiscardStage, KrausStage,
                               ClassicalStochasticStage, SequenceStage>;

  static Channel unitary(ComplexOperator u) {
    const auto d = static_cast<Eigen::Index>(u.dim());
    const double defect = max_abs(u.matrix().adjoint() * u.matrix() - Matrix::Identity(d, d));
    if (defect > tolerance::unitarity)
      throw ValidationError("unitary channel: U^dag U deviates from identity by " + std::to_string(defect));
    return Channel(UnitaryStage{std::move(u)});
  }

  static Channel append_ancilla(PureState ancilla) { return Channel(AppendAncillaStage{std::move(ancilla)}); }

  static Channel discard(std::vector<std::size_t> keep) {
    if (keep.empty()) throw DimensionError("discard channel: keep set is empty");
    return Channel(DiscardStage{std::move(keep)});
  }

  static Channel kraus(std::vector<ComplexOperator> ops) {
    if (ops.empty()) throw ValidationError("kraus channel: no operators");
    const auto d = static_cast<Eigen::Index>(ops.front().dim());
    Matrix sum = Matrix::Zero(d, d);
    for (const auto& k : ops) {
      require_same_dims(k, ops.front(), "kraus channel");
      sum += k.matrix().adjoint() * k.matrix();
    }
    const double defect = max_abs(sum - Matrix::Identity(d, d));
    if (defect > tolerance::kraus_completeness)
      throw ValidationError("kraus channel: sum K^dag K deviates from identity by " + std::to_string(defect));
    return Channel(KrausStage{std::move(ops)});
  }

  static Channel classical_stochastic(Eigen::MatrixXd m) {
    if (m.size() == 0) throw ValidationError("stochastic channel: empty matrix");
    if (!m.allFinite() || m.minCoeff() < 0.0) throw ValidationError("stochastic channel: negative or non-finite entry");
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m.col(j).sum() - 1.0) > tolerance::stochastic_column)
        throw ValidationError("stochastic channel: column " + std::to_string(j) + " does not sum to 1");
    return Channel(ClassicalStochasticStage{std::move(m)});
  }

  /// Left-to-right composition. Dimensions are checked now: from `input` when
  /// given, otherwise from the first stage that fixes its input space.
  static Channel sequence(std::vector<Channel> stages, std::optional<Dims> input = std::nullopt) {
    if (stages.empty()) throw ValidationError("sequence channel: no stages");
    std::optional<Dims> current = std::move(input);
    for (const auto& s : stages) current = s.propagate(current);
    return Channel(SequenceStage{std::move(stages)});
  }

  const Variant& stage() const noexcept { return v_; }

  /// Input dims this channel requires, if it fixes them.
  std::optional<Dims> input_dims() const {
    return std::visit(
        [](const auto& s) -> std::optional<Dims> {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, UnitaryStage>) return s.u.dims();
          else if constexpr (std::is_same_v<T, KrausStage>) return s.operators.front().dims();
          else if constexpr (std::is_same_v<T, SequenceStage>) return s.stages.front().input_dims();
          else
            return std::nullopt;
        },
        v_);
  }

  /// Output dims for a given input (nullopt when the input is not yet known).
  /// Throws DimensionError when `in` is incompatible.
  std::optional<Dims> propagate(const std::optional<Dims>& in) const {
    return std::visit(
        [&](const auto& s) -> std::optional<Dims> {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, UnitaryStage>) {
            check(in, s.u.dims(), "unitary");
            return s.u.dims();
          } else if constexpr (std::is_same_v<T, KrausStage>) {
            check(in, s.operators.front().dims(), "kraus");
            return s.operators.front().dims();
          } else if constexpr (std::is_same_v<T, AppendAncillaStage>) {
            if (!in) return std::nullopt;
            Dims out = *in;
            out.insert(out.end(), s.ancilla.dims().begin(), s.ancilla.dims().end());
            return out;
          } else if constexpr (std::is_same_v<T, DiscardStage>) {
            if (!in) return std::nullopt;
            Dims out;
            std::vector<std::size_t> keep = s.keep;
            std::sort(keep.begin(), keep.end());
            keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
            for (auto k : keep) {
              if (k >= in->size())
                throw DimensionError("discard: subsystem " + std::to_string(k) + " out of range for " +
                                     dims_to_string(*in));
              out.push_back((*in)[k]);
            }
            return out;
          } else if constexpr (std::is_same_v<T, ClassicalStochasticStage>) {
            const auto cols = static_cast<std::size_t>(s.matrix.cols());
            const auto rows = static_cast<std::size_t>(s.matrix.rows());
            if (!in) return rows == cols ? std::nullopt : std::optional<Dims>(Dims{rows});
            if (total_dimension(*in) != cols)
              throw DimensionError("stochastic: matrix has " + std::to_string(cols) + " columns, state dims " +
                                   dims_to_string(*in));
            return rows == cols ? *in : Dims{rows};
          } else {
            std::optional<Dims> cur = in;
            for (const auto& st : s.stages) cur = st.propagate(cur);
            return cur;
          }
        },
        v_);
  }

 private:
  explicit Channel(Variant v) : v_(std::move(v)) {}

  static void check(const std::optional<Dims>& in, const Dims& expected, const char* what) {
    if (in && *in != expected)
      throw DimensionError(std::string(what) + " stage expects dims " + dims_to_string(expected) + ", got " +
                           dims_to_string(*in));
  }

  Variant v_;
};

/// True if the channel (or any nested stage) discards a subsystem.
inline bool contains_discard(const Channel& ch) {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiscardStage>) return true;
        else if constexpr (std::is_same_v<T, SequenceStage>) {
          for (const auto& st : s.stages)
            if (contains_discard(st)) return true;
          return false;
        } else
          return false;
      },
      ch.stage());
}

namespace detail {

// The raw linear map. Validation of the result is the caller's job, which lets
// the linearity checker evaluate it on arbitrary (non-normalized) operators.
inline ComplexOperator apply_linear(const Channel& ch, const ComplexOperator& rho) {
  return std::visit(
      [&](const auto& s) -> ComplexOperator {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UnitaryStage>) {
          require_same_dims(s.u, rho, "apply(unitary)");
          return {rho.dims(), s.u.matrix() * rho.matrix() * s.u.matrix().adjoint()};
        } else if constexpr (std::is_same_v<T, AppendAncillaStage>) {
          return tensor_product(rho, outer(s.ancilla));
        } else if constexpr (std::is_same_v<T, DiscardStage>) {
          return partial_trace(rho, s.keep);
        } else if constexpr (std::is_same_v<T, KrausStage>) {
          require_same_dims(s.operators.front(), rho, "apply(kraus)");
          Matrix acc = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
          for (const auto& k : s.operators) acc += k.matrix() * rho.matrix() * k.matrix().adjoint();
          return {rho.dims(), std::move(acc)};
        } else if constexpr (std::is_same_v<T, ClassicalStochasticStage>) {
          const auto out_dims = *ch.propagate(rho.dims());
          const Matrix& m = rho.matrix();
          Matrix off = m;
          off.diagonal().setZero();
          if (max_abs(off) > tolerance::diagonal)
            throw ValidationError("apply(stochastic): input state is not diagonal");
          const Eigen::VectorXcd out = s.matrix.template cast<Complex>() * m.diagonal();
          return {out_dims, Matrix(out.asDiagonal())};
        } else {
          ComplexOperator cur = rho;
          for (const auto& st : s.stages) cur = apply_linear(st, cur);
          return cur;
        }
      },
      ch.stage());
}

}  // namespace detail

/// Lambda(rho); the result is re-validated as a density operator.
inline DensityOperator apply(const Channel& ch, const DensityOperator& rho) {
  ch.propagate(rho.dims());
  return DensityOperator(detail::apply_linear(ch, rho.op()));
}

/// {p_i, Lambda(rho_i)}: member-wise, probabilities unchanged.
inline Ensemble apply_to_ensemble(const Channel& ch, const Ensemble& e) {
  std::vector<EnsembleMember> out;
  out.reserve(e.size());
  for (const auto& m : e.members()) out.push_back({m.probability, apply(ch, m.state)});
  return Ensemble(std::move(out));
}

/// Max-entry modulus of Lambda(sum p_i rho_i) - sum p_i Lambda(rho_i).
inline double check_mixing_linearity(const Channel& ch, const Ensemble& e) {
  const ComplexOperator lhs = apply(ch, average_state(e)).op();
  std::optional<ComplexOperator> rhs;
  for (const auto& m : e.members()) {
    ComplexOperator term = m.probability * apply(ch, m.state).op();
    rhs = rhs ? *rhs + term : term;
  }
  return max_abs_diff(lhs, *rhs);
}

}  // namespace infocons
