#pragma once

// Hypothesized two-state transformations: cloning with an environment,
// deleting, generalized deleting and the classical copy. A scenario records
// the input and target families; whether any dynamics realizes the target is
// decided elsewhere (audit, search).

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "infocons/state.hpp"

namespace infocons {

namespace tolerance {
inline constexpr double orthogonality = 1e-12;
inline constexpr double nearer_than = 1e-12;
}  // namespace tolerance

/// Open: discarding part of the system is permitted. Closed: it is not.
enum class Regime { open, closed };

enum class ScenarioKind { cloning, deleting, generalized_deleting, classical_copy, identity };

inline std::string_view to_string(Regime r) { return r == Regime::open ? "open" : "closed"; }

inline std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::cloning: return "cloning";
    case ScenarioKind::deleting: return "deleting";
    case ScenarioKind::generalized_deleting: return "generalized-deleting";
    case ScenarioKind::classical_copy: return "classical-copy";
    case ScenarioKind::identity: return "identity";
  }
  return "unknown";
}

/// Two equiprobable pure inputs and their hypothesized outputs.
class Scenario {
 public:
  Scenario(ScenarioKind kind, Regime regime, std::array<PureState, 2> inputs, std::array<PureState, 2> targets,
           std::string label = {})
      : kind_(kind),
        regime_(regime),
        label_(std::move(label)),
        inputs_(std::move(inputs)),
        targets_(std::move(targets)),
        input_ensemble_(Ensemble::uniform(inputs_)),
        target_ensemble_(Ensemble::uniform(targets_)),
        c_(std::min(1.0, std::abs(overlap(inputs_[0], inputs_[1])))),
        c_out_(std::min(1.0, std::abs(overlap(targets_[0], targets_[1])))) {}

  ScenarioKind kind() const noexcept { return kind_; }
  Regime regime() const noexcept { return regime_; }
  const std::string& label() const noexcept { return label_; }
  const std::array<PureState, 2>& inputs() const noexcept { return inputs_; }
  const std::array<PureState, 2>& targets() const noexcept { return targets_; }
  const Ensemble& input_ensemble() const noexcept { return input_ensemble_; }
  const Ensemble& target_output_ensemble() const noexcept { return target_ensemble_; }

  /// |<in_1|in_2>|.
  double input_overlap() const noexcept { return c_; }
  /// |<out_1|out_2>|.
  double output_overlap() const noexcept { return c_out_; }

 private:
  ScenarioKind kind_;
  Regime regime_;
  std::string label_;
  std::array<PureState, 2> inputs_;
  std::array<PureState, 2> targets_;
  Ensemble input_ensemble_;
  Ensemble target_ensemble_;
  double c_;
  double c_out_;
};

namespace detail {
inline void require_dims(const PureState& a, const PureState& b, const char* what) {
  if (a.dims() != b.dims())
    throw DimensionError(std::string(what) + ": dims " + dims_to_string(a.dims()) + " vs " +
                         dims_to_string(b.dims()));
}
}  // namespace detail

/// One-dimensional register holding no information.
inline PureState trivial_register() { return PureState::basis(1, 0); }

/// |psi_i>|blank>|0>_E -> |psi_i>|psi_i>|e_i>_E, open regime. The environment
/// starts in the first basis state of the space e1, e2 live in.
inline Scenario cloning_scenario(const PureState& psi1, const PureState& psi2, const PureState& blank,
                                 const PureState& env1, const PureState& env2, std::string label = "cloning") {
  detail::require_dims(psi1, psi2, "cloning_scenario(psi1, psi2)");
  detail::require_dims(psi1, blank, "cloning_scenario(psi, blank)");
  detail::require_dims(env1, env2, "cloning_scenario(e1, e2)");
  const PureState env0(PureState::basis(env1.dim(), 0).amplitudes(), env1.dims());
  const std::array<PureState, 2> psi{psi1, psi2};
  const std::array<PureState, 2> env{env1, env2};
  auto in = [&](int i) { return tensor_product(tensor_product(psi[i], blank), env0); };
  auto out = [&](int i) { return tensor_product(tensor_product(psi[i], psi[i]), env[i]); };
  return {ScenarioKind::cloning, Regime::open, {in(0), in(1)}, {out(0), out(1)}, std::move(label)};
}

/// Cloning with a trivial (one-dimensional) environment: the bare copy map.
inline Scenario cloning_scenario(const PureState& psi1, const PureState& psi2, const PureState& blank,
                                 std::string label = "cloning") {
  return cloning_scenario(psi1, psi2, blank, trivial_register(), trivial_register(), std::move(label));
}

/// |psi_i>|psi_i> -> |psi_i>|standard>, closed regime.
inline Scenario deleting_scenario(const PureState& psi1, const PureState& psi2, const PureState& standard,
                                  std::string label = "deleting") {
  detail::require_dims(psi1, psi2, "deleting_scenario(psi1, psi2)");
  detail::require_dims(psi1, standard, "deleting_scenario(psi, standard)");
  return {ScenarioKind::deleting,
          Regime::closed,
          {tensor_product(psi1, psi1), tensor_product(psi2, psi2)},
          {tensor_product(psi1, standard), tensor_product(psi2, standard)},
          std::move(label)};
}

/// |psi_i>|psi_i> -> |psi_i>|a_i>, closed regime. Requires |<a1|a2>| > |<psi1|psi2>|.
inline Scenario generalized_deleting_scenario(const PureState& psi1, const PureState& psi2, const PureState& a1,
                                              const PureState& a2, std::string label = "generalized-deleting") {
  detail::require_dims(psi1, psi2, "generalized_deleting_scenario(psi1, psi2)");
  detail::require_dims(a1, a2, "generalized_deleting_scenario(a1, a2)");
  const double c = std::abs(overlap(psi1, psi2));
  const double ca = std::abs(overlap(a1, a2));
  if (!(ca > c + tolerance::nearer_than))
    throw NotADeletingMap("not a deleting map: ancilla overlap " + std::to_string(ca) +
                          " is not larger than input overlap " + std::to_string(c));
  return {ScenarioKind::generalized_deleting,
          Regime::closed,
          {tensor_product(psi1, psi1), tensor_product(psi2, psi2)},
          {tensor_product(psi1, a1), tensor_product(psi2, a2)},
          std::move(label)};
}

/// Copying a classical bit encoded in two orthogonal states; blank is |0>.
inline Scenario classical_copy_scenario(const PureState& bit0, const PureState& bit1,
                                        std::string label = "classical-copy") {
  detail::require_dims(bit0, bit1, "classical_copy_scenario");
  const double c = std::abs(overlap(bit0, bit1));
  if (c > tolerance::orthogonality)
    throw ValidationError("classical_copy_scenario: states are not orthogonal (overlap " + std::to_string(c) + ")");
  const PureState blank(PureState::basis(bit0.dim(), 0).amplitudes(), bit0.dims());
  Scenario s = cloning_scenario(bit0, bit1, blank, std::move(label));
  return {ScenarioKind::classical_copy, Regime::open, s.inputs(), s.targets(), s.label()};
}

/// Target equals input; realized by the identity.
inline Scenario identity_scenario(const PureState& psi1, const PureState& psi2, std::string label = "identity") {
  detail::require_dims(psi1, psi2, "identity_scenario");
  return {ScenarioKind::identity, Regime::closed, {psi1, psi2}, {psi1, psi2}, std::move(label)};
}

}  // namespace infocons
