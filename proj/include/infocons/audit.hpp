#pragma once

// Information ledger for hypothesized dynamics. An increase of the ensemble
// information forbids the map (cloning); so does a decrease in a closed
// system (deleting). The auditor only reads the entropy ledger; it never asks
// whether the map "is" a cloner.

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "infocons/dynamics.hpp"
#include "infocons/entropy.hpp"
#include "infocons/scenarios.hpp"

namespace infocons {

namespace tolerance {
/// |delta| at or below this is conservation.
inline constexpr double conservation_bits = 1e-9;
inline constexpr double gram = 1e-10;
}  // namespace tolerance

enum class Verdict { conserved, increase_violation, decrease_violation };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::conserved: return "Conserved";
    case Verdict::increase_violation: return "IncreaseViolation";
    case Verdict::decrease_violation: return "DecreaseViolation";
  }
  return "Unknown";
}

/// Closed-form cross-check for two equiprobable pure states.
struct TwoStateDiagnostics {
  double c = 0.0;
  double c_out = 0.0;
  Bits analytic_in;   // H((1 + c)/2)
  Bits analytic_out;  // H((1 + c_out)/2)
};

struct AuditReport {
  Bits s_in;
  Bits s_out;
  double delta = 0.0;  // s_out - s_in
  Verdict verdict = Verdict::conserved;
  Regime regime = Regime::open;
  bool gram_preserved = false;
  std::optional<TwoStateDiagnostics> diagnostics;
};

inline Verdict classify(double delta) {
  if (std::abs(delta) <= tolerance::conservation_bits) return Verdict::conserved;
  return delta > 0.0 ? Verdict::increase_violation : Verdict::decrease_violation;
}

/// Generic ledger between two ensembles. No Gram information is available
/// here, so `gram_preserved` is false.
inline AuditReport ledger(const Ensemble& input, const Ensemble& output, Regime regime) {
  AuditReport r;
  r.s_in = ensemble_information(input);
  r.s_out = ensemble_information(output);
  r.delta = r.s_out.value() - r.s_in.value();
  r.verdict = classify(r.delta);
  r.regime = regime;
  return r;
}

/// Holds iff |<in_1|in_2>| = |<out_1|out_2>| within 1e-10; necessary for
/// realizability by isometric (closed, mixing-linear) dynamics.
inline bool gram_preservation_check(const Scenario& s) {
  const double in = std::abs(overlap(s.inputs()[0], s.inputs()[1]));
  const double out = std::abs(overlap(s.targets()[0], s.targets()[1]));
  return std::abs(in - out) <= tolerance::gram;
}

/// c > c^2 * env_overlap for c in (0,1), env_overlap in [0,1].
inline bool overlap_inequality_check(double c, double env_overlap) {
  if (!(c > 0.0 && c < 1.0))
    throw ValidationError("overlap_inequality_check: c must lie in (0,1), got " + std::to_string(c));
  if (!(env_overlap >= 0.0 && env_overlap <= 1.0))
    throw ValidationError("overlap_inequality_check: env_overlap must lie in [0,1], got " +
                          std::to_string(env_overlap));
  return c > c * c * env_overlap;
}

/// Ledger of the scenario's input ensemble against its full target output
/// (copies plus any garbage).
inline AuditReport audit(const Scenario& s) {
  AuditReport r = ledger(s.input_ensemble(), s.target_output_ensemble(), s.regime());
  r.gram_preserved = gram_preservation_check(s);
  r.diagnostics = TwoStateDiagnostics{s.input_overlap(), s.output_overlap(),
                                      two_pure_state_information(s.input_overlap()),
                                      two_pure_state_information(s.output_overlap())};
  return r;
}

namespace detail {
// Splits off trailing Discard stages; they act after the ledger is taken.
inline std::vector<Channel> ledger_stages(const Channel& ch) {
  std::vector<Channel> stages;
  if (const auto* seq = std::get_if<SequenceStage>(&ch.stage()))
    stages = seq->stages;
  else
    stages.push_back(ch);
  while (!stages.empty() && std::holds_alternative<DiscardStage>(stages.back().stage())) stages.pop_back();
  return stages;
}
}  // namespace detail

/// Ledger of the output actually produced by `realization` on the scenario's
/// inputs. Closed-regime scenarios reject any Discard; in the open regime
/// trailing discards are applied only after the ledger is computed.
inline AuditReport audit(const Scenario& s, const Channel& realization) {
  if (s.regime() == Regime::closed && contains_discard(realization))
    throw RegimeError("discarding a subsystem is not allowed in a closed-regime scenario");
  const auto stages = detail::ledger_stages(realization);
  Ensemble achieved = s.input_ensemble();
  if (!stages.empty()) achieved = apply_to_ensemble(Channel::sequence(stages, s.input_ensemble().dims()), achieved);
  AuditReport r = ledger(s.input_ensemble(), achieved, s.regime());
  r.gram_preserved = gram_preservation_check(s);
  return r;
}

}  // namespace infocons
