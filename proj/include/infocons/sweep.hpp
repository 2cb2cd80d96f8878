#pragma once

// Ledger sweeps over the single-copy overlap c = |<psi1|psi2>|, using the
// explicit pair |0> and c|0> + sqrt(1 - c^2)|1>.

#include <cmath>
#include <string>
#include <vector>

#include "infocons/audit.hpp"
#include "infocons/parallel.hpp"
#include "infocons/report.hpp"

namespace infocons {

struct SweepRow {
  double c = 0.0;
  Bits s_in;
  Bits s_out;
  double delta = 0.0;
  bool gram_preserved = false;
};

/// from, from + step, ... up to `to` (inclusive within 1e-9 of a step).
inline std::vector<double> sweep_grid(double from, double to, double step) {
  if (!(std::isfinite(from) && std::isfinite(to) && std::isfinite(step)))
    throw ValidationError("sweep grid: non-finite bound");
  if (!(step > 0.0)) throw ValidationError("sweep grid: step must be > 0");
  if (from < 0.0 || to > 1.0) throw ValidationError("sweep grid: bounds must lie within [0, 1]");
  if (from > to) throw ValidationError("sweep grid: empty grid");
  const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = std::min(1.0, from + static_cast<double>(i) * step);
  return grid;
}

/// The pair |0>, c|0> + sqrt(1-c^2)|1> with overlap exactly c.
inline std::array<PureState, 2> overlap_pair(double c) {
  return {PureState::basis(2, 0), pure_state({Complex(c), Complex(std::sqrt(std::max(0.0, 1.0 - c * c)))})};
}

inline Scenario sweep_scenario(ScenarioKind kind, double c) {
  const auto [psi1, psi2] = overlap_pair(c);
  const PureState zero = PureState::basis(2, 0);
  switch (kind) {
    case ScenarioKind::cloning: return cloning_scenario(psi1, psi2, zero);
    case ScenarioKind::deleting: return deleting_scenario(psi1, psi2, zero);
    default: break;
  }
  throw ValidationError("sweep supports kinds 'cloning' and 'deleting' only");
}

/// Evaluates grid points concurrently; rows keep grid order.
inline std::vector<SweepRow> run_sweep(ScenarioKind kind, const std::vector<double>& grid) {
  if (grid.empty()) throw ValidationError("sweep grid: empty grid");
  if (kind != ScenarioKind::cloning && kind != ScenarioKind::deleting)
    throw ValidationError("sweep supports kinds 'cloning' and 'deleting' only");
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto r = audit(sweep_scenario(kind, grid[i]));
    rows[i] = {grid[i], r.s_in, r.s_out, r.delta, r.gram_preserved};
  });
  return rows;
}

inline constexpr const char* sweep_header = "c,s_in_bits,s_out_bits,delta_bits,gram_preserved";

/// CSV, LF line endings, 9 decimals.
inline std::string sweep_table(const std::vector<SweepRow>& rows) {
  std::string out = std::string(sweep_header) + "\n";
  for (const auto& r : rows)
    out += fixed(r.c, 9) + "," + fixed(r.s_in.value(), 9) + "," + fixed(r.s_out.value(), 9) + "," +
           fixed(r.delta, 9) + "," + (r.gram_preserved ? "true" : "false") + "\n";
  return out;
}

}  // namespace infocons
