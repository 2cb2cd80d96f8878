#pragma once

// Human-readable and machine-readable renderings of audit and search results.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "infocons/audit.hpp"
#include "infocons/search.hpp"

namespace infocons {

/// Fixed-point text with `places` decimals; never prints a negative zero.
inline std::string fixed(double v, int places, bool plus_sign = false) {
  char buf[64];
  std::snprintf(buf, sizeof buf, plus_sign ? "%+.*f" : "%.*f", places, v);
  std::string s(buf);
  if (s.find_first_of("123456789") == std::string::npos) {
    std::snprintf(buf, sizeof buf, "%.*f", places, 0.0);
    s = buf;
  }
  return s;
}

/// Exit status contract of the `audit` command.
inline int exit_status(Verdict v) {
  switch (v) {
    case Verdict::conserved: return 0;
    case Verdict::increase_violation: return 3;
    case Verdict::decrease_violation: return 4;
  }
  return 2;
}

inline std::string format_report(const Scenario& s, const AuditReport& r) {
  std::string out;
  out += "scenario:       " + s.label() + " (" + std::string(to_string(s.kind())) + ")\n";
  out += "regime:         " + std::string(to_string(r.regime)) + "\n";
  if (r.diagnostics) {
    out += "overlap c:      " + fixed(r.diagnostics->c, 6) + "\n";
    out += "overlap c_out:  " + fixed(r.diagnostics->c_out, 6) + "\n";
  }
  out += "s_in:           " + fixed(r.s_in.value(), 6) + " bits\n";
  out += "s_out:          " + fixed(r.s_out.value(), 6) + " bits\n";
  out += "delta:          " + fixed(r.delta, 6, true) + " bits\n";
  out += "verdict:        " + std::string(to_string(r.verdict)) + "\n";
  out += "gram_preserved: " + std::string(r.gram_preserved ? "true" : "false") + "\n";
  return out;
}

inline nlohmann::ordered_json to_json(const Scenario& s, const AuditReport& r) {
  nlohmann::ordered_json j;
  j["scenario"] = s.label();
  j["kind"] = to_string(s.kind());
  j["regime"] = to_string(r.regime);
  j["s_in_bits"] = r.s_in.value();
  j["s_out_bits"] = r.s_out.value();
  j["delta_bits"] = r.delta;
  j["verdict"] = to_string(r.verdict);
  j["gram_preserved"] = r.gram_preserved;
  if (r.diagnostics) {
    j["c"] = r.diagnostics->c;
    j["c_out"] = r.diagnostics->c_out;
    j["analytic_s_in_bits"] = r.diagnostics->analytic_in.value();
    j["analytic_s_out_bits"] = r.diagnostics->analytic_out.value();
  }
  j["exit_status"] = exit_status(r.verdict);
  return j;
}

inline std::string format_search(const Scenario& s, const SearchResult& r) {
  std::string out;
  out += "scenario:       " + s.label() + " (" + std::string(to_string(s.kind())) + ")\n";
  out += "best_error:     " + fixed(r.best_error, 6) + "\n";
  out += "restarts:       " + std::to_string(r.restarts_used) + "\n";
  out += "iterations:     " + std::to_string(r.iterations_per_restart) + "\n";
  out += "seed:           " + std::to_string(r.seed) + "\n";
  out += "note:           error floor is an empirical search result, not a derived bound\n";
  return out;
}

inline nlohmann::ordered_json to_json(const Scenario& s, const SearchResult& r) {
  nlohmann::ordered_json j;
  j["scenario"] = s.label();
  j["kind"] = to_string(s.kind());
  j["best_error"] = r.best_error;
  j["restarts"] = r.restarts_used;
  j["iterations"] = r.iterations_per_restart;
  j["seed"] = r.seed;
  j["best_params"] = r.best_params;
  return j;
}

}  // namespace infocons
