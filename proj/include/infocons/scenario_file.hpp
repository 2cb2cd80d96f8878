#pragma once

// Scenario files: a line-oriented key-value tree.
//
//   # comment
//   version = 1
//   kind = cloning            # cloning | deleting | generalized-deleting | classical-copy
//   label = free text
//
//   [states]                  # complex amplitudes as [re, im] pairs
//   psi1 = [[1, 0], [0, 0]]
//   psi2 = [[0.7071, 0], [0.7071, 0]]
//
//   [search]                  # optional
//   restarts = 20
//   iterations = 5000
//   seed = 7
//
// `states.psi1 = ...` is equivalent to `psi1 = ...` under `[states]`.
// Allowed state keys depend on the kind:
//   cloning               psi1 psi2 [blank] [env1 env2]
//   deleting              psi1 psi2 [standard]
//   generalized-deleting  psi1 psi2 a1 a2
//   classical-copy        psi1 psi2
// Unknown keys are rejected. Probabilities are not configurable: every
// scenario is an equal mixture of its two branches.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "infocons/errors.hpp"
#include "infocons/scenarios.hpp"

namespace infocons {

inline constexpr int scenario_file_version = 1;

struct SearchBudget {
  std::size_t restarts = 10;
  std::size_t iterations = 2000;
  std::uint64_t seed = 1;

  bool operator==(const SearchBudget&) const = default;
};

struct ScenarioFile {
  int version = scenario_file_version;
  ScenarioKind kind = ScenarioKind::cloning;
  std::string label;
  std::map<std::string, std::vector<Complex>> states;
  std::optional<SearchBudget> search;
};

inline std::optional<ScenarioKind> parse_kind(std::string_view s) {
  if (s == "cloning") return ScenarioKind::cloning;
  if (s == "deleting") return ScenarioKind::deleting;
  if (s == "generalized-deleting") return ScenarioKind::generalized_deleting;
  if (s == "classical-copy") return ScenarioKind::classical_copy;
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct StateKeys {
  std::set<std::string> required;
  std::set<std::string> optional;
};

inline StateKeys state_keys(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::cloning: return {{"psi1", "psi2"}, {"blank", "env1", "env2"}};
    case ScenarioKind::deleting: return {{"psi1", "psi2"}, {"standard"}};
    case ScenarioKind::generalized_deleting: return {{"psi1", "psi2", "a1", "a2"}, {}};
    case ScenarioKind::classical_copy: return {{"psi1", "psi2"}, {}};
    case ScenarioKind::identity: break;
  }
  return {};
}

inline std::vector<Complex> parse_amplitudes(std::string_view value, std::size_t line, const std::string& key) {
  static const std::regex non_finite(R"((^|[^A-Za-z])(nan|inf|infinity)([^A-Za-z]|$))", std::regex::icase);
  const std::string text(value);
  if (std::regex_search(text, non_finite)) throw ParseError(line, key, "non-finite number");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line, key, std::string("syntax error in amplitude list: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw ParseError(line, key, "expected a non-empty list of [re, im] pairs");
  std::vector<Complex> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw ParseError(line, key, "each amplitude must be a [re, im] pair of numbers");
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(line, key, "non-finite number");
    out.emplace_back(re, im);
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view value, std::size_t line, const std::string& key, bool positive) {
  std::uint64_t v = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, key, "expected a non-negative integer");
  if (positive && v == 0) throw ParseError(line, key, "must be >= 1");
  return v;
}

inline std::string format_amplitudes(const std::vector<Complex>& amps) {
  std::string out = "[";
  char buf[64];
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i) out += ", ";
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", amps[i].real(), amps[i].imag());
    out += buf;
  }
  return out + "]";
}

}  // namespace detail

/// Parses and validates a scenario file. Diagnostics name the line and key.
inline ScenarioFile parse_scenario_file(std::string_view text) {
  ScenarioFile f;
  std::optional<std::size_t> version_line, kind_line;
  std::map<std::string, std::size_t> state_lines;
  std::set<std::string> seen;
  std::string section;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.front() == '[' && line.find('=') == std::string_view::npos) {
      if (line.back() != ']') throw ParseError(line_no, {}, "syntax error: unterminated section header");
      section = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (section != "states" && section != "search")
        throw ParseError(line_no, section, "unknown section");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, {}, "syntax error: expected 'key = value'");
    std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, {}, "syntax error: empty key");
    if (key.find('.') == std::string::npos && !section.empty()) key = section + "." + key;
    if (!seen.insert(key).second) throw ParseError(line_no, key, "duplicate key");
    if (value.empty()) throw ParseError(line_no, key, "missing value");

    if (key == "version") {
      f.version = static_cast<int>(detail::parse_count(value, line_no, key, true));
      if (f.version != scenario_file_version)
        throw ParseError(line_no, key, "unsupported version " + std::to_string(f.version));
      version_line = line_no;
    } else if (key == "kind") {
      const auto k = parse_kind(value);
      if (!k) throw ParseError(line_no, key, "unknown kind '" + std::string(value) + "'");
      f.kind = *k;
      kind_line = line_no;
    } else if (key == "label") {
      f.label = std::string(value);
    } else if (key.starts_with("states.")) {
      static const std::set<std::string> state_names = {"psi1", "psi2", "blank", "env1",
                                                        "env2", "standard", "a1", "a2"};
      const std::string name = key.substr(7);
      if (!state_names.contains(name)) throw ParseError(line_no, key, "unknown key");
      f.states[name] = detail::parse_amplitudes(value, line_no, key);
      state_lines[name] = line_no;
    } else if (key.starts_with("search.")) {
      if (!f.search) f.search = SearchBudget{};
      const std::string name = key.substr(7);
      if (name == "restarts")
        f.search->restarts = detail::parse_count(value, line_no, key, true);
      else if (name == "iterations")
        f.search->iterations = detail::parse_count(value, line_no, key, true);
      else if (name == "seed")
        f.search->seed = detail::parse_count(value, line_no, key, false);
      else
        throw ParseError(line_no, key, "unknown key");
    } else {
      throw ParseError(line_no, key, "unknown key");
    }
  }

  if (!version_line) throw ParseError(0, "version", "missing required key");
  if (!kind_line) throw ParseError(0, "kind", "missing required key");

  const auto keys = detail::state_keys(f.kind);
  for (const auto& [name, line] : state_lines)
    if (!keys.required.contains(name) && !keys.optional.contains(name))
      throw ParseError(line, "states." + name, "unknown key for kind " + std::string(to_string(f.kind)));
  for (const auto& name : keys.required)
    if (!f.states.contains(name)) throw ParseError(0, "states." + name, "missing required key");

  auto require_same_length = [&](const std::string& a, const std::string& b) {
    if (f.states.contains(a) && f.states.contains(b) && f.states[a].size() != f.states[b].size())
      throw ParseError(state_lines[b], "states." + b,
                       "dimension inconsistency: " + std::to_string(f.states[b].size()) + " amplitudes, '" + a +
                           "' has " + std::to_string(f.states[a].size()));
  };
  require_same_length("psi1", "psi2");
  require_same_length("psi1", "blank");
  require_same_length("psi1", "standard");
  require_same_length("a1", "a2");
  require_same_length("env1", "env2");
  if (f.states.contains("env1") != f.states.contains("env2")) {
    const std::string missing = f.states.contains("env1") ? "env2" : "env1";
    throw ParseError(0, "states." + missing, "env1 and env2 must be given together");
  }
  for (const auto& [name, amps] : f.states) {
    double norm = 0.0;
    for (const auto& a : amps) norm += std::norm(a);
    if (norm == 0.0) throw ParseError(state_lines[name], "states." + name, "zero vector");
  }
  return f;
}

/// Canonical text form; parse_scenario_file(serialize(f)) reproduces f.
inline std::string serialize(const ScenarioFile& f) {
  std::string out;
  out += "version = " + std::to_string(f.version) + "\n";
  out += "kind = " + std::string(to_string(f.kind)) + "\n";
  if (!f.label.empty()) out += "label = " + f.label + "\n";
  out += "\n[states]\n";
  for (const auto& [name, amps] : f.states) out += name + " = " + detail::format_amplitudes(amps) + "\n";
  if (f.search) {
    out += "\n[search]\n";
    out += "restarts = " + std::to_string(f.search->restarts) + "\n";
    out += "iterations = " + std::to_string(f.search->iterations) + "\n";
    out += "seed = " + std::to_string(f.search->seed) + "\n";
  }
  return out;
}

/// Builds the scenario a file describes. Blank and standard states default to |0>.
inline Scenario to_scenario(const ScenarioFile& f) {
  auto state = [&](const std::string& name) { return pure_state(std::span<const Complex>(f.states.at(name))); };
  const PureState psi1 = state("psi1");
  const PureState psi2 = state("psi2");
  std::string label = f.label.empty() ? std::string(to_string(f.kind)) : f.label;
  switch (f.kind) {
    case ScenarioKind::cloning: {
      const PureState blank = f.states.contains("blank") ? state("blank") : PureState::basis(psi1.dim(), 0);
      if (f.states.contains("env1"))
        return cloning_scenario(psi1, psi2, blank, state("env1"), state("env2"), std::move(label));
      return cloning_scenario(psi1, psi2, blank, std::move(label));
    }
    case ScenarioKind::deleting: {
      const PureState standard =
          f.states.contains("standard") ? state("standard") : PureState::basis(psi1.dim(), 0);
      return deleting_scenario(psi1, psi2, standard, std::move(label));
    }
    case ScenarioKind::generalized_deleting:
      return generalized_deleting_scenario(psi1, psi2, state("a1"), state("a2"), std::move(label));
    case ScenarioKind::classical_copy: return classical_copy_scenario(psi1, psi2, std::move(label));
    case ScenarioKind::identity: break;
  }
  throw ValidationError("scenario kind cannot be built from a file");
}

}  // namespace infocons
