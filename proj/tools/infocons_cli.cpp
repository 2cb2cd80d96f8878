// infocons: information-conservation audits of cloning and deleting maps.
//
// Exit status: 0 Conserved (or any completed non-audit command),
//              1 input/usage error, 2 internal error,
//              3 IncreaseViolation, 4 DecreaseViolation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "infocons/infocons.hpp"

namespace {

using namespace infocons;

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, {}, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(0, origin, "seed must be a non-negative integer, got '" + text + "'");
  }
}

int run_audit(const std::string& path, bool json) {
  const auto file = parse_scenario_file(read_file(path));
  const auto scenario = to_scenario(file);
  const auto report = audit(scenario);
  if (json)
    std::cout << to_json(scenario, report).dump() << "\n";
  else
    std::cout << format_report(scenario, report);
  return exit_status(report.verdict);
}

int run_sweep(const std::string& kind_text, double from, double to, double step, const std::string& out_path) {
  const auto kind = parse_kind(kind_text);
  if (!kind) throw ValidationError("unknown sweep kind '" + kind_text + "'");
  const auto table = sweep_table(run_sweep(*kind, sweep_grid(from, to, step)));
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write '" + out_path + "'");
  out << table;
  out.flush();
  if (!out) throw ValidationError("write to '" + out_path + "' failed");
  return 0;
}

int run_search(const std::string& path, std::optional<std::uint64_t> seed_flag, bool json) {
  const auto file = parse_scenario_file(read_file(path));
  const auto scenario = to_scenario(file);
  SearchBudget budget = file.search.value_or(SearchBudget{});
  if (const char* env = std::getenv("INFOCONS_SEED"); env && *env) budget.seed = parse_seed(env, "INFOCONS_SEED");
  if (seed_flag) budget.seed = *seed_flag;
  const auto result = minimize_error(scenario, budget.restarts, budget.iterations, budget.seed);
  if (json)
    std::cout << to_json(scenario, result).dump() << "\n";
  else
    std::cout << format_search(scenario, result);
  return 0;
}

int run_demo(bool json) {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  const PureState plus = pure_state({1.0, 1.0});
  const Scenario scenarios[] = {
      cloning_scenario(zero, plus, zero, "cloning |0>,|+>"),
      deleting_scenario(zero, plus, zero, "deleting |0>,|+>"),
      classical_copy_scenario(zero, one, "classical copy |0>,|1>"),
  };
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  bool first = true;
  for (const auto& s : scenarios) {
    const auto r = audit(s);
    if (json) {
      records.push_back(to_json(s, r));
      continue;
    }
    if (!first) std::cout << "\n";
    first = false;
    std::cout << format_report(s, r) << "exit_status:    " << exit_status(r.verdict) << "\n";
  }
  if (json) std::cout << records.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-conservation audits of cloning and deleting dynamics"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a machine-readable JSON record instead of text");

  std::string audit_path;
  auto* audit_cmd = app.add_subcommand("audit", "Audit a scenario file's information ledger");
  audit_cmd->add_option("file", audit_path, "Scenario file")->required();

  std::string sweep_kind, sweep_out;
  double sweep_from = 0.0, sweep_to = 1.0, sweep_step = 0.1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the ledger over an overlap grid");
  sweep_cmd->add_option("--kind", sweep_kind, "cloning | deleting")->required();
  sweep_cmd->add_option("--from", sweep_from, "First overlap")->required();
  sweep_cmd->add_option("--to", sweep_to, "Last overlap")->required();
  sweep_cmd->add_option("--step", sweep_step, "Grid step")->required();
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

  std::string search_path;
  std::optional<std::string> seed_text;
  auto* search_cmd = app.add_subcommand("search", "Search the unitary group for a realization of the scenario");
  search_cmd->add_option("file", search_path, "Scenario file")->required();
  search_cmd->add_option("--seed", seed_text, "Seed (overrides INFOCONS_SEED and the file)");

  auto* demo_cmd = app.add_subcommand("demo", "Ledgers of the canonical cloning, deleting and classical scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*audit_cmd) return run_audit(audit_path, json);
    if (*sweep_cmd) return run_sweep(sweep_kind, sweep_from, sweep_to, sweep_step, sweep_out);
    if (*search_cmd) {
      std::optional<std::uint64_t> seed;
      if (seed_text) seed = parse_seed(*seed_text, "--seed");
      return run_search(search_path, seed, json);
    }
    if (*demo_cmd) return run_demo(json);
  } catch (const infocons::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const infocons::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
