#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stockdp/agent.hpp"
#include "stockdp/dp.hpp"
#include "stockdp/envs.hpp"
#include "stockdp/functionals.hpp"
#include "stockdp/risk.hpp"

namespace stockdp {

using Json = nlohmann::json;

// Invalid or inconsistent configuration; the CLI maps it to exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

Utility utility_from_json(const Json& j);
Json to_json(const Utility& u);

// {"functional": "expected_utility", "utility": {...}} or {"functional": "nonneg_indicator"}
Functional functional_from_json(const Json& j);
Json to_json(const Functional& k);

// {"lo": .., "hi": .., "points": ..} for one coordinate, or {"axes": [...]}.
StockGrid grid_from_json(const Json& j);
Json to_json(const StockGrid& g);

GridworldSpec gridworld_from_json(const Json& j);
Json to_json(const GridworldSpec& g);

TabularMdp mdp_from_json(const Json& j);
Json to_json(const TabularMdp& m);

Json read_json_file(const std::filesystem::path& p);

enum class SolverKind { vi, pi, classic, agent };
std::string to_string(SolverKind k);

struct RiskSettings {
  std::vector<double> taus;
  RiskSide side = RiskSide::averse;
  double c_min = 0.0;
  double c_max = 0.0;
  double step = 0.01;
  std::size_t episodes = 10000;
};

struct RunConfig {
  std::string environment;  // built-in name, or a JSON file path resolved against base_dir
  std::filesystem::path base_dir;
  std::optional<Json> inline_environment;
  bool time_expand = true;
  Functional objective = Functional::expected(Utility::neg_abs());
  StockGrid grid{-2.0, 2.0, 401};
  SolverKind solver = SolverKind::vi;
  bool exact_finite_horizon = true;  // vi on finite horizons uses backward induction
  bool dump_distributions = true;
  ValueIterationOptions vi;
  PolicyIterationOptions pi;
  DpOptions dp;
  AgentConfig agent;
  std::size_t agent_steps = 200000;
  std::vector<Vec> eval_c0;
  std::size_t episodes = 200;
  std::size_t max_steps = 1000;
  double bin_width = 0.1;
  std::optional<RiskSettings> risk;
  std::filesystem::path policy_file;  // empty means <out>/policy.csv
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::filesystem::path out = "out";

  std::filesystem::path policy_path() const { return policy_file.empty() ? out / "policy.csv" : policy_file; }
};

// Throws ConfigError with a message naming the offending field.
RunConfig run_config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& p);

struct Environment {
  std::string name;
  TabularMdp mdp;
  std::optional<CompiledGridworld> gridworld;
  std::size_t max_steps = 1000;  // rollout truncation
};

Environment resolve_environment(const RunConfig& cfg);

}  // namespace stockdp
