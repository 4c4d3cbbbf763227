#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "stockdp/dp.hpp"
#include "stockdp/functionals.hpp"
#include "stockdp/mdp.hpp"

namespace stockdp {

// n quantile values per reward coordinate for every (state, stock cell, action).
class QuantileTable {
 public:
  QuantileTable() = default;
  QuantileTable(std::size_t num_states, std::size_t num_cells, std::size_t num_actions, std::size_t dims,
                std::size_t n_quantiles);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_cells() const { return num_cells_; }
  std::size_t num_actions() const { return num_actions_; }
  std::size_t dims() const { return dims_; }
  std::size_t n_quantiles() const { return n_; }
  std::size_t entry_size() const { return dims_ * n_; }
  std::size_t num_entries() const { return num_states_ * num_cells_ * num_actions_; }
  std::size_t entry(std::size_t s, std::size_t cell, std::size_t a) const {
    return (s * num_cells_ + cell) * num_actions_ + a;
  }

  // Coordinate-major block of dims * n values.
  std::span<double> at(std::size_t s, std::size_t cell, std::size_t a) {
    return {values_.data() + entry(s, cell, a) * entry_size(), entry_size()};
  }
  std::span<const double> at(std::size_t s, std::size_t cell, std::size_t a) const {
    return {values_.data() + entry(s, cell, a) * entry_size(), entry_size()};
  }
  std::span<double> at_entry(std::size_t e) { return {values_.data() + e * entry_size(), entry_size()}; }

  // Quantile level of index i: (2i + 1) / (2n).
  double tau(std::size_t i) const { return (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(n_)); }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }
  bool same_shape(const QuantileTable& o) const;
  bool sorted() const;
  void sort_entry(std::size_t e);
  bool operator==(const QuantileTable&) const = default;

 private:
  std::size_t num_states_ = 0;
  std::size_t num_cells_ = 0;
  std::size_t num_actions_ = 0;
  std::size_t dims_ = 1;
  std::size_t n_ = 1;
  std::vector<double> values_;
};

struct AgentConfig {
  std::size_t n_quantiles = 128;
  double learning_rate = 0.05;
  double learning_rate_final = 0.05;  // linear decay towards this over training
  double target_mix = 1e-2;
  double epsilon = 0.1;
  double epsilon_final = 0.1;
  Vec c0_min{-1.0};
  Vec c0_max{1.0};
  std::size_t batch_size = 64;
  std::size_t trajectory_length = 16;
  bool stock_editing = true;
  double tie_tol = 1e-9;
  std::size_t checkpoint_every = 0;  // environment steps between learning-curve points; 0 disables
  std::vector<Vec> eval_c0;
  std::size_t eval_episodes = 100;
  std::size_t threads = 1;

  void validate(const StockGrid& grid) const;
};

struct Transition {
  std::size_t state = 0;
  std::size_t cell = 0;
  std::size_t action = 0;
  Vec reward;
  std::size_t next_state = 0;
  std::size_t next_cell = 0;
  bool next_terminal = false;
};

// Tie-set of the greedy rule at (s, cell), computed from the given table.
ActionMask greedy_actions(const QuantileTable& table, const Evaluator& ev, const StockGrid& grid, std::size_t s,
                          std::size_t cell, double tie_tol = 1e-9);

// Epsilon-greedy with uniform tie-breaking; greedy values come from the target table.
std::size_t act(const QuantileTable& target, const Evaluator& ev, const StockGrid& grid, std::size_t s,
                std::size_t cell, double epsilon, std::mt19937_64& rng, double tie_tol = 1e-9);

// One batch of summed quantile-regression subgradient steps, followed by a
// sort of every touched entry. Targets are r + gamma * theta_bar(s', c', a')
// mixed uniformly over the target table's greedy tie-set; terminal successors
// contribute a point mass at zero.
void quantile_update(QuantileTable& table, const QuantileTable& target, const Evaluator& ev,
                     const StockGrid& grid, std::span<const Transition> batch, double gamma, double lr,
                     double tie_tol = 1e-9);

// target <- (1 - alpha) target + alpha table.
void target_mix(const QuantileTable& table, QuantileTable& target, double alpha);

Policy greedy_policy(const QuantileTable& table, const Evaluator& ev, const StockGrid& grid,
                     const TabularMdp& mdp, double tie_tol = 1e-9);

struct CurvePoint {
  std::size_t steps = 0;
  std::vector<double> objectives;  // mean f(c0 + G) per evaluation stock
};

struct TrainResult {
  QuantileTable table;
  QuantileTable target;
  std::vector<CurvePoint> curve;
  std::size_t steps = 0;
};

// Mean of f(c0 + G) over greedy rollouts of the target table's policy.
std::vector<double> evaluate_agent(const QuantileTable& target, const TabularMdp& mdp, std::size_t episode_cap,
                                   const StockGrid& grid, const Functional& k, const AgentConfig& cfg,
                                   std::uint64_t seed);

// Episodes are truncated after episode_cap steps; truncation is not treated as
// termination, so the last transition still bootstraps.
TrainResult train(const TabularMdp& mdp, std::size_t episode_cap, const StockGrid& grid, const Functional& k,
                  const AgentConfig& cfg, std::size_t total_steps, std::uint64_t seed);

}  // namespace stockdp
