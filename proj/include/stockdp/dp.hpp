#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stockdp/dist.hpp"
#include "stockdp/functionals.hpp"
#include "stockdp/mdp.hpp"

namespace stockdp {

using ActionMask = std::uint64_t;

inline ActionMask action_bit(std::size_t a) { return ActionMask{1} << a; }
inline ActionMask all_actions(std::size_t n) { return n >= 64 ? ~ActionMask{0} : action_bit(n) - 1; }
std::size_t mask_size(ActionMask m);
std::vector<std::size_t> mask_actions(ActionMask m);

// Stationary Markov policy over (state, stock cell); each entry is a non-empty
// tie-set followed uniformly at random.
class Policy {
 public:
  Policy() = default;
  Policy(std::size_t num_states, std::size_t num_cells, std::size_t num_actions);
  static Policy constant(std::size_t num_states, std::size_t num_cells, std::size_t num_actions,
                         std::size_t action);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_cells() const { return num_cells_; }
  std::size_t num_actions() const { return num_actions_; }

  ActionMask at(std::size_t s, std::size_t cell) const { return table_[s * num_cells_ + cell]; }
  ActionMask& at(std::size_t s, std::size_t cell) { return table_[s * num_cells_ + cell]; }
  const std::vector<ActionMask>& table() const { return table_; }

  bool operator==(const Policy&) const = default;

 private:
  std::size_t num_states_ = 0;
  std::size_t num_cells_ = 0;
  std::size_t num_actions_ = 0;
  std::vector<ActionMask> table_;
};

struct DpOptions {
  double tie_tol = 1e-9;
  DistOptions dist{};
  std::size_t threads = 1;
};

struct SolveReport {
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> residuals;          // sup-Wasserstein between successive tables
  std::vector<double> objective_changes;  // sup-norm change of F_K between successive tables
  std::vector<std::vector<double>> objectives;  // per iteration, when recorded
  std::vector<Policy> policies;                 // greedy policy per iteration, when recorded
  Policy policy;
  ReturnFunction eta;
  std::vector<double> objective;  // F_K of the final table
};

ReturnFunction bellman(const TabularMdp& mdp, const StockGrid& grid, const Policy& pi,
                       const ReturnFunction& eta, const DpOptions& opts = {});

ActionReturnFunction lookahead(const TabularMdp& mdp, const StockGrid& grid, const ReturnFunction& eta,
                               const DpOptions& opts = {});

struct GreedyResult {
  Policy policy;
  ReturnFunction eta;
};

// Terminal states must be supplied so they keep a point mass at zero.
GreedyResult greedy(const Functional& k, const ActionReturnFunction& xi, const TabularMdp& mdp,
                    const DpOptions& opts = {});

struct ValueIterationOptions {
  std::size_t max_iters = 1000;
  double objective_tol = 1e-8;
  bool record_objectives = false;
  bool record_policies = false;
};

SolveReport value_iteration(const TabularMdp& mdp, const StockGrid& grid, const Functional& k,
                            const ReturnFunction& eta0, const ValueIterationOptions& vi = {},
                            const DpOptions& opts = {});
SolveReport value_iteration(const TabularMdp& mdp, const StockGrid& grid, const Functional& k,
                            const ValueIterationOptions& vi = {}, const DpOptions& opts = {});

// Exact solve of a finite-horizon MDP by one backup per state, successors
// first. Produces the same table and greedy policy as horizon-many
// synchronous value-iteration sweeps from the zero table.
SolveReport backward_induction(const TabularMdp& mdp, const StockGrid& grid, const Functional& k,
                               const DpOptions& opts = {});

struct PolicyEvaluationOptions {
  std::size_t max_sweeps = 10000;
  double tol = 1e-10;
};

struct PolicyEvaluation {
  ReturnFunction eta;
  std::size_t sweeps = 0;
  bool converged = false;
};

PolicyEvaluation policy_evaluation(const TabularMdp& mdp, const StockGrid& grid, const Policy& pi,
                                   const PolicyEvaluationOptions& pe = {}, const DpOptions& opts = {});

struct PolicyIterationOptions {
  std::size_t max_iters = 100;
  PolicyEvaluationOptions evaluation{};
};

SolveReport policy_iteration(const TabularMdp& mdp, const StockGrid& grid, const Functional& k,
                             const Policy& pi0, const PolicyIterationOptions& pio = {},
                             const DpOptions& opts = {});

// Classic scalar-reward MDP over augmented states (s, cell), indexed
// s * num_cells + cell, with discount alpha and the designed reward
// alpha f(c') - f(c) + (1 - alpha) f(0).
TabularMdp reward_design(const Utility& f, double alpha, const TabularMdp& mdp, const StockGrid& grid);

struct ClassicSolution {
  std::vector<double> values;
  std::vector<ActionMask> policy;
  std::size_t iterations = 0;
};

ClassicSolution classic_solve(const TabularMdp& classic, double tie_tol = 1e-9,
                              std::size_t max_iters = 100000, double tol = 1e-12);
std::vector<double> classic_evaluate(const TabularMdp& classic, std::span<const ActionMask> policy,
                                     std::size_t max_iters = 100000, double tol = 1e-12);

struct GpeResult {
  std::vector<ReturnFunction> etas;
  // objectives[i][j]: F_{K_j} of policy i's return function.
  std::vector<std::vector<std::vector<double>>> objectives;
  std::size_t evaluations = 0;
};

GpeResult gpe(std::span<const Policy> policies, std::span<const Functional> functionals,
              const TabularMdp& mdp, const StockGrid& grid, const PolicyEvaluationOptions& pe = {},
              const DpOptions& opts = {});

Policy gpi(std::span<const Policy> policies, const Functional& k, const TabularMdp& mdp,
           const StockGrid& grid, const PolicyEvaluationOptions& pe = {}, const DpOptions& opts = {});

}  // namespace stockdp
