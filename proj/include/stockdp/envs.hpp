#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stockdp/dp.hpp"
#include "stockdp/mdp.hpp"

namespace stockdp {

enum class GridAction { up, down, left, right, noop };
std::string to_string(GridAction a);
GridAction grid_action_from_string(const std::string& s);

struct CellSpec {
  bool terminating = false;
  Vec reward;              // empty means no reward
  bool bernoulli = false;  // reward paid with probability one half
};

struct GridworldSpec {
  std::string name;
  std::size_t height = 4;
  std::size_t width = 4;
  std::size_t start_row = 0;
  std::size_t start_col = 0;
  std::size_t reward_dim = 1;
  std::vector<CellSpec> cells;  // row-major, height * width
  Vec step_reward;              // added to every transition out of a non-terminal cell
  std::vector<GridAction> actions{GridAction::up, GridAction::down, GridAction::left,
                                  GridAction::right, GridAction::noop};
  std::size_t episode_cap = 16;
  double discount = 1.0;

  CellSpec& cell(std::size_t row, std::size_t col) { return cells[row * width + col]; }
  const CellSpec& cell(std::size_t row, std::size_t col) const { return cells[row * width + col]; }
  void validate() const;
};

// Blank grid with no rewards or terminating cells.
GridworldSpec make_gridworld(std::string name, std::size_t height, std::size_t width, double discount,
                             std::size_t reward_dim = 1);

struct CompiledGridworld {
  TabularMdp mdp;
  std::vector<std::size_t> cell_of_state;  // row-major cell index
  std::vector<std::size_t> time_of_state;  // step index; zero when not time-expanded
  bool time_expanded = true;
  std::size_t episode_cap = 16;
};

// With time expansion the state is (step, cell) and the layer reached after
// episode_cap steps is terminal, so every episode ends within the cap.
CompiledGridworld compile(const GridworldSpec& spec, bool time_expand = true);

std::vector<std::string> builtin_env_names();
std::optional<GridworldSpec> builtin_gridworld(const std::string& name);
TabularMdp counterexample_c2();
TabularMdp build_env(const std::string& name);

struct Step {
  std::size_t state = 0;
  Vec stock;
  std::size_t action = 0;
  Vec reward;
  std::size_t next_state = 0;
  Vec next_stock;
  bool from_terminal = false;  // stock is frozen on terminal self-loops
};

struct EpisodeTrace {
  std::vector<Step> steps;
  Vec discounted_return;
  bool interrupted = false;
};

struct RolloutOptions {
  std::size_t episodes = 200;
  std::uint64_t seed = 0;
  std::size_t max_steps = 1000;  // truncation for MDPs without a finite horizon
  std::size_t threads = 1;
  bool keep_traces = true;
};

struct HistogramBin {
  double low = 0.0;
  double high = 0.0;
  double frequency = 0.0;
};

struct RolloutResult {
  std::vector<EpisodeTrace> traces;
  std::vector<Vec> returns;  // per episode discounted return vector
};

// Episodes from (initial state, c0). The true stock is tracked and snapped only
// to look up the policy's tie-set, which is sampled uniformly.
RolloutResult rollout(const TabularMdp& mdp, const StockGrid& grid, const Policy& pi, const Vec& c0,
                      const RolloutOptions& opts);

// Bins of the given width aligned to multiples of the width; frequencies sum to one.
std::vector<HistogramBin> histogram(const std::vector<double>& values, double bin_width);

// Rewrites the stocks of a recorded trace as if the episode had started from
// new_c0; states, actions and rewards are unchanged.
EpisodeTrace stock_edit(const EpisodeTrace& trace, const Vec& new_c0, double gamma);

// Independent per-episode seeds derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace stockdp
