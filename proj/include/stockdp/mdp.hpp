#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace stockdp {

using Vec = std::vector<double>;
using SmallVec = boost::container::small_vector<double, 2>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  double prob = 0.0;
  SmallVec reward;
  std::size_t next = 0;
};

// Finite MDP with finite-support (possibly vector) rewards. Terminal states
// carry a single zero-reward self-loop for every action.
class TabularMdp {
 public:
  TabularMdp() = default;
  TabularMdp(std::size_t num_states, std::size_t num_actions, std::size_t reward_dim,
             double discount);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_actions() const { return num_actions_; }
  std::size_t reward_dim() const { return reward_dim_; }
  double discount() const { return discount_; }
  std::size_t initial_state() const { return initial_state_; }
  bool terminal(std::size_t s) const { return terminal_[s] != 0; }

  std::span<const Outcome> outcomes(std::size_t s, std::size_t a) const {
    return outcomes_[s * num_actions_ + a];
  }

  void add_outcome(std::size_t s, std::size_t a, double prob, std::span<const double> reward,
                   std::size_t next);
  void add_outcome(std::size_t s, std::size_t a, double prob, double reward, std::size_t next);
  // Replaces all outcomes of s with the absorbing zero-reward self-loop.
  void set_terminal(std::size_t s);
  void set_initial_state(std::size_t s);

  // Throws Error describing the first violated invariant.
  void validate() const;

 private:
  std::size_t num_states_ = 0;
  std::size_t num_actions_ = 0;
  std::size_t reward_dim_ = 1;
  double discount_ = 1.0;
  std::size_t initial_state_ = 0;
  std::vector<std::uint8_t> terminal_;
  std::vector<std::vector<Outcome>> outcomes_;
};

// c' = (c + r) / gamma, componentwise, without snapping.
Vec stock_update(std::span<const double> c, std::span<const double> r, double gamma);
double stock_update(double c, double r, double gamma);

struct GridAxis {
  double lo = -1.0;
  double hi = 1.0;
  std::size_t points = 2;

  double spacing() const { return (hi - lo) / static_cast<double>(points - 1); }
  double point(std::size_t i) const { return lo + spacing() * static_cast<double>(i); }
  // Clamp into [lo, hi], then round to the nearest point; halves round up.
  std::size_t snap(double c) const;
};

// Uniform product grid over the stock space. Cell indices are mixed-radix
// with the first coordinate varying slowest.
class StockGrid {
 public:
  StockGrid() = default;
  explicit StockGrid(std::vector<GridAxis> axes);
  StockGrid(double lo, double hi, std::size_t points);

  std::size_t dims() const { return axes_.size(); }
  std::size_t num_cells() const { return num_cells_; }
  const GridAxis& axis(std::size_t d) const { return axes_[d]; }
  const std::vector<GridAxis>& axes() const { return axes_; }

  std::size_t snap(std::span<const double> c) const;
  std::size_t snap(double c) const { return snap(std::span<const double>(&c, 1)); }
  Vec point(std::size_t cell) const;
  void point(std::size_t cell, std::span<double> out) const;
  std::vector<std::size_t> coords(std::size_t cell) const;
  std::size_t cell(std::span<const std::size_t> coords) const;
  double max_spacing() const;

  bool operator==(const StockGrid& other) const;

 private:
  std::vector<GridAxis> axes_;
  std::size_t num_cells_ = 0;
};

struct SnappedStock {
  std::size_t cell;
  Vec stock;
};

SnappedStock snap_stock(std::span<const double> c, const StockGrid& grid);

struct HorizonInfo {
  bool is_finite_horizon = false;
  std::size_t horizon = 0;
};

HorizonInfo horizon_analysis(const TabularMdp& mdp);

// Non-terminal states ordered so every successor precedes its predecessors;
// nullopt when the non-terminal graph has a cycle.
std::optional<std::vector<std::size_t>> successor_first_order(const TabularMdp& mdp);

}  // namespace stockdp
