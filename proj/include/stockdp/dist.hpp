#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "stockdp/mdp.hpp"

namespace stockdp {

struct Atom {
  double value = 0.0;
  double weight = 0.0;
  bool operator==(const Atom&) const = default;
};

struct DistOptions {
  double merge_tol = 1e-9;
  std::size_t max_atoms = 128;
};

// Finite-support distribution. For vector returns only the per-coordinate
// marginals are stored; each marginal is sorted ascending with weights summing
// to one.
class AtomicDistribution {
 public:
  AtomicDistribution();  // scalar point mass at zero

  static AtomicDistribution dirac(double c);
  static AtomicDistribution dirac(std::span<const double> c);
  static AtomicDistribution from_atoms(std::vector<Atom> atoms, const DistOptions& opts = {});
  static AtomicDistribution from_marginals(std::vector<std::vector<Atom>> marginals,
                                           const DistOptions& opts = {});

  std::size_t dims() const { return ends_.size(); }
  std::span<const Atom> marginal(std::size_t d = 0) const;
  std::size_t size(std::size_t d = 0) const { return marginal(d).size(); }
  double mean(std::size_t d = 0) const;

  bool operator==(const AtomicDistribution& other) const;

 private:
  friend class MixtureBuilder;
  boost::container::small_vector<Atom, 1> atoms_;
  boost::container::small_vector<std::uint32_t, 1> ends_;
};

// Accumulates prob * (scale * X + shift) contributions and produces a merged,
// normalised, capped distribution. Reusable after finish().
class MixtureBuilder {
 public:
  explicit MixtureBuilder(std::size_t dims = 1, DistOptions opts = {});

  void add(double prob, const AtomicDistribution& nu, double scale = 1.0,
           std::span<const double> shift = {});
  void add_atom(std::size_t d, double value, double weight);
  bool empty() const;
  AtomicDistribution finish();

 private:
  std::size_t dims_;
  DistOptions opts_;
  std::vector<std::vector<Atom>> buf_;
};

struct WeightedDistribution {
  double prob;
  AtomicDistribution dist;
};

AtomicDistribution mix(std::span<const WeightedDistribution> parts, const DistOptions& opts = {});
AtomicDistribution affine(const AtomicDistribution& nu, double scale, std::span<const double> shift);
AtomicDistribution affine(const AtomicDistribution& nu, double scale, double shift);

// Quantile function inf{t : P(X <= t) >= tau} of one marginal.
double quantile(std::span<const Atom> marginal, double tau);
double quantile(const AtomicDistribution& nu, double tau, std::size_t d = 0);

AtomicDistribution quantile_project(const AtomicDistribution& nu, std::size_t n,
                                    double merge_tol = 1e-9);

double wasserstein1(std::span<const Atom> a, std::span<const Atom> b);
// Per-coordinate 1-Wasserstein distances, summed.
double wasserstein1(const AtomicDistribution& a, const AtomicDistribution& b);

// Table of distributions over (state, stock cell); starts as a point mass at
// zero everywhere.
class ReturnFunction {
 public:
  ReturnFunction() = default;
  ReturnFunction(std::size_t num_states, StockGrid grid);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_cells() const { return grid_.num_cells(); }
  const StockGrid& grid() const { return grid_; }
  std::size_t index(std::size_t s, std::size_t cell) const { return s * num_cells() + cell; }

  const AtomicDistribution& at(std::size_t s, std::size_t cell) const { return table_[index(s, cell)]; }
  AtomicDistribution& at(std::size_t s, std::size_t cell) { return table_[index(s, cell)]; }
  std::vector<AtomicDistribution>& entries() { return table_; }
  const std::vector<AtomicDistribution>& entries() const { return table_; }

 private:
  std::size_t num_states_ = 0;
  StockGrid grid_;
  std::vector<AtomicDistribution> table_;
};

// Table of distributions over (state, stock cell, action).
class ActionReturnFunction {
 public:
  ActionReturnFunction() = default;
  ActionReturnFunction(std::size_t num_states, std::size_t num_actions, StockGrid grid);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_actions() const { return num_actions_; }
  std::size_t num_cells() const { return grid_.num_cells(); }
  const StockGrid& grid() const { return grid_; }

  const AtomicDistribution& at(std::size_t s, std::size_t cell, std::size_t a) const {
    return table_[(s * num_cells() + cell) * num_actions_ + a];
  }
  AtomicDistribution& at(std::size_t s, std::size_t cell, std::size_t a) {
    return table_[(s * num_cells() + cell) * num_actions_ + a];
  }

 private:
  std::size_t num_states_ = 0;
  std::size_t num_actions_ = 0;
  StockGrid grid_;
  std::vector<AtomicDistribution> table_;
};

double sup_wasserstein(const ReturnFunction& a, const ReturnFunction& b);

}  // namespace stockdp
