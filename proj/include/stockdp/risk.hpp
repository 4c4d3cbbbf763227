#pragma once

#include <cstddef>
#include <vector>

#include "stockdp/dist.hpp"
#include "stockdp/dp.hpp"
#include "stockdp/mdp.hpp"

namespace stockdp {

// Mean of the lower tau-tail, (1/tau) * int_0^tau QF(t) dt, for tau in (0, 1].
double cvar(const AtomicDistribution& nu, double tau);
// Mean of the upper tau-tail, (1/tau) * int_{1-tau}^1 QF(t) dt.
double ocvar(const AtomicDistribution& nu, double tau);

// |CVaR - (c* + E(G - c*)_- / tau)| with c* = QF(tau).
double rockafellar_gap(const AtomicDistribution& nu, double tau);
// |OCVaR - (c* + E(G - c*)_+ / tau)| with c* = QF(1 - tau).
double ocvar_rockafellar_gap(const AtomicDistribution& nu, double tau);

enum class RiskSide { averse, seeking };

struct RiskQuery {
  double tau = 0.5;
  RiskSide side = RiskSide::averse;
  double c_min = -1.0;
  double c_max = 1.0;
  double step = 0.01;
  void validate() const;
};

// Utility whose stock-augmented optimum yields the CVaR (x_-) or OCVaR (x_+).
Utility risk_utility(RiskSide side);

// -c0 + (1/tau) E(c0 + G)_-  (averse) or  -c0 + (1/tau) E(c0 + G)_+  (seeking).
double c0_objective(const AtomicDistribution& g, double c0, double tau, RiskSide side);

struct C0Selection {
  double c0 = 0.0;
  double objective = 0.0;
  std::vector<double> candidates;
  std::vector<double> objectives;
};

// Grid search over c_min + i * step. Averse maximises, seeking minimises;
// ties go to the smaller |c0|. eta must be the evaluated return function of
// the solved policy.
C0Selection select_c0(const ReturnFunction& eta, std::size_t s0, const RiskQuery& q);
C0Selection select_c0(const TabularMdp& mdp, const StockGrid& grid, const Policy& pi, std::size_t s0,
                      const RiskQuery& q, const DpOptions& opts = {});

// Equally weighted empirical distribution of scalar samples.
AtomicDistribution empirical(const std::vector<double>& samples);

}  // namespace stockdp
