#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stockdp/dist.hpp"
#include "stockdp/mdp.hpp"

namespace stockdp {

enum class UtilityKind {
  identity,
  neg_abs,
  neg_part,
  pos_part,
  indicator_pos,
  neg_square,
  shifted_indicator,
  weighted_sum,
  neg_p_norm_q,
  time_plus_violations,
};

// Utility f over stock-shifted returns. Scalar kinds act on one coordinate;
// weighted_sum, neg_p_norm_q and time_plus_violations act on vectors.
struct Utility {
  UtilityKind kind = UtilityKind::identity;
  double margin = 0.0;             // shifted_indicator threshold
  double p = 2.0;                  // neg_p_norm_q
  double q = 1.0;                  // neg_p_norm_q
  std::vector<double> coefficients;  // weighted_sum: one per coordinate; time_plus_violations: alpha_2..alpha_m
  std::vector<Utility> components;   // weighted_sum: scalar utility per coordinate

  static Utility identity() { return of(UtilityKind::identity); }
  static Utility neg_abs() { return of(UtilityKind::neg_abs); }
  static Utility neg_part() { return of(UtilityKind::neg_part); }
  static Utility pos_part() { return of(UtilityKind::pos_part); }
  static Utility indicator_pos() { return of(UtilityKind::indicator_pos); }
  static Utility neg_square() { return of(UtilityKind::neg_square); }
  static Utility shifted_indicator(double margin);
  static Utility weighted_sum(std::vector<double> coefficients, std::vector<Utility> components);
  static Utility neg_p_norm_q(double p, double q);
  static Utility time_plus_violations(std::vector<double> alphas);

  static Utility of(UtilityKind k) {
    Utility u;
    u.kind = k;
    return u;
  }

  bool is_scalar_kind() const;
  // Smallest number of coordinates the utility needs (1 for scalar kinds).
  std::size_t min_dims() const;
  double operator()(std::span<const double> x) const;
  double operator()(double x) const { return (*this)(std::span<const double>(&x, 1)); }
  std::string name() const;
};

enum class ScalarKind : std::uint8_t {
  identity,
  neg_abs,
  neg_part,
  pos_part,
  indicator_pos,
  neg_square,
  shifted_indicator,
  neg_abs_pow,
};

// One coordinate's contribution coef * g(x_d) to a decomposable utility.
struct ScalarTerm {
  ScalarKind kind = ScalarKind::identity;
  double coef = 1.0;
  double param = 0.0;
  double operator()(double x) const;
};

// Per-coordinate terms with f(x) = sum_d term_d(x_d); nullopt when f does not
// split over m coordinates.
std::optional<std::vector<ScalarTerm>> decompose(const Utility& f, std::size_t m);

struct Functional {
  enum class Kind { expected_utility, nonneg_indicator };
  Kind kind = Kind::expected_utility;
  Utility utility;
  std::optional<double> lipschitz_constant;
  std::optional<double> gamma_homogeneity_alpha;

  static Functional expected(Utility f) { return {Kind::expected_utility, std::move(f), {}, {}}; }
  static Functional nonneg_indicator() { return {Kind::nonneg_indicator, {}, {}, {}}; }
  bool is_expected_utility() const { return kind == Kind::expected_utility; }
  std::string name() const;
};

// Precompiled evaluator of K(c + G) for distributions with a fixed number of
// coordinates.
class Evaluator {
 public:
  Evaluator(const Functional& k, std::size_t dims);
  double operator()(const AtomicDistribution& nu, std::span<const double> shift = {}) const;
  double pointwise(std::span<const double> x) const;
  // Same value for an equally weighted quantile table: theta holds n values
  // per coordinate, coordinate-major.
  double on_quantiles(std::span<const double> theta, std::size_t n,
                      std::span<const double> shift = {}) const;
  std::size_t dims() const { return dims_; }

 private:
  bool indicator_;
  std::size_t dims_;
  std::vector<ScalarTerm> terms_;
};

double eval_K(const Functional& k, const AtomicDistribution& nu);
// (F_K eta)(s, cell) = K(c + G(s, c)), laid out as s * num_cells + cell.
std::vector<double> eval_F(const Functional& k, const ReturnFunction& eta);

struct GammaIndifference {
  bool ok = false;
  double alpha = 1.0;
  bool degenerate = false;
};

GammaIndifference check_gamma_indifference(const Utility& f, double gamma,
                                            std::span<const Vec> sample_points);
// Uses a fixed set of probe points spanning [-4, 4]^m.
GammaIndifference check_gamma_indifference(const Utility& f, double gamma, std::size_t m);

struct LipschitzEstimate {
  bool bounded = false;
  double constant = 0.0;
};

// Difference quotients w.r.t. the l1 norm, over random pairs in the box plus
// pairs straddling each kink. Growth under a larger box or a tighter kink
// straddle is reported as unbounded.
LipschitzEstimate estimate_lipschitz(const Utility& f, std::size_t m, double box, std::size_t probes,
                                     std::uint64_t seed = 7);

enum class Verdict { yes, no, no_guarantee };
std::string to_string(Verdict v);

struct CapabilityRecord {
  bool mixture_indifferent = false;
  bool gamma_indifferent = false;
  std::optional<double> gamma_alpha;
  bool lipschitz = false;
  std::optional<double> lipschitz_constant;
  Verdict distributional = Verdict::no;
  Verdict classic = Verdict::no;
  std::string note;
};

// Fills missing metadata by running the checkers for the given discount.
Functional with_metadata(Functional k, double gamma, std::size_t m);

CapabilityRecord classify_dp_capability(const Functional& k, double gamma, const HorizonInfo& horizon,
                                        std::size_t m = 1);

}  // namespace stockdp
