#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stockdp/dp.hpp"
#include "stockdp/envs.hpp"
#include "stockdp/functionals.hpp"
#include "stockdp/io.hpp"

namespace stockdp {

struct SuiteCheck {
  std::string name;
  std::string measured;
  std::string target;
  bool pass = false;
};

struct SuiteReport {
  std::string name;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<SuiteCheck> checks;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const;
  std::string markdown() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

std::vector<std::string> suite_names();
// Throws Error for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

SuiteReport suite_table2(const SuiteOptions& opts = {});
SuiteReport suite_table3(const SuiteOptions& opts = {});
SuiteReport suite_riskaverse(const SuiteOptions& opts = {});
SuiteReport suite_riskseeking(const SuiteOptions& opts = {});
SuiteReport suite_table5(const SuiteOptions& opts = {});
SuiteReport suite_counterexamples(const SuiteOptions& opts = {});
SuiteReport suite_capability_matrix(const SuiteOptions& opts = {});
SuiteReport suite_agent(const SuiteOptions& opts = {});

// Monte-Carlo summary of returns from one initial stock (scalar rewards).
struct ReturnSummary {
  double c0 = 0.0;
  double mean_return = 0.0;
  double return_ci = 0.0;  // 95% normal half-width
  double mean_error = 0.0;  // E|c0 + G|
  double error_ci = 0.0;
  std::vector<double> returns;
};

ReturnSummary summarize_returns(const TabularMdp& mdp, const StockGrid& grid, const Policy& pi, double c0,
                                std::size_t episodes, std::uint64_t seed, std::size_t threads = 1,
                                std::size_t max_steps = 1000);

// Largest return any policy can realise with positive probability; needs a
// finite horizon.
double best_case_return(const TabularMdp& mdp);

struct CatalogEntry {
  std::string label;
  Functional functional;
  std::size_t dims = 1;
};

// The utility catalog used by the capability matrix.
std::vector<CatalogEntry> capability_catalog();
// Markdown table: one row per catalog entry and setting.
std::string capability_matrix_markdown(double discounted_gamma = 0.9);

}  // namespace stockdp
