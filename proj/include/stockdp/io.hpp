#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "stockdp/agent.hpp"
#include "stockdp/dist.hpp"
#include "stockdp/dp.hpp"
#include "stockdp/envs.hpp"

namespace stockdp {

// Six significant digits, negative zero printed as 0.
std::string fmt6(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws Error when the column is absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, std::size_t col) const;
  std::size_t index(std::size_t row, std::size_t col) const;
  bool operator==(const CsvTable&) const = default;
};

// Plain comma-separated values; fields may not contain commas, quotes or
// newlines, which holds for everything emitted here.
void write_csv(std::ostream& os, const CsvTable& t);
std::string to_csv_string(const CsvTable& t);
CsvTable read_csv(std::istream& is);
CsvTable parse_csv(const std::string& text);
void write_csv_file(const std::filesystem::path& p, const CsvTable& t);
CsvTable read_csv_file(const std::filesystem::path& p);

// state, stock_cell, actions (tie-set joined by ';')
CsvTable policy_csv(const Policy& pi);
Policy policy_from_csv(const CsvTable& t, std::size_t num_states, std::size_t num_cells, std::size_t num_actions);

// iteration, residual, objective_change
CsvTable residuals_csv(const SolveReport& r);

// state, stock_cell, stock_<d>..., objective
CsvTable objective_csv(const std::vector<double>& objective, std::size_t num_states, const StockGrid& grid);

// state, stock_cell, coordinate, atom, weight
CsvTable distribution_csv(const ReturnFunction& eta);
ReturnFunction distribution_from_csv(const CsvTable& t, std::size_t num_states, const StockGrid& grid);

// state, stock_cell, action, coordinate, quantile_index, value
CsvTable checkpoint_csv(const QuantileTable& table);
// Shape is inferred from the largest indices; every entry must be present.
QuantileTable checkpoint_from_csv(const CsvTable& t);

// steps, objective_<i>...
CsvTable curve_csv(const std::vector<CurvePoint>& curve);
std::vector<CurvePoint> curve_from_csv(const CsvTable& t);

// bin_low, bin_high, frequency
CsvTable histogram_csv(const std::vector<HistogramBin>& bins);
std::vector<HistogramBin> histogram_from_csv(const CsvTable& t);

}  // namespace stockdp
