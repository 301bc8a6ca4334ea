#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ellint_tools/approximation.hpp"

namespace ellint::tools {

struct TableRow {
  Approximation method = Approximation::series_one;
  unsigned order = 1;
  double lambda = 0.0;
  double k = 0.0;
  double reference = 0.0;
  double approx = 0.0;
  double abs_error = 0.0;     // reference - approx
  double interval_len = 0.0;  // width of the claimed interval for the error

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Column names of the printed tables, in order.
inline constexpr std::string_view kColumns[] = {
    "F", "approx1", "error1", "length1", "approx2", "error2", "length2"};

struct PrintedRow {
  double lambda;
  double k;
  std::vector<std::string> cells;  // one per kColumns entry
};

inline constexpr int kTableCount = 3;

/// The reference rows of table 1, 2 or 3 (std::out_of_range otherwise).
const std::vector<PrintedRow>& printed_table(int which);

/// Recomputes the table: two TableRows (first and second order) per printed
/// row.
std::vector<TableRow> compute_table(int which);

/// Half a unit in the last place shown by a printed number such as
/// "-.4914e-3" or "1.0334".
double half_unit(std::string_view printed);

/// Parses a printed number ("-.405e-3" style).
double parse_printed(std::string_view printed);

struct Mismatch {
  double lambda;
  double k;
  std::string column;
  std::string printed;
  double computed;
};

/// Every cell whose recomputed value differs from the printed one by more
/// than half a unit in its last shown place.
std::vector<Mismatch> check_table(int which);

}  // namespace ellint::tools
