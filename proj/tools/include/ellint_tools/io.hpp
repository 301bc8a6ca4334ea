#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ellint_tools/table.hpp"

namespace ellint::tools {

inline constexpr const char* kCsvHeader =
    "method,order,lambda,k,reference,approx,abs_error,interval_len";

/// Shortest round-trip scientific form, e.g. "1.3531754269101170e+00".
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<TableRow>& rows);
/// Inverse of write_csv; throws std::invalid_argument on malformed input.
std::vector<TableRow> read_csv(std::istream& is);

void write_json(std::ostream& os, const std::vector<TableRow>& rows);
std::vector<TableRow> read_json(std::istream& is);

}  // namespace ellint::tools
