#include "ellint_tools/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include "json.hpp"
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ellint::tools {

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

unsigned parse_unsigned(const std::string& s) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an order: '" + s + "'");
  }
  return v;
}

Approximation parse_method(const std::string& s) {
  const auto m = parse_approximation(s);
  if (!m) throw std::invalid_argument("unknown method '" + s + "'");
  return *m;
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::scientific);
  return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << to_string(r.method) << ',' << r.order << ',' << format_number(r.lambda)
       << ',' << format_number(r.k) << ',' << format_number(r.reference) << ','
       << format_number(r.approx) << ',' << format_number(r.abs_error) << ','
       << format_number(r.interval_len) << '\n';
  }
}

std::vector<TableRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw std::invalid_argument("read_csv: missing or unexpected header");
  }
  std::vector<TableRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 8) {
      throw std::invalid_argument("read_csv: expected 8 fields in '" + line + "'");
    }
    rows.push_back({parse_method(f[0]), parse_unsigned(f[1]), parse_double(f[2]),
                    parse_double(f[3]), parse_double(f[4]), parse_double(f[5]),
                    parse_double(f[6]), parse_double(f[7])});
  }
  return rows;
}

void write_json(std::ostream& os, const std::vector<TableRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"method", std::string(to_string(r.method))},
                   {"order", r.order},
                   {"lambda", r.lambda},
                   {"k", r.k},
                   {"reference", r.reference},
                   {"approx", r.approx},
                   {"abs_error", r.abs_error},
                   {"interval_len", r.interval_len}});
  }
  os << out.dump(2) << '\n';
}

std::vector<TableRow> read_json(std::istream& is) {
  const auto doc = nlohmann::json::parse(is);
  if (!doc.is_array()) throw std::invalid_argument("read_json: expected an array");
  std::vector<TableRow> rows;
  for (const auto& o : doc) {
    rows.push_back({parse_method(o.at("method").get<std::string>()),
                    o.at("order").get<unsigned>(), o.at("lambda").get<double>(),
                    o.at("k").get<double>(), o.at("reference").get<double>(),
                    o.at("approx").get<double>(), o.at("abs_error").get<double>(),
                    o.at("interval_len").get<double>()});
  }
  return rows;
}

}  // namespace ellint::tools
