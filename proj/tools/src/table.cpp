#include "ellint_tools/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "ellint/amplitude_series.hpp"
#include "ellint/carlson_gustafson.hpp"
#include "ellint/modulus_series.hpp"
#include "ellint/reference.hpp"

namespace ellint::tools {

namespace {

const std::vector<PrintedRow> kTable1 = {
    {0.8, 0.8, {"1.0178", "1.0334", "-.01554", ".742e-3", "1.0216", "-.00378", ".926e-4"}},
    {0.9, 0.9, {"1.3532", "1.3652", "-.01198", ".657e-3", "1.3547", "-.00153", ".427e-4"}},
    {0.95, 0.95, {"1.6861", "1.6936", "-.00750", ".430e-3", "1.6866", "-.4914e-3", ".143e-4"}},
    {0.99, 0.99, {"2.4708", "2.4726", "-.00185", ".107e-3", "2.4708", "-.2468e-4", ".721e-6"}},
    {0.95, 0.99, {"1.7951", "1.7955", "-.405e-3", ".639e-5", "1.7951", "-.554e-5", ".463e-7"}},
    {0.99, 0.999, {"2.6240", "2.6240", "-.253e-4", ".213e-6", "2.6240", "-.350e-7", ".157e-9"}},
};

const std::vector<PrintedRow> kTable2 = {
    {0.8, 0.8, {"1.0178", "1.1139", "-.09611", ".1509", "1.0346", "-.01679", ".02932"}},
    {0.9, 0.9, {"1.3532", "1.3992", "-.04600", ".0576", "1.3573", "-.00414", ".006075"}},
    {0.95, 0.95, {"1.6861", "1.7086", "-.02251", ".0252", "1.6872", "-.00103", ".001387"}},
    {0.99, 0.99, {"2.4708", "2.4752", "-.00443", ".0045", "2.4708", "-.408e-4", ".5164e-4"}},
    {0.99, 0.95, {"2.1496", "2.1523", "-.00271", ".0028", "2.1497", "-.299e-4", ".3102e-4"}},
    {0.999, 0.99, {"3.0445", "3.0447", "-.200e-3", ".200e-3", "3.0445", "-.229e-6", ".226e-6"}},
};

const std::vector<PrintedRow> kTable3 = {
    {0.8, 0.8, {"1.0178", ".85814", ".15968", ".2032", ".96415", ".05366", ".12508"}},
    {0.9, 0.9, {"1.3532", "1.2278", ".12538", ".1304", "1.3291", ".02411", ".05376"}},
    {0.95, 0.95, {"1.6861", "1.5993", ".08687", ".0742", "1.6771", ".00900", ".01867"}},
    {0.99, 0.99, {"2.4708", "2.4417", ".02910", ".0169", "2.4702", ".647e-3", ".00115"}},
    {0.99, 0.95, {"2.1496", "2.0973", ".05234", ".0409", "2.1466", ".00301", ".00898"}},
    {0.999, 0.99, {"3.0445", "3.0306", ".01392", ".0076", "3.0444", ".156e-3", ".427e-3"}},
    {0.95, 0.99, {"1.7951", "1.7232", ".07182", ".0537", "1.7896", ".00545", ".00750"}},
    {0.99, 0.999, {"2.6240", "2.6016", ".02232", ".0115", "2.6236", ".337e-3", ".368e-3"}},
};

TableRow make_row(Approximation m, unsigned order, const EvalPoint& p,
                  double reference, double approx, double len) {
  return {m, order, p.lambda(), p.k(), reference, approx, reference - approx, len};
}

}  // namespace

const std::vector<PrintedRow>& printed_table(int which) {
  switch (which) {
    case 1:
      return kTable1;
    case 2:
      return kTable2;
    case 3:
      return kTable3;
    default:
      throw std::out_of_range("printed_table: tables are numbered 1 to 3");
  }
}

std::vector<TableRow> compute_table(int which) {
  std::vector<TableRow> rows;
  for (const auto& printed : printed_table(which)) {
    const EvalPoint p(printed.lambda, printed.k);
    const double f = reference_f(p);
    switch (which) {
      case 1: {
        const auto low = modulus_low_orders(p);
        rows.push_back(make_row(Approximation::series_one, 1, p, f, low.first,
                                modulus_expansion(p, 1).width()));
        rows.push_back(make_row(Approximation::series_one, 2, p, f, low.second,
                                modulus_expansion(p, 2).width()));
        break;
      }
      case 2: {
        const auto low = amplitude_low_orders(p);
        rows.push_back(make_row(Approximation::series_two, 1, p, f, low.first,
                                amplitude_expansion(p, 1).width()));
        rows.push_back(make_row(Approximation::series_two, 2, p, f, low.second,
                                amplitude_expansion(p, 2).width()));
        break;
      }
      default: {
        const auto one = cg1(p);
        const auto two = cg2(p);
        rows.push_back(make_row(Approximation::cg1, 1, p, f, one.value,
                                one.absolute_width(f)));
        rows.push_back(make_row(Approximation::cg2, 2, p, f, two.value,
                                two.absolute_width(f)));
        break;
      }
    }
  }
  return rows;
}

double parse_printed(std::string_view printed) {
  std::string text(printed);
  // from_chars rejects a leading '+' only; ".5" and "-.5" are accepted
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("parse_printed: not a number: " + text);
  }
  return value;
}

double half_unit(std::string_view printed) {
  const auto e = printed.find_first_of("eE");
  const auto mantissa = printed.substr(0, e);
  const int exponent =
      e == std::string_view::npos
          ? 0
          : static_cast<int>(parse_printed(printed.substr(e + 1)));
  const auto dot = mantissa.find('.');
  const int decimals =
      dot == std::string_view::npos
          ? 0
          : static_cast<int>(mantissa.size() - dot - 1);
  return 0.5 * std::pow(10.0, exponent - decimals);
}

std::vector<Mismatch> check_table(int which) {
  const auto& printed = printed_table(which);
  const auto rows = compute_table(which);
  std::vector<Mismatch> out;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto& first = rows[2 * i];
    const auto& second = rows[2 * i + 1];
    const double computed[] = {first.reference,    first.approx,
                               first.abs_error,    first.interval_len,
                               second.approx,      second.abs_error,
                               second.interval_len};
    for (std::size_t c = 0; c < printed[i].cells.size(); ++c) {
      const auto& text = printed[i].cells[c];
      if (std::abs(computed[c] - parse_printed(text)) > half_unit(text)) {
        out.push_back({printed[i].lambda, printed[i].k,
                       std::string(kColumns[c]), text, computed[c]});
      }
    }
  }
  return out;
}

}  // namespace ellint::tools
