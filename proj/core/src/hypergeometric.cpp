#include "ellint/hypergeometric.hpp"

#include <string>

#include "ellint/errors.hpp"

namespace ellint {

namespace {

void check_degree(unsigned n, const char* who) {
  if (n > kMaxPolyDegree) {
    throw DomainError(std::string(who) + ": degree " + std::to_string(n) +
                      " exceeds supported maximum " +
                      std::to_string(kMaxPolyDegree));
  }
}

}  // namespace

double pochhammer(double a, unsigned n) {
  double r = 1.0;
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

double PochhammerTable::operator()(std::size_t n) {
  while (values_.size() <= n) {
    const auto m = values_.size() - 1;
    values_.push_back(values_.back() * (a_ + static_cast<double>(m)));
  }
  return values_[n];
}

double half_pochhammer_ratio(unsigned n) {
  double r = 1.0;
  for (unsigned i = 0; i < n; ++i) r *= (i + 0.5) / (i + 1.0);
  return r;
}

double hyp2f1_poly(unsigned n, double x) {
  check_degree(n, "hyp2f1_poly");
  if (x >= 0.5 && x <= 1.0) return hyp2f1_poly_reflected(n, 1.0 - x);
  const double dn = n;
  double term = 1.0;
  double sum = 1.0;
  for (unsigned j = 0; j < n; ++j) {
    const double dj = j;
    term *= (dj - dn) * (dj + 0.5) / ((dj + 1.0) * (dj + 1.0)) * x;
    sum += term;
  }
  return sum;
}

double hyp2f1_poly_reflected(unsigned n, double x) {
  check_degree(n, "hyp2f1_poly_reflected");
  const double dn = n;
  double term = 1.0;
  double sum = 1.0;
  for (unsigned j = 0; j < n; ++j) {
    const double dj = j;
    term *= (dj - dn) * (dj + 0.5) / ((dj + 0.5 - dn) * (dj + 1.0)) * x;
    sum += term;
  }
  return half_pochhammer_ratio(n) * sum;
}

double legendre_p(unsigned n, double z) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = z;
  for (unsigned m = 1; m < n; ++m) {
    const double next = ((2.0 * m + 1.0) * z * cur - m * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace ellint
