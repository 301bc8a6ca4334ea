#include "ellint/auxiliary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellint/errors.hpp"
#include "ellint/hypergeometric.hpp"
#include "ellint/reference.hpp"

namespace ellint {

double power_ratio_integral(unsigned j, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("power_ratio_integral: lambda must lie in (0, 1)");
  }
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  // ln((1 + lambda)/(1 - lambda)) = 2 atanh(lambda)
  double result = sign * half_pochhammer_ratio(j) * std::atanh(lambda);
  if (j == 0) return result;

  const double lambda_comp = (1.0 - lambda) * (1.0 + lambda);
  const double r = lambda * lambda / lambda_comp;
  const double dj = j;
  // n-th term: (-1)^n (1/2 - j)_n / (1 - j)_n r^{j-n}
  double term = std::pow(r, dj);
  double sum = term;
  for (unsigned n = 0; n + 1 < j; ++n) {
    const double dn = n;
    term *= -(0.5 - dj + dn) / (1.0 - dj + dn) / r;
    sum += term;
  }
  result += sum / (2.0 * dj * lambda);
  return result;
}

Enclosure radon_expansion(const EvalPoint& p, unsigned order) {
  const double lambda = p.lambda();
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("radon_expansion: lambda must lie in (0, 1)");
  }
  const double kc2 = p.k_comp_sq();
  const double lc2 = p.lambda_comp_sq();
  if (!(kc2 * lambda * lambda < lc2)) {
    throw RegionError("radon_expansion: point outside convergence region",
                      "1 - k^2 < (1 - lambda^2)/lambda^2");
  }

  // F ~ sum_j (-1)^j (1/2)_j / j! (1 - k^2)^j int_0^lambda t^2j/(1-t^2)^(j+1)
  double value = 0.0;
  double coeff = 1.0;  // (-1)^j (1/2)_j / j! (1 - k^2)^j
  for (unsigned j = 0; j <= order; ++j) {
    value += coeff * power_ratio_integral(j, lambda);
    coeff *= -(j + 0.5) / (j + 1.0) * kc2;
  }

  const double n1 = order + 1.0;
  const double ratio = lambda * lambda * kc2 / lc2;
  const double bound = lambda * half_pochhammer_ratio(order + 1) /
                       (2.0 * n1) * std::pow(ratio, n1);
  return Enclosure{value, -bound, bound, static_cast<int>(order)};
}

Reflection reflect(const EvalPoint& p, const Quality& q) {
  if (!p.interior()) {
    throw DomainError("reflect: lambda and k must lie strictly inside (0, 1)");
  }
  const double kc2 = p.k_comp_sq();
  Reflection r;
  r.lambda_sq = p.lambda_comp_sq();
  r.k_sq = -(p.k() * p.k()) / kc2;
  r.scale = 1.0 / std::sqrt(kc2);
  r.complete = complete_k(p.k(), q);
  return r;
}

Enclosure kelisky_expansion(const EvalPoint& p, unsigned order,
                            const Quality& q) {
  if (order < 1) throw DomainError("kelisky_expansion: order must be >= 1");
  const double k = p.k();
  if (!(k > 0.0 && k < 1.0)) {
    throw DomainError("kelisky_expansion: k must lie in (0, 1)");
  }
  const double lambda = p.lambda();
  const double k2 = k * k;
  const double kc2 = p.k_comp_sq();
  const double lc2 = p.lambda_comp_sq();
  if (!(kc2 > lc2 * k2)) {
    throw RegionError("kelisky_expansion: point outside convergence region",
                      "(1 - k^2)/k^2 > 1 - lambda^2");
  }

  const double complete = complete_k(k, q);
  if (lc2 == 0.0) return Enclosure{complete, 0.0, 0.0, static_cast<int>(order)};

  const double arg = 1.0 / kc2;
  double sum = 0.0;
  double power = 1.0;  // (1 - lambda^2)^m
  for (unsigned m = 0; m < order; ++m) {
    sum += power / (2.0 * m + 1.0) * hyp2f1_poly(m, arg);
    power *= lc2;
  }
  const double value = complete - std::sqrt(lc2 / kc2) * sum;

  const double n = order;
  const double inf = std::numeric_limits<double>::infinity();
  // k^2 >= 1/2: geometric tail in x = (1 - lambda^2) k^2/(1 - k^2) < 1.
  double bound_large = inf;
  if (k2 >= 0.5) {
    const double x = lc2 * k2 / kc2;
    bound_large = std::pow(x, n) / (2.0 * n + 1.0) * std::sqrt(lc2 * kc2) /
                  (1.0 + k2 * lambda * lambda - 2.0 * k2);
  }
  // k^2 <= 1/2: geometric tail in 1 - lambda^2.
  double bound_small = inf;
  if (k2 <= 0.5) {
    bound_small = lambda > 0.0
                      ? std::pow(lc2, n) / ((2.0 * n + 1.0) * lambda * lambda) *
                            std::sqrt(lc2 / kc2)
                      : inf;
  }
  const double bound = std::min(bound_large, bound_small);
  return Enclosure{value, -bound, bound, static_cast<int>(order)};
}

double gauss_series(double lambda, double k_sq, unsigned terms) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError("gauss_series: lambda must lie in [0, 1)");
  }
  const double l2 = lambda * lambda;
  // |2F1(-m, 1/2; 1; 1 - k^2)| <= max(1, |k^2|)^m on every branch used here.
  const double growth = l2 * std::max(1.0, std::abs(k_sq));
  if (!(growth < 1.0)) {
    throw DomainError("gauss_series: requires lambda^2 |k^2| < 1");
  }
  double sum = 0.0;
  double power = lambda;     // lambda^{2m+1}
  double envelope = lambda;  // lambda^{2m+1} max(1, |k^2|)^m
  for (unsigned m = 0; m < terms; ++m) {
    if (m > 0 && envelope / (1.0 - growth) <=
                     0.125 * std::numeric_limits<double>::epsilon() *
                         std::abs(sum)) {
      break;
    }
    // For k^2 >= 0 the argument 1 - k^2 lies in (-inf, 1]; the reflected sum
    // has no cancellation there.
    const double f = k_sq >= 0.0 ? hyp2f1_poly_reflected(m, k_sq)
                                 : hyp2f1_poly(m, 1.0 - k_sq);
    sum += power / (2.0 * m + 1.0) * f;
    power *= l2;
    envelope *= growth;
  }
  return sum;
}

}  // namespace ellint
