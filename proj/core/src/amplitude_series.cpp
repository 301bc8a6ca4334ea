#include "ellint/amplitude_series.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "ellint/errors.hpp"
#include "ellint/hypergeometric.hpp"
#include "ellint/reference.hpp"

namespace ellint {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void check_x(double x, const char* who) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << who << ": argument " << x << " must be finite and non-negative";
    throw DomainError(os.str());
  }
}

void check_quadrature(double err, double l1, const Quality& q,
                      const char* who) {
  const double allowed = std::max(q.abs_tol, 64.0 * eps * l1);
  if (!(err <= allowed)) {
    std::ostringstream os;
    os << who << ": quadrature error estimate " << err << " exceeds "
       << allowed;
    throw ConvergenceError(os.str());
  }
}

unsigned max_depth(const Quality& q) {
  return static_cast<unsigned>(std::clamp(q.max_iter, 1, 24));
}

}  // namespace

double an_integral(unsigned n, double x, const Quality& q) {
  check_x(x, "an_integral");
  q.validate();
  if (x == 0.0) return 1.0 / (2.0 * n + 1.0);
  auto integrand = [n, x](double u) {
    const double s = 1.0 + x * u * u;
    // 2F1(-n, 1/2; 1; y) at y = x u^2 / s, reflected about 1/2 via 1 - y = 1/s
    return std::pow(u, 2.0 * n) / std::sqrt(s) * hyp2f1_poly_reflected(n, 1.0 / s);
  };
  double err = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          integrand, 0.0, 1.0, max_depth(q), q.abs_tol, &err, &l1);
  check_quadrature(err, l1, q, "an_integral");
  return value;
}

double an_series(unsigned n, double x, unsigned terms) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("an_series: the defining series needs 0 <= x < 1");
  }
  long double c = 1.0L;  // C(n+j, j) (1/2)_j / j! (-x)^j
  long double sum = 0.0L;
  for (unsigned j = 0; j < terms; ++j) {
    sum += c / (2.0L * (n + j) + 1.0L);
    c *= -static_cast<long double>(x) * (n + j + 1.0L) * (j + 0.5L) /
         ((j + 1.0L) * (j + 1.0L));
  }
  return static_cast<double>(sum);
}

double an_series(unsigned n, double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("an_series: the defining series needs 0 <= x < 1");
  }
  constexpr unsigned kMaxTerms = 200000;
  long double c = 1.0L;
  long double sum = 0.0L;
  for (unsigned j = 0; j < kMaxTerms; ++j) {
    const long double term = c / (2.0L * (n + j) + 1.0L);
    sum += term;
    if (j > 0 && std::abs(term) <= 0.125L * eps * std::abs(sum)) break;
    c *= -static_cast<long double>(x) * (n + j + 1.0L) * (j + 0.5L) /
         ((j + 1.0L) * (j + 1.0L));
  }
  return static_cast<double>(sum);
}

double an_legendre(unsigned n, double x, const Quality& q) {
  check_x(x, "an_legendre");
  q.validate();
  if (x == 0.0) return 1.0 / (2.0 * n + 1.0);
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  auto integrand = [n, x](double u) {
    const double t = x * u * u;
    const double s = 1.0 + t;
    return std::pow(u, 2.0 * n) * std::pow(s, -(n + 1.0) / 2.0) *
           legendre_p(n, (2.0 + t) / (2.0 * std::sqrt(s)));
  };
  double err = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double value =
      integrator.integrate(integrand, 0.0, 1.0, q.abs_tol, &err, &l1, &levels);
  check_quadrature(err, l1, q, "an_legendre");
  return value;
}

double a0_closed(double x) {
  if (!(x > 0.0)) throw DomainError("a0_closed: x must be positive");
  const double r = std::sqrt(x);
  return std::asinh(r) / r;
}

double a1_closed(double x) {
  const double a0 = a0_closed(x);
  return (a0 - (1.0 - x) / std::sqrt(1.0 + x)) / (4.0 * x);
}

AnCache::AnCache(double x, Quality q) : x_(x), quality_(q) {
  check_x(x, "AnCache");
  q.validate();
}

double AnCache::operator()(unsigned n) {
  while (values_.size() <= n) {
    values_.push_back(
        an_integral(static_cast<unsigned>(values_.size()), x_, quality_));
  }
  return values_[n];
}

namespace {

void check_amplitude_domain(const EvalPoint& p, unsigned order,
                            const char* who) {
  if (order < 1) {
    throw DomainError(std::string(who) + ": order must be >= 1");
  }
  if (!(p.k() > 0.0 && p.k() < 1.0)) {
    throw DomainError(std::string(who) + ": k must lie in (0, 1)");
  }
}

double argument_of(const EvalPoint& p) {
  return p.lambda_comp_sq() / p.k_comp_sq();
}

}  // namespace

Enclosure amplitude_expansion(const EvalPoint& p, unsigned order,
                              const Quality& q) {
  check_amplitude_domain(p, order, "amplitude_expansion");
  AnCache cache(argument_of(p), q);
  return amplitude_expansion(p, order, cache);
}

Enclosure amplitude_expansion(const EvalPoint& p, unsigned order,
                              AnCache& cache) {
  check_amplitude_domain(p, order, "amplitude_expansion");
  const double x = argument_of(p);
  if (std::abs(cache.x() - x) > 4.0 * eps * std::max(1.0, x)) {
    throw DomainError("amplitude_expansion: cache built for a different point");
  }
  const double lambda = p.lambda();
  const double lc2 = p.lambda_comp_sq();
  const double kc2 = p.k_comp_sq();
  const double kk = complete_k(p.k());

  double sum = 0.0;
  double power = 1.0;
  for (unsigned n = 0; n < order && power != 0.0; ++n) {
    sum += power * cache(n);
    power *= lc2;
  }

  Enclosure out;
  out.order = static_cast<int>(order);
  out.value = kk - std::sqrt(x) * sum;

  const double w = lc2 + kc2;  // 2 - lambda^2 - k^2
  const double upper =
      lambda == 0.0
          ? std::numeric_limits<double>::infinity()
          : std::pow(lc2, order + 0.5) /
                (2.0 * lambda * lambda * order * std::sqrt(w));
  double lower = std::pow(lc2, order - 1.0) * half_pochhammer_ratio(order) /
                 (2.0 * order) *
                 (std::sqrt(lc2 * w) - kc2 * std::asinh(std::sqrt(x)));
  if (lower < 0.0) {
    lower = 0.0;
    out.lower_clamped = true;
  }
  out.err_lo = -upper;
  out.err_hi = -lower;
  return out;
}

LowOrders amplitude_low_orders(const EvalPoint& p, const Quality& q) {
  check_amplitude_domain(p, 1, "amplitude_low_orders");
  const double lc2 = p.lambda_comp_sq();
  const double kc2 = p.k_comp_sq();
  const double ell = std::asinh(std::sqrt(lc2 / kc2));
  LowOrders out;
  out.first = complete_k(p.k(), q) - ell;
  // lambda^2 - k^2 = (1 - k^2) - (1 - lambda^2); sqrt(x) (1 - lambda^2) A_1(x)
  // contributes it with a plus sign
  out.second = out.first - 0.25 * kc2 * ell +
               (kc2 - lc2) / (4.0 * std::sqrt(1.0 + kc2 / lc2));
  return out;
}

double legendre_generating_closed(double k, double t) {
  if (!(k >= 0.0 && k <= 1.0) || !(t >= 0.0)) {
    throw DomainError("legendre_generating_closed: needs 0 <= k <= 1, t >= 0");
  }
  const double k2 = k * k;
  const double kc2 = (1.0 - k) * (1.0 + k);
  const double d = (1.0 + k2 * t) * (1.0 - kc2 * t);
  if (!(d > 0.0)) {
    throw DomainError("legendre_generating_closed: requires (1 - k^2) t < 1");
  }
  return std::sqrt(1.0 + t) / std::sqrt(d);
}

double legendre_generating_sum(double k, double t) {
  if (!(k >= 0.0 && k <= 1.0) || !(t >= 0.0)) {
    throw DomainError("legendre_generating_sum: needs 0 <= k <= 1, t >= 0");
  }
  const double kc2 = (1.0 - k) * (1.0 + k);
  const double rate = kc2 * t;
  if (!(rate < 1.0)) {
    throw DomainError(
        "legendre_generating_sum: series diverges unless (1 - k^2) t < 1");
  }
  const double root = std::sqrt(1.0 + t);
  const double z = kc2 * t / root;
  const double arg = (2.0 + t) / (2.0 * root);
  // q_n = z^n P_n(arg), from the Legendre recurrence scaled by z
  double prev = 1.0;
  double cur = z * arg;
  double sum = rate == 0.0 ? 1.0 : 1.0 + cur;
  if (rate == 0.0) return sum;
  constexpr unsigned kMaxTerms = 1000000;
  for (unsigned n = 1; n < kMaxTerms; ++n) {
    const double next =
        ((2.0 * n + 1.0) * arg * z * cur - n * z * z * prev) / (n + 1.0);
    prev = cur;
    cur = next;
    sum += cur;
    if (std::abs(cur) * rate / (1.0 - rate) <= 0.5 * eps * std::abs(sum)) {
      return sum;
    }
  }
  throw ConvergenceError("legendre_generating_sum: no convergence");
}

}  // namespace ellint
