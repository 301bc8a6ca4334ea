#include "ellint/modulus_series.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "ellint/errors.hpp"
#include "ellint/hypergeometric.hpp"

namespace ellint {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

// ln((1 + sqrt(1 + x))/2) and sqrt(1 + x), accurate for small x.
template <typename Real>
struct SeedTerms {
  Real root;
  Real log_half;
};

template <typename Real>
SeedTerms<Real> seed_terms(const Real& x) {
  using std::log1p;
  using std::sqrt;
  using boost::multiprecision::log1p;
  using boost::multiprecision::sqrt;
  const Real root = sqrt(Real(1) + x);
  const Real log_half = log1p(x / (Real(2) * (root + Real(1))));
  return {root, log_half};
}

template <typename Real>
Real closed_form(unsigned n, const Real& x) {
  const auto [root, ell] = seed_terms(x);
  switch (n) {
    case 0:
      return Real(-2) * ell;
    case 1:
      // -(root - 1)/2 + x/2 with root - 1 = x/(root + 1)
      return (x / 2 - 1) * ell - x / (Real(2) * (root + Real(1))) + x / 2;
    case 2:
      return (Real(-9) / 32 * x * x + x / 4 - Real(3) / 4) * ell +
             (Real(9) / 32 * x - Real(7) / 16) * root + Real(7) / 16 + x / 8 -
             Real(21) / 64 * x * x;
    default:
      throw DomainError("sn_closed: closed forms exist for n = 0, 1, 2 only");
  }
}

template <typename Real>
std::vector<Real> recurrence(const Real& x, unsigned n_max) {
  std::vector<Real> s;
  s.reserve(n_max + 1);
  for (unsigned n = 0; n <= std::min(n_max, 2u); ++n) {
    s.push_back(closed_form<Real>(n, x));
  }
  // h_n carries [(3/2)_n / (n+2)!]^2 (-x)^{n+2}; both factors are updated
  // incrementally to stay clear of large factorials.
  Real ratio_sq = Real(1) / 4;  // n = 0
  Real power = x * x;           // (-x)^{n+2}
  for (unsigned n = 0; n + 3 <= n_max; ++n) {
    const Real dn = n;
    const Real a = 8 * dn * dn + 36 * dn + 42 - x * (2 * dn + 5) * (2 * dn + 5);
    const Real b =
        2 * x * (4 * dn * dn + 14 * dn + 13) - (2 * dn + 3) * (2 * dn + 3);
    const Real c = -4 * x * (dn + 1) * (dn + 1);
    const Real h = (x * (2 * dn + 5) * (2 * dn + 3) * (2 * dn + 3) +
                    (dn + 3) * (8 * dn * dn + 24 * dn + 17)) /
                   (8 * (dn + 3)) * ratio_sq * power;
    const Real lead = 4 * (dn + 3) * (dn + 3);
    s.push_back((a * s[n + 2] + b * s[n + 1] + c * s[n] + h) / lead);

    const Real grow = (Real(3) / 2 + dn) / (dn + 3);
    ratio_sq *= grow * grow;
    power *= -x;
  }
  return s;
}

void check_x(double x, const char* who) {
  if (!(x >= 0.0)) {
    std::ostringstream os;
    os << who << ": argument " << x << " must be non-negative";
    throw DomainError(os.str());
  }
}

void check_series_x(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("sn_series: the defining series needs 0 <= x < 1");
  }
}

// Leading factor 2 [(1/2)_{n+1}/(n+1)!]^2 (-x)^{n+1} and the 4F3 term ratio.
double sn_leading(unsigned n, double x) {
  const double r = half_pochhammer_ratio(n + 1);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;
  return 2.0 * r * r * sign * std::pow(x, n + 1.0);
}

double sn_term_ratio(unsigned n, unsigned m, double x) {
  const double dm = m;
  const double b = n + 1.5 + dm;
  const double c = n + 2.0 + dm;
  return -(1.0 + dm) * b * b / ((1.5 + dm) * c * c) * x;
}

}  // namespace

double sn_closed(unsigned n, double x) {
  check_x(x, "sn_closed");
  return closed_form<double>(n, x);
}

double sn_series(unsigned n, double x, unsigned terms) {
  check_series_x(x);
  double term = 1.0;
  double sum = 0.0;
  for (unsigned m = 0; m < terms; ++m) {
    sum += term;
    term *= sn_term_ratio(n, m, x);
  }
  return sn_leading(n, x) * sum;
}

double sn_series(unsigned n, double x) {
  check_series_x(x);
  if (x == 0.0) return 0.0;
  constexpr unsigned kMaxTerms = 100000;
  const double eps = std::numeric_limits<double>::epsilon();
  double term = 1.0;
  double sum = 0.0;
  for (unsigned m = 0; m < kMaxTerms; ++m) {
    sum += term;
    term *= sn_term_ratio(n, m, x);
    if (std::abs(term) <= 0.25 * eps * std::abs(sum)) break;
  }
  return sn_leading(n, x) * sum;
}

std::vector<double> sn_recurrence(double x, unsigned n_max) {
  check_x(x, "sn_recurrence");
  const auto wide = recurrence<Quad>(Quad(x), n_max);
  std::vector<double> out;
  out.reserve(wide.size());
  for (const auto& v : wide) out.push_back(static_cast<double>(v));
  return out;
}

SnCache::SnCache(double x)
    : x_(x), method_(x < kSeriesCutoff ? Method::series : Method::recurrence) {
  check_x(x, "SnCache");
}

double SnCache::operator()(unsigned n) {
  if (n < values_.size()) return values_[n];
  if (method_ == Method::series) {
    while (values_.size() <= n) {
      values_.push_back(sn_series(static_cast<unsigned>(values_.size()), x_));
    }
  } else {
    const auto want = std::max<unsigned>(n, 2 * values_.size() + 4);
    values_ = sn_recurrence(x_, want);
  }
  return values_[n];
}

double g_function(double alpha, double lambda, double k) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("g_function: lambda must lie in (0, 1)");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("g_function: alpha must lie in (0, 1)");
  }
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("g_function: k outside [0, 1]");
  }
  const double kc2 = (1.0 - k) * (1.0 + k);
  if (kc2 == 0.0) return 0.0;
  const double lc2 = (1.0 - lambda) * (1.0 + lambda);
  const double root =
      std::sqrt(1.0 + lc2 / (alpha * lambda * lambda * kc2));
  // ln((root + 1)/(root - 1)) = 2 atanh(1/root)
  const double first = 2.0 * std::atanh(1.0 / root) / (alpha * lambda * root);
  const double second = kc2 * 2.0 * std::atanh(lambda);
  return (first - second) / (1.0 - alpha * kc2);
}

double bound_function(unsigned order, const EvalPoint& p) {
  const double a = (order + 0.5) / (order + 1.0);
  return g_function(a * a, p.lambda(), p.k());
}

namespace {

double argument_of(const EvalPoint& p) {
  const double lambda = p.lambda();
  return lambda * lambda * p.k_comp_sq() / p.lambda_comp_sq();
}

void check_modulus_domain(const EvalPoint& p, unsigned order) {
  if (order < 1) throw DomainError("modulus_expansion: order must be >= 1");
  if (!(p.lambda() > 0.0 && p.lambda() < 1.0)) {
    throw DomainError("modulus_expansion: lambda must lie in (0, 1)");
  }
}

}  // namespace

Enclosure modulus_expansion(const EvalPoint& p, unsigned order) {
  check_modulus_domain(p, order);
  SnCache cache(argument_of(p));
  return modulus_expansion(p, order, cache);
}

Enclosure modulus_expansion(const EvalPoint& p, unsigned order,
                            SnCache& cache) {
  check_modulus_domain(p, order);
  const double x = argument_of(p);
  if (std::abs(cache.x() - x) > 4.0 * std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, x)) {
    throw DomainError("modulus_expansion: cache built for a different point");
  }

  const double lambda = p.lambda();
  const double kc2 = p.k_comp_sq();
  const double lc2 = p.lambda_comp_sq();

  // atanh(lambda) sum_{j<=N} [(1/2)_j / j!]^2 (1 - k^2)^j
  double log_sum = 0.0;
  double coeff = 1.0;  // [(1/2)_j / j!]^2 (1-k^2)^j
  for (unsigned j = 0; j <= order; ++j) {
    log_sum += coeff;
    const double r = (j + 0.5) / (j + 1.0);
    coeff *= r * r * kc2;
  }

  // 1/(2 lambda) sum_{n<N} (-(1 - lambda^2)/lambda^2)^n s_n(x)
  const double step = -lc2 / (lambda * lambda);
  double power = 1.0;
  double sn_sum = 0.0;
  for (unsigned n = 0; n < order; ++n) {
    sn_sum += power * cache(n);
    power *= step;
  }

  const double value = std::atanh(lambda) * log_sum + sn_sum / (2.0 * lambda);

  const double r = half_pochhammer_ratio(order + 1);
  const double prefactor = 0.5 * r * r * std::pow(kc2, order);
  const double upper = prefactor * bound_function(order, p);
  const double lower = prefactor * bound_function(order + 1, p);
  return Enclosure{value, -upper, -lower, static_cast<int>(order)};
}

double simple_bound(unsigned order, const EvalPoint& p) {
  const double lambda = p.lambda();
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("simple_bound: lambda must lie in (0, 1)");
  }
  const double r = half_pochhammer_ratio(order + 1);
  return r * r * std::pow(p.k_comp_sq(), order + 1.0) *
         (lambda / p.lambda_comp_sq() - std::atanh(lambda));
}

LowOrders modulus_low_orders(const EvalPoint& p) {
  const double lambda = p.lambda();
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("modulus_low_orders: lambda must lie in (0, 1)");
  }
  const double kc2 = p.k_comp_sq();
  const double lc2 = p.lambda_comp_sq();
  const double k = p.k();
  const double w = (1.0 - k * lambda) * (1.0 + k * lambda);  // 1 - k^2 lambda^2
  const double rho = std::sqrt(w / lc2);
  const double x = lambda * lambda * kc2 / lc2;  // rho^2 - 1
  // ln(2/(1 + rho))
  const double ell = -std::log1p(x / (2.0 * (rho + 1.0)));
  const double at = std::atanh(lambda);

  LowOrders out;
  out.first = at + ell / lambda + 0.25 * kc2 * at;
  out.second = out.first +
               (kc2 / (4.0 * lambda) - lc2 / (2.0 * lambda * lambda * lambda)) *
                   ell -
               kc2 * std::sqrt(w) /
                   (4.0 * lambda * std::sqrt(lc2) + 4.0 * lambda * std::sqrt(w)) +
               9.0 / 64.0 * kc2 * kc2 * at;
  return out;
}

}  // namespace ellint
