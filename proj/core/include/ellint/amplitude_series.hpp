#pragma once

// Expansion of F(lambda, k) about lambda = 1 through K(k):
//   F = K(k) - sqrt(x) sum_n (1 - lambda^2)^n A_n(x),
//   x = (1 - lambda^2)/(1 - k^2).
// Asymptotic as lambda -> 1 along any curve inside the unit square, the
// corner (1, 1) included. The remainder is negative.

#include <vector>

#include "ellint/enclosure.hpp"
#include "ellint/point.hpp"

namespace ellint {

/// A_n(x) = sum_j C(n+j, j) (-1)^j (1/2)_j x^j / ((2(n+j) + 1) j!), for any
/// x >= 0, from the integral
///   int_0^1 u^{2n} (1 + x u^2)^{-1/2} 2F1(-n, 1/2; 1; x u^2/(1 + x u^2)) du
/// by adaptive Gauss-Kronrod. A_n(0) = 1/(2n+1). Throws DomainError for
/// x < 0 and ConvergenceError when the quadrature misses q.abs_tol.
double an_integral(unsigned n, double x, const Quality& q = {});

/// The defining series with `terms` terms, summed in long double. Requires
/// 0 <= x < 1.
double an_series(unsigned n, double x, unsigned terms);

/// Same, summed to convergence.
double an_series(unsigned n, double x);

/// The Legendre-polynomial form
///   int_0^1 u^{2n} (1 + x u^2)^{-(n+1)/2} P_n((2 + x u^2)/(2 sqrt(1 + x u^2))) du
/// by tanh-sinh quadrature.
double an_legendre(unsigned n, double x, const Quality& q = {});

/// A_0 and A_1 in closed form (x > 0).
double a0_closed(double x);
double a1_closed(double x);

// Memoized A_n(x) for one x >= 0 via an_integral. Same threading contract
// as SnCache.
class AnCache {
 public:
  explicit AnCache(double x, Quality q = {});

  double x() const noexcept { return x_; }
  double operator()(unsigned n);

 private:
  double x_;
  Quality quality_;
  std::vector<double> values_;
};

/// Truncated expansion of order N >= 1 with remainder bounds
///   U = (1-lambda^2)^{N+1/2} / (2 lambda^2 N sqrt(2 - lambda^2 - k^2)),
///   L = (1-lambda^2)^{N-1} (1/2)_N / (2 N N!)
///         (sqrt((1-lambda^2)(2-lambda^2-k^2)) - (1-k^2) asinh(sqrt(x))),
/// error in [-U, -L]. A negative L is replaced by 0 and flagged with
/// lower_clamped. Requires 0 < k < 1; at lambda = 0, U is infinite.
Enclosure amplitude_expansion(const EvalPoint& p, unsigned order,
                              const Quality& q = {});

/// Same, reusing `cache` (its x must match the point).
Enclosure amplitude_expansion(const EvalPoint& p, unsigned order,
                              AnCache& cache);

/// The explicit first- and second-order truncations. Requires 0 < k < 1.
LowOrders amplitude_low_orders(const EvalPoint& p, const Quality& q = {});

/// sum_n (1-k^2)^n t^n (1+t)^{-n/2} P_n((2+t)/(2 sqrt(1+t))), summed until
/// the tail is below rounding. The terms behave like ((1-k^2) t)^n, so the
/// sum needs (1 - k^2) t < 1 (DomainError otherwise).
double legendre_generating_sum(double k, double t);

/// Its closed form sqrt(1+t) / sqrt((1 + k^2 t)(1 - t + k^2 t)).
double legendre_generating_closed(double k, double t);

}  // namespace ellint
