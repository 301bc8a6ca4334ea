#pragma once

// Convergent expansion of F(lambda, k) in powers of 1 - k^2 whose
// coefficients are the elementary functions s_n of
//   x = lambda^2 (1 - k^2) / (1 - lambda^2).
// It is valid on the whole open unit square and asymptotic as k -> 1,
// including approaches to the corner (1, 1) along which (1-k)/(1-lambda)
// stays bounded. The truncation error is always negative and is enclosed
// from both sides.

#include <vector>

#include "ellint/enclosure.hpp"
#include "ellint/point.hpp"

namespace ellint {

/// Closed forms of s_0, s_1, s_2 (n must be 0, 1 or 2; x >= 0).
///   s_n(x) = sum_{j>n} (1/2)_j (1/2 - j)_n / (j! j (1 - j)_n) (-x)^j
double sn_closed(unsigned n, double x);

/// s_n(x) by summing the defining series in its 4F3 form,
///   2 [(1/2)_{n+1}/(n+1)!]^2 (-x)^{n+1} 4F3(1,1,n+3/2,n+3/2; 3/2,n+2,n+2; -x),
/// keeping exactly `terms` terms. Requires 0 <= x < 1 (DomainError
/// otherwise).
double sn_series(unsigned n, double x, unsigned terms);

/// As above but summed until the terms stop contributing.
double sn_series(unsigned n, double x);

/// s_0 ... s_{n_max} from the closed-form seeds and the four-term recurrence
///   4(n+3)^2 s_{n+3} = a_n s_{n+2} + b_n s_{n+1} + c_n s_n + h_n,
/// run in 113-bit floating point. The recurrence is unstable in the forward
/// direction for x < 1 (the wanted solution decays like x^n against
/// homogeneous solutions of size 1), and the extra precision buys back about
/// 17 digits of that loss.
std::vector<double> sn_recurrence(double x, unsigned n_max);

// Memoized s_n(x) for a single x >= 0. Below kSeriesCutoff the values come
// from the direct series; from the cutoff on, from sn_recurrence. Growing the
// cache mutates it: share one across threads only under external locking.
class SnCache {
 public:
  enum class Method { series, recurrence };

  static constexpr double kSeriesCutoff = 0.5;

  explicit SnCache(double x);

  double x() const noexcept { return x_; }
  Method method() const noexcept { return method_; }
  double operator()(unsigned n);

 private:
  double x_;
  Method method_;
  std::vector<double> values_;
};

/// g(alpha, lambda, k): the closed form of
///   (1-k^2)/lambda int_0^{lambda^2/(1-lambda^2)}
///       u du / ([1 + alpha (1-k^2) u] (1 + u) sqrt(1 - u (1-lambda^2)/lambda^2)).
/// Requires 0 < lambda < 1, 0 < alpha < 1; returns 0 at k = 1.
double g_function(double alpha, double lambda, double k);

/// f_N(lambda, k) = g(((N + 1/2)/(N + 1))^2, lambda, k), positive and
/// decreasing in N.
double bound_function(unsigned order, const EvalPoint& p);

/// The truncated expansion with bounds
///   P f_{N+1} <= -R_N <= P f_N,  P = [(1/2)_{N+1}/(N+1)!]^2 (1-k^2)^N / 2.
/// Requires order >= 1 and 0 < lambda < 1 (DomainError otherwise); k = 1 is
/// allowed and gives the exact atanh(lambda) with zero-width bounds.
Enclosure modulus_expansion(const EvalPoint& p, unsigned order);

/// Same, reusing `cache`, whose x must equal lambda^2 (1-k^2)/(1-lambda^2)
/// for p (checked).
Enclosure modulus_expansion(const EvalPoint& p, unsigned order,
                            SnCache& cache);

/// Looser, simpler bound on -R_N obtained by replacing the 3F2 factor with 1:
///   [(1/2)_{N+1}/(N+1)!]^2 (1-k^2)^{N+1}
///       (lambda/(1-lambda^2) - 1/2 ln((1+lambda)/(1-lambda))).
double simple_bound(unsigned order, const EvalPoint& p);

/// Explicit first- and second-order truncations in elementary functions.
/// Requires 0 < lambda < 1.
LowOrders modulus_low_orders(const EvalPoint& p);

}  // namespace ellint
