#pragma once

#include "ellint/enclosure.hpp"
#include "ellint/point.hpp"

namespace ellint {

/// int_0^lambda t^{2j} (1 - t^2)^{-(j+1)} dt in closed form: a logarithmic
/// part (-1)^j (1/2)_j / (2 j!) ln((1 + lambda)/(1 - lambda)) plus a finite
/// sum in powers of lambda^2 / (1 - lambda^2). Requires 0 < lambda < 1.
///
/// The two parts cancel heavily for small lambda and large j; absolute
/// accuracy is about eps times the size of the individual terms.
double power_ratio_integral(unsigned j, double lambda);

/// Expansion in powers of 1 - k^2 obtained by integrating the binomial series
/// of the integrand term by term, truncated after j = order. Convergent and
/// certified where (1 - k^2) lambda^2 < 1 - lambda^2; outside that region
/// throws RegionError. The remainder obeys
///   |R| <= lambda (1/2)_{N+1} / (2 (N+1) (N+1)!) [lambda^2 (1-k^2)/(1-lambda^2)]^{N+1}
/// and the enclosure is the symmetric interval [-B, B].
Enclosure radon_expansion(const EvalPoint& p, unsigned order);

// Data of the reflection relation
//   F(lambda, k) = K(k) - scale * F(sqrt(lambda_sq), sqrt(k_sq))
// with lambda_sq = 1 - lambda^2, k_sq = -k^2 / (1 - k^2) < 0 and
// scale = (1 - k^2)^{-1/2}. F only depends on k_sq, so no imaginary square
// root is ever taken.
struct Reflection {
  double lambda_sq = 0.0;
  double k_sq = 0.0;
  double scale = 1.0;
  double complete = 0.0;  // K(k)
};

/// Requires 0 < lambda < 1 and 0 < k < 1; boundary values throw DomainError.
Reflection reflect(const EvalPoint& p, const Quality& q = {});

/// Expansion about lambda = 1 built on K(k):
///   F = K(k) - sqrt((1-lambda^2)/(1-k^2))
///            * sum_{m<N} (1-lambda^2)^m / (2m+1) 2F1(-m, 1/2; 1; 1/(1-k^2)).
/// Certified where (1 - k^2)/k^2 > 1 - lambda^2 (RegionError otherwise).
/// For k^2 >= 1/2 and k^2 <= 1/2 two different bounds apply; at k^2 = 1/2
/// the smaller is used. Requires order >= 1 and 0 < k < 1.
Enclosure kelisky_expansion(const EvalPoint& p, unsigned order,
                            const Quality& q = {});

/// Partial sum m < terms of the power series about lambda = k = 0,
///   sum lambda^{2m+1}/(2m+1) 2F1(-m, 1/2; 1; 1 - k^2),
/// in terms of the squared modulus so it also covers k^2 < 0. Converges for
/// lambda^2 |k^2| < 1 and lambda < 1.
double gauss_series(double lambda, double k_sq, unsigned terms);

}  // namespace ellint
