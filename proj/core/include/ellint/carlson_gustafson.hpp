#pragma once

// Low-order approximations of F(lambda, k) near the corner (1, 1) with the
// error brackets attached to them in the literature. The brackets are only
// asymptotic as both lambda and k tend to 1.

#include <utility>

#include "ellint/point.hpp"

namespace ellint {

struct CGResult {
  enum class Kind { relative, absolute };

  double value = 0.0;
  Kind kind = Kind::relative;
  // relative: theta = (F - value)/F is claimed to lie in [bracket_lo, bracket_hi].
  // absolute: F - value is claimed to lie in [bracket_lo, bracket_hi].
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;

  // theta or F - value for the exact F.
  double realized(double exact) const noexcept {
    return kind == Kind::relative ? (exact - value) / exact : exact - value;
  }
  bool contains(double exact, double slack = 0.0) const noexcept {
    const double r = realized(exact);
    return r >= bracket_lo - slack && r <= bracket_hi + slack;
  }
  // Width of the implied interval for F - value given the exact F.
  double absolute_width(double exact) const noexcept {
    const double w = bracket_hi - bracket_lo;
    return kind == Kind::relative ? w * exact : w;
  }
};

/// lambda ln(4/(sqrt(1-lambda^2) + sqrt(1-k^2 lambda^2))), with
///   (2 - lambda^2(1+k^2)) ln(1-k^2 lambda^2) / (4 ln((1-k^2 lambda^2)/16))
///     < theta < (2 - lambda^2(1+k^2))/4.
/// Requires lambda, k in (0, 1] and k lambda < 1.
CGResult cg1(const EvalPoint& p);

/// The second-order companion of cg1, with
///   9 c^2 ln c / (64 ln(c/16)) < theta < 3 c^2 / 8,  c = 1 - k^2 lambda^2.
CGResult cg2(const EvalPoint& p);

/// The two approximations carrying (2/pi) K(sqrt(1-k^2)):
///   F = v3 - d1,  c/8 < d1 < c ln 4/(k^2 lambda^2),
///   F = v4 + d2,  9 c^2/64 < d2 < 3 c^2 ln 2/(2 k^2 lambda^2).
/// Requires 0 < k < 1 and lambda > 0.
std::pair<CGResult, CGResult> cg3_cg4(const EvalPoint& p, const Quality& q = {});

}  // namespace ellint
