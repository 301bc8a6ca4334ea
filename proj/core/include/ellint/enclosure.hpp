#pragma once

#include <cmath>

namespace ellint {

// A truncated-series value together with certified bounds on its signed
// truncation error: the exact F lies in [value + err_lo, value + err_hi].
// Bounds cover truncation only; floating-point rounding in `value` is not
// included. err_lo may be -infinity where the bound degenerates.
struct Enclosure {
  double value = 0.0;
  double err_lo = 0.0;
  double err_hi = 0.0;
  int order = 0;
  // The lower bound on |error| came out negative and has been replaced
  // by 0 (err_hi set to 0).
  bool lower_clamped = false;

  double width() const noexcept { return err_hi - err_lo; }
  double lower() const noexcept { return value + err_lo; }
  double upper() const noexcept { return value + err_hi; }
  bool bounded() const noexcept {
    return std::isfinite(err_lo) && std::isfinite(err_hi);
  }
  // Whether a realized error (exact - value) lies in the bounds, widened on
  // both sides by `slack`.
  bool contains_error(double error, double slack = 0.0) const noexcept {
    return error >= err_lo - slack && error <= err_hi + slack;
  }
};

// First- and second-order explicit approximants of one expansion.
struct LowOrders {
  double first = 0.0;
  double second = 0.0;
};

}  // namespace ellint
