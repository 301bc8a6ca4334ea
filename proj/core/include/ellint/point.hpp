#pragma once

#include <limits>

namespace ellint {

// A point (lambda, k) of the closed unit square. lambda is the upper limit of
// integration (the sine of the amplitude), k the modulus.
class EvalPoint {
 public:
  // Throws DomainError unless both coordinates lie in [0, 1].
  EvalPoint(double lambda, double k);

  double lambda() const noexcept { return lambda_; }
  double k() const noexcept { return k_; }

  // 1 - lambda^2 and 1 - k^2, formed as (1 - x)(1 + x) so that they keep
  // their relative accuracy as lambda, k -> 1.
  double lambda_comp_sq() const noexcept;
  double k_comp_sq() const noexcept;

  // The logarithmic singularity lambda = k = 1.
  bool singular() const noexcept { return lambda_ == 1.0 && k_ == 1.0; }
  bool interior() const noexcept;

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

 private:
  double lambda_;
  double k_;
};

// Accuracy request for the iterative routines.
struct Quality {
  double abs_tol = 1e-14;
  int max_iter = 64;

  static constexpr double min_tol() noexcept {
    return 4.0 * std::numeric_limits<double>::epsilon();
  }

  // Throws DomainError when abs_tol < 4 eps or max_iter < 1.
  void validate() const;
};

}  // namespace ellint
