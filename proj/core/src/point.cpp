#include "ellint/point.hpp"

#include <cmath>
#include <sstream>

#include "ellint/errors.hpp"

namespace ellint {

namespace {

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

EvalPoint::EvalPoint(double lambda, double k) : lambda_(lambda), k_(k) {
  if (!in_unit_interval(lambda) || !in_unit_interval(k)) {
    std::ostringstream os;
    os << "point (" << lambda << ", " << k << ") is outside the unit square";
    throw DomainError(os.str());
  }
}

double EvalPoint::lambda_comp_sq() const noexcept {
  return (1.0 - lambda_) * (1.0 + lambda_);
}

double EvalPoint::k_comp_sq() const noexcept {
  return (1.0 - k_) * (1.0 + k_);
}

bool EvalPoint::interior() const noexcept {
  return lambda_ > 0.0 && lambda_ < 1.0 && k_ > 0.0 && k_ < 1.0;
}

void Quality::validate() const {
  if (!(abs_tol >= min_tol())) {
    throw DomainError("Quality::abs_tol must be at least 4 machine epsilon");
  }
  if (max_iter < 1) {
    throw DomainError("Quality::max_iter must be positive");
  }
}

}  // namespace ellint
