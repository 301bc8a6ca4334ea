#include "ellint/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "ellint/errors.hpp"

namespace ellint {

namespace {

// pi / (2 AGM(1, b))
double agm_quarter_period(double b, const Quality& q, const char* who) {
  double a = 1.0;
  for (int i = 0; i < q.max_iter; ++i) {
    if (std::abs(a - b) <= q.abs_tol * a) {
      return std::numbers::pi / (a + b);
    }
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  throw ConvergenceError(std::string(who) + ": AGM did not converge");
}

}  // namespace

double complete_k(double k, const Quality& q) {
  q.validate();
  if (!(k >= 0.0 && k <= 1.0)) {
    std::ostringstream os;
    os << "complete_k: modulus " << k << " outside [0, 1]";
    throw DomainError(os.str());
  }
  if (k == 1.0) throw DomainError("complete_k: K(k) diverges at k = 1");
  return agm_quarter_period(std::sqrt((1.0 - k) * (1.0 + k)), q, "complete_k");
}

double complete_k_comp(double k, const Quality& q) {
  q.validate();
  if (!(k > 0.0 && k <= 1.0)) {
    std::ostringstream os;
    os << "complete_k_comp: modulus " << k << " outside (0, 1]";
    throw DomainError(os.str());
  }
  return agm_quarter_period(k, q, "complete_k_comp");
}

double carlson_rf(double x, double y, double z, const Quality& q) {
  q.validate();
  if (!(x >= 0.0 && y >= 0.0 && z >= 0.0)) {
    throw DomainError("carlson_rf: arguments must be non-negative");
  }
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) >= 2) {
    throw DomainError("carlson_rf: at most one argument may be zero");
  }

  // Carlson's stopping rule: stop when 4^-n Q < |A_n|, Q = (3r)^(-1/6) max|A_0 - x_i|.
  const double x0 = x;
  const double y0 = y;
  const double a0 = (x + y + z) / 3.0;
  const double spread =
      std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  const double limit = std::pow(3.0 * q.abs_tol, -1.0 / 6.0) * spread;

  double a = a0;
  double scale = 1.0;  // 4^-n
  int iter = 0;
  while (limit * scale >= std::abs(a)) {
    if (++iter > q.max_iter) {
      throw ConvergenceError("carlson_rf: duplication did not converge");
    }
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    a = 0.25 * (a + lam);
    scale *= 0.25;
  }

  const double dx = (a0 - x0) * scale / a;
  const double dy = (a0 - y0) * scale / a;
  const double dz = -(dx + dy);
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 -
          3.0 * e2 * e3 / 44.0) /
         std::sqrt(a);
}

double legendre_f_sq(double lambda, double m, const Quality& q) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("legendre_f_sq: lambda outside [0, 1]");
  }
  if (!(m <= 1.0)) throw DomainError("legendre_f_sq: k^2 must not exceed 1");
  if (lambda == 1.0 && m == 1.0) {
    throw DomainError("legendre_f_sq: logarithmic singularity at (1, 1)");
  }
  if (lambda == 0.0) return 0.0;
  if (m == 0.0) return std::asin(lambda);
  if (m == 1.0) return std::atanh(lambda);
  const double y = 1.0 - m * lambda * lambda;
  if (lambda == 1.0) {
    return carlson_rf(0.0, 1.0 - m, 1.0, q);
  }
  return lambda * carlson_rf((1.0 - lambda) * (1.0 + lambda), y, 1.0, q);
}

double reference_f(const EvalPoint& p, const Quality& q) {
  if (p.singular()) {
    throw DomainError("reference_f: logarithmic singularity at lambda = k = 1");
  }
  const double lambda = p.lambda();
  const double k = p.k();
  if (lambda == 0.0) return 0.0;
  if (k == 0.0) return std::asin(lambda);
  if (k == 1.0) return std::atanh(lambda);
  if (lambda == 1.0) return complete_k(k, q);
  return lambda * carlson_rf(p.lambda_comp_sq(),
                             (1.0 - k * lambda) * (1.0 + k * lambda), 1.0, q);
}

}  // namespace ellint
