#pragma once

// Independent reference computations used only by the tests. None of them
// shares code with the library beyond EvalPoint.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ellint::testing {

/// Adaptive 61-point Gauss-Kronrod on [a, b]. The Kronrod estimate is
/// pessimistic for smooth integrands; the returned value is typically
/// accurate far beyond `tol`.
template <typename F>
double integrate(F f, double a, double b, double tol = 1e-13) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, 12, tol, &err);
}

/// F(lambda, k) as int_0^{asin lambda} dtheta / sqrt(1 - k^2 sin^2 theta).
double quadrature_f(double lambda, double k);

/// K(k) as the same integral up to pi/2.
double quadrature_k(double k);

/// R_F(x, y, z) by exp-sinh quadrature of its defining integral.
double quadrature_rf(double x, double y, double z);

/// 3F2(1, N + 3/2, N + 3/2; N + 2, N + 2; -x) for x >= 0, through the
/// tail of 2F1(1/2, 1/2; 1; -x) = 1/AGM(1, sqrt(1 + x)) for x > 1/2 and
/// the plain series below.
double tail_3f2(unsigned n, double x);

/// s_n(x) summed from its defining series in long double with 4000 terms
/// (0 <= x < 1).
long double sn_oracle(unsigned n, double x);

// Seeded generator so that every property test sees the same points.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(engine_);
  }
  unsigned integer(unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

/// Points i * step, i = 1, 2, ... strictly below 1.
std::vector<double> open_grid(double step);

}  // namespace ellint::testing
