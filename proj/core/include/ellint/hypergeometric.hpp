#pragma once

#include <cstddef>
#include <vector>

namespace ellint {

/// Rising factorial (a)_n = a (a + 1) ... (a + n - 1), (a)_0 = 1. Overflow
/// surfaces as infinity.
double pochhammer(double a, unsigned n);

// Memoized (a)_0, (a)_1, ... for one base a, grown on demand.
class PochhammerTable {
 public:
  explicit PochhammerTable(double a) : a_(a), values_{1.0} {}

  double a() const noexcept { return a_; }
  double operator()(std::size_t n);
  std::size_t size() const noexcept { return values_.size(); }

 private:
  double a_;
  std::vector<double> values_;
};

// Largest n accepted by the terminating 2F1 routines. The alternating sums
// lose digits roughly like 2^n for |x| >= 1; nothing in the library needs
// more than a few dozen terms.
inline constexpr unsigned kMaxPolyDegree = 64;

/// The degree-n polynomial 2F1(-n, 1/2; 1; x), summed term by term:
///   sum_{j=0}^{n} (-n)_j (1/2)_j / (j!)^2 x^j.
/// On [1/2, 1] the reflected sum is used instead (1 - x is exact there).
/// Any real x. Throws DomainError for n > kMaxPolyDegree.
double hyp2f1_poly(unsigned n, double x);

/// (1/2)_n / n! * 2F1(-n, 1/2; 1/2 - n; x), which equals
/// hyp2f1_poly(n, 1 - x). For 0 <= x every term is non-negative, so this is
/// the cancellation-free way to evaluate hyp2f1_poly on [0, 1].
double hyp2f1_poly_reflected(unsigned n, double x);

/// Legendre polynomial P_n(z) by (n + 1) P_{n+1} = (2n + 1) z P_n - n P_{n-1}.
double legendre_p(unsigned n, double z);

/// (1/2)_n / n!, the value of hyp2f1_poly(n, 1) (Chu-Vandermonde).
double half_pochhammer_ratio(unsigned n);

}  // namespace ellint
