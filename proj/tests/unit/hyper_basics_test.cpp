#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellint/errors.hpp"
#include "ellint/hypergeometric.hpp"
#include "oracle.hpp"

using namespace ellint;

namespace {

double factorial(unsigned n) {
  double r = 1.0;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// f_n(2) for even n: n! / (2^n ((n/2)!)^2)
double even_value_at_two(unsigned n) {
  return factorial(n) / (std::pow(2.0, n) * factorial(n / 2) * factorial(n / 2));
}

std::vector<double> grid(double a, double b, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(a + (b - a) * i / (points - 1));
  return out;
}

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(0.5, 3) == 15.0 / 8.0);
  for (unsigned j = 1; j <= 5; ++j) {
    for (unsigned n = j; n <= 7; ++n) CHECK(pochhammer(1.0 - j, n) == 0.0);
  }
  PochhammerTable table(0.5);
  CHECK(table(6) == doctest::Approx(pochhammer(0.5, 6)).epsilon(1e-15));
  CHECK(table.size() == 7);
}

TEST_CASE("hyp2f1_poly special values") {
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(hyp2f1_poly(n, 0.0) == 1.0);
    CHECK(hyp2f1_poly(n, 1.0) == doctest::Approx(half_pochhammer_ratio(n)).epsilon(1e-13));
  }
  CHECK(std::abs(hyp2f1_poly(5, 2.0)) <= 1e-13);
  CHECK(hyp2f1_poly(4, 2.0) == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(hyp2f1_poly(kMaxPolyDegree + 1, 0.5), DomainError);
}

TEST_CASE("reflected form equals f_n(1 - x)") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (double x : grid(0.0, 1.0, 41)) {
      CHECK(std::abs(hyp2f1_poly_reflected(n, x) - hyp2f1_poly(n, 1.0 - x)) <= 1e-12);
    }
  }
  CHECK(hyp2f1_poly_reflected(0, 0.7) == 1.0);
  CHECK(hyp2f1_poly_reflected(3, 0.25) == doctest::Approx(hyp2f1_poly(3, 0.75)).epsilon(1e-14));
  CHECK(hyp2f1_poly_reflected(6, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("legendre_p") {
  CHECK(legendre_p(0, 0.3) == 1.0);
  CHECK(legendre_p(1, 0.3) == 0.3);
  for (unsigned n = 0; n <= 10; ++n) CHECK(legendre_p(n, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(legendre_p(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  // (1-x)^{n/2} P_n((2-x)/(2 sqrt(1-x))) = f_n(x)
  const double x = 0.3;
  CHECK(std::pow(1.0 - x, 2.0) * legendre_p(4, (2.0 - x) / (2.0 * std::sqrt(1.0 - x))) ==
        doctest::Approx(hyp2f1_poly(4, x)).epsilon(1e-13));
}

TEST_CASE("property: on [0, 1] f_n decreases from 1 to its Chu-Vandermonde value") {
  for (unsigned n = 0; n <= 12; ++n) {
    const double floor = half_pochhammer_ratio(n);
    double prev = 2.0;
    for (double x : grid(0.0, 1.0, 100)) {
      const double f = hyp2f1_poly(n, x);
      CHECK(f <= prev + 1e-15);
      CHECK(f >= floor * (1.0 - 1e-14));
      CHECK(f <= 1.0 + 1e-15);
      prev = f;
    }
  }
}

TEST_CASE("property: on [1, 2] odd f_n decreases between the bounds") {
  for (unsigned n = 1; n <= 11; n += 2) {
    const double cap = half_pochhammer_ratio(n);
    double prev = cap + 1e-15;
    for (double x : grid(1.0, 2.0, 100)) {
      const double f = hyp2f1_poly(n, x);
      CHECK(f <= prev + 1e-14);
      CHECK(f >= -1e-14);
      CHECK(f <= cap + 1e-14);
      prev = f;
    }
  }
}

TEST_CASE("property: on [1, 2] even f_n is positive and capped") {
  for (unsigned n = 0; n <= 12; n += 2) {
    const double cap = even_value_at_two(n);
    for (double x : grid(1.0, 2.0, 100)) {
      const double f = hyp2f1_poly(n, x);
      CHECK(f > 0.0);
      CHECK(f <= cap + 1e-14);
    }
  }
}

TEST_CASE("property: on (2, 4] f_n alternates in sign with |f_n| <= (x - 1)^n") {
  for (unsigned n = 0; n <= 12; ++n) {
    for (double x : grid(2.0, 4.0, 101)) {
      if (x == 2.0) continue;
      const double f = hyp2f1_poly(n, x);
      CHECK((n % 2 == 0 ? f > 0.0 : f < 0.0));
      CHECK(std::abs(f) <= std::pow(x - 1.0, n) * (1.0 + 1e-13));
    }
  }
}

TEST_CASE("f_n matches its Laplace-type integral") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (double x : {0.3, 1.5, 3.0}) {
      const double integral =
          testing::integrate(
              [n, x](double phi) {
                const double s = std::sin(phi / 2);
                return std::pow(1.0 - x * s * s, n);
              },
              0.0, std::numbers::pi) /
          std::numbers::pi;
      CHECK(std::abs(hyp2f1_poly(n, x) - integral) <= 1e-10);
    }
  }
}
