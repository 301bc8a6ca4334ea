// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ellint/ellint.hpp"
#include "ellint_tools/io.hpp"
#include "ellint_tools/table.hpp"
#include "oracle.hpp"

using namespace ellint;

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no runtime requirement
  std::function<bool(std::ostream&)> run;
};

bool table_matches(int which, std::ostream& detail) {
  const auto bad = tools::check_table(which);
  for (const auto& m : bad) {
    detail << " (" << m.lambda << "," << m.k << ") " << m.column << " printed "
           << m.printed << " computed " << tools::format_number(m.computed) << ";";
  }
  return bad.empty();
}

template <typename Expansion>
bool grid_sound(Expansion expand, std::ostream& detail) {
  long violations = 0;
  long non_negative = 0;
  long points = 0;
  for (double lambda : testing::open_grid(0.02)) {
    for (double k : testing::open_grid(0.02)) {
      const EvalPoint p(lambda, k);
      const double f = reference_f(p);
      for (unsigned n = 1; n <= 3; ++n) {
        const Enclosure e = expand(p, n);
        const double err = f - e.value;
        ++points;
        if (!(err < 0.0)) ++non_negative;
        if (!e.contains_error(err, 16 * eps * f)) ++violations;
      }
    }
  }
  detail << " " << points << " checks, " << violations << " violations, "
         << non_negative << " non-negative remainders";
  return violations == 0 && non_negative == 0;
}

bool oracle_consistency(std::ostream& detail) {
  testing::Rng rng(20240611);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double lambda = rng.uniform(1e-6, 1.0 - 1e-6);
    const double k = rng.uniform(1e-6, 1.0 - 1e-6);
    worst = std::max(worst, std::abs(reference_f(EvalPoint(lambda, k)) -
                                     testing::quadrature_f(lambda, k)));
  }
  detail << " max difference " << worst;
  return worst <= 1e-11;
}

bool recurrence_vs_series(std::ostream& detail) {
  double worst = 0.0;
  for (double x : {0.1, 0.5, 0.9}) {
    const auto rec = sn_recurrence(x, 10);
    for (unsigned n = 0; n <= 10; ++n) {
      const double ser = sn_series(n, x);
      worst = std::max(worst, std::abs(rec[n] - ser) / std::max(1.0, std::abs(ser)));
    }
  }
  detail << " max relative difference " << worst;
  return worst <= 1e-9;
}

bool representations(std::ostream& detail) {
  double worst = 0.0;
  for (double x : {0.05, 0.3, 0.6, 0.95, 1.0, 2.5, 7.0, 40.0}) {
    for (unsigned n = 0; n <= 8; ++n) {
      const double a = an_integral(n, x);
      worst = std::max(worst, std::abs(a - an_legendre(n, x)));
      if (x < 1.0) worst = std::max(worst, std::abs(a - an_series(n, x)));
    }
  }
  detail << " max difference " << worst;
  return worst <= 1e-10;
}

std::vector<double> linspace(double a, double b, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(a + (b - a) * i / (points - 1));
  return out;
}

double factorial(unsigned n) {
  double r = 1.0;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

bool polynomial_suite(std::ostream& detail) {
  int failures[6] = {};
  for (unsigned n = 0; n <= 12; ++n) {
    const double cv = half_pochhammer_ratio(n);
    double prev = 2.0;
    for (double x : linspace(0.0, 1.0, 100)) {
      const double f = hyp2f1_poly(n, x);
      if (f > prev + 1e-15 || f < cv * (1.0 - 1e-14) || f > 1.0 + 1e-15) ++failures[0];
      prev = f;
    }
    if (n % 2 == 1) {
      prev = cv + 1e-15;
      for (double x : linspace(1.0, 2.0, 100)) {
        const double f = hyp2f1_poly(n, x);
        if (f > prev + 1e-14 || f < -1e-14 || f > cv + 1e-14) ++failures[1];
        prev = f;
      }
    } else {
      const double cap = factorial(n) / (std::pow(2.0, n) * std::pow(factorial(n / 2), 2));
      for (double x : linspace(1.0, 2.0, 100)) {
        const double f = hyp2f1_poly(n, x);
        if (!(f > 0.0) || f > cap + 1e-14) ++failures[2];
      }
    }
    for (double x : linspace(2.0, 4.0, 101)) {
      if (x == 2.0) continue;
      const double f = hyp2f1_poly(n, x);
      const bool sign_ok = n % 2 == 0 ? f > 0.0 : f < 0.0;
      if (!sign_ok || std::abs(f) > std::pow(x - 1.0, n) * (1.0 + 1e-13)) ++failures[3];
    }
    if (n <= 10) {
      for (double x : linspace(0.0, 1.0, 41)) {
        if (std::abs(hyp2f1_poly_reflected(n, x) - hyp2f1_poly(n, 1.0 - x)) > 1e-12) {
          ++failures[4];
        }
      }
    }
    if (n <= 8) {
      for (double x : {0.3, 1.5, 3.0}) {
        const double integral =
            testing::integrate(
                [n, x](double phi) {
                  const double s = std::sin(phi / 2);
                  return std::pow(1.0 - x * s * s, n);
                },
                0.0, std::numbers::pi) /
            std::numbers::pi;
        if (std::abs(hyp2f1_poly(n, x) - integral) > 1e-10) ++failures[5];
      }
    }
  }
  const char* names[] = {"[0,1] bounds", "odd [1,2]", "even [1,2]", "(2,4] sign",
                         "reflection", "integral"};
  bool ok = true;
  for (int i = 0; i < 6; ++i) {
    detail << " " << names[i] << ":" << failures[i];
    ok = ok && failures[i] == 0;
  }
  return ok;
}

bool small_lambda(std::ostream& detail) {
  bool ok = true;
  for (double k : {0.2, 0.7, 1.0}) {
    double ratio[2];
    int i = 0;
    for (double lambda : {1e-2, 1e-3}) {
      const EvalPoint p(lambda, k);
      ratio[i++] = std::abs(reference_f(p) - modulus_low_orders(p).first) /
                   (lambda * lambda * lambda);
    }
    detail << " k=" << k << ": " << ratio[0] << " " << ratio[1] << ";";
    // at k = 1 both differences vanish identically
    ok = ok && std::max(ratio[0], ratio[1]) <= 4.0 * std::min(ratio[0], ratio[1]) + 1e-6;
  }
  return ok;
}

bool sandwich(std::ostream& detail) {
  long violations = 0;
  for (unsigned n = 0; n <= 4; ++n) {
    const double lo_c = std::pow((n + 1.5) / (n + 2.0), 2);
    const double hi_c = std::pow((n + 0.5) / (n + 1.0), 2);
    for (int i = 1; i <= 1000; ++i) {
      const double x = 0.01 * i;
      const double v = testing::tail_3f2(n, x);
      if (v < 1.0 / (1.0 + lo_c * x) - 1e-12 || v > 1.0 / (1.0 + hi_c * x) + 1e-12) {
        ++violations;
      }
    }
  }
  detail << " " << violations << " violations over 5000 points";
  return violations == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table 1 reproduction", 1.0, [](std::ostream& d) { return table_matches(1, d); }},
      {2, "table 2 reproduction", 1.0, [](std::ostream& d) { return table_matches(2, d); }},
      {3, "table 3 reproduction", 1.0, [](std::ostream& d) { return table_matches(3, d); }},
      {4, "modulus expansion enclosures on the 0.02 grid", 60.0,
       [](std::ostream& d) {
         return grid_sound([](const EvalPoint& p, unsigned n) { return modulus_expansion(p, n); }, d);
       }},
      {5, "amplitude expansion enclosures on the 0.02 grid", 0.0,
       [](std::ostream& d) {
         return grid_sound([](const EvalPoint& p, unsigned n) { return amplitude_expansion(p, n); }, d);
       }},
      {6, "R_F and quadrature references agree", 0.0, oracle_consistency},
      {7, "s_n recurrence equals series", 0.0, recurrence_vs_series},
      {8, "A_n representations agree", 0.0, representations},
      {9, "2F1 polynomial bounds and identities", 0.0, polynomial_suite},
      {10, "F - F_1 = O(lambda^3)", 0.0, small_lambda},
      {11, "3F2 tail sandwich", 0.0, sandwich},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream detail;
    detail.precision(4);
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << " exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
      ok = false;
      detail << " over the " << c.budget_seconds << " s budget;";
    }
    if (!ok) ++failed;
    std::printf("%s %2d  %-48s %8.3f s %s\n", ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
