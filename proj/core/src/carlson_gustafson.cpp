#include "ellint/carlson_gustafson.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ellint/errors.hpp"
#include "ellint/reference.hpp"

namespace ellint {

namespace {

struct Common {
  double lambda;
  double lc2;  // 1 - lambda^2
  double c;    // 1 - k^2 lambda^2
  double s;    // lambda^2 (1 + k^2)
  double ell;  // ln(4/(sqrt(1-lambda^2) + sqrt(1-k^2 lambda^2)))
};

Common common(const EvalPoint& p, const char* who) {
  const double lambda = p.lambda();
  const double k = p.k();
  if (!(lambda > 0.0 && k > 0.0)) {
    throw DomainError(std::string(who) + ": lambda and k must be positive");
  }
  if (k * lambda >= 1.0) {
    throw DomainError(std::string(who) + ": requires k lambda < 1");
  }
  const double lc2 = p.lambda_comp_sq();
  const double c = (1.0 - k * lambda) * (1.0 + k * lambda);
  return {lambda, lc2, c, lambda * lambda * (1.0 + k * k),
          std::log(4.0 / (std::sqrt(lc2) + std::sqrt(c)))};
}

}  // namespace

CGResult cg1(const EvalPoint& p) {
  const Common m = common(p, "cg1");
  const double a = 2.0 - m.s;
  CGResult out;
  out.value = m.lambda * m.ell;
  out.kind = CGResult::Kind::relative;
  out.bracket_lo = a * std::log(m.c) / (4.0 * std::log(m.c / 16.0));
  out.bracket_hi = a / 4.0;
  return out;
}

CGResult cg2(const EvalPoint& p) {
  const Common m = common(p, "cg2");
  CGResult out;
  out.value = m.lambda / 4.0 *
              ((6.0 - m.s) * m.ell - 2.0 + m.s + std::sqrt(m.lc2 * m.c));
  out.kind = CGResult::Kind::relative;
  const double c2 = m.c * m.c;
  out.bracket_lo = 9.0 * c2 * std::log(m.c) / (64.0 * std::log(m.c / 16.0));
  out.bracket_hi = 3.0 * c2 / 8.0;
  return out;
}

std::pair<CGResult, CGResult> cg3_cg4(const EvalPoint& p, const Quality& q) {
  const double k = p.k();
  if (!(k > 0.0 && k < 1.0)) throw DomainError("cg3_cg4: k must lie in (0, 1)");
  const Common m = common(p, "cg3_cg4");
  const double kl2 = k * k * m.lambda * m.lambda;
  const double lead = 2.0 / std::numbers::pi * complete_k_comp(k, q) * m.ell;

  CGResult third;
  third.value = lead;
  third.kind = CGResult::Kind::absolute;
  // F - v3 = -d1
  third.bracket_lo = -m.c * std::log(4.0) / kl2;
  third.bracket_hi = -m.c / 8.0;

  CGResult fourth;
  fourth.value =
      lead - 0.25 * (2.0 - m.s - std::sqrt(m.lc2 * p.k_comp_sq()));
  fourth.kind = CGResult::Kind::absolute;
  fourth.bracket_lo = 9.0 * m.c * m.c / 64.0;
  fourth.bracket_hi = 3.0 * m.c * m.c * std::log(2.0) / (2.0 * kl2);
  return {third, fourth};
}

}  // namespace ellint
