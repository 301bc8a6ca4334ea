#include "ellint_tools/approximation.hpp"

#include <array>

#include "ellint/carlson_gustafson.hpp"
#include "ellint/evaluate.hpp"
#include "ellint/reference.hpp"

namespace ellint::tools {

namespace {

constexpr std::array<std::pair<Approximation, std::string_view>, 6> kNames{{
    {Approximation::series_one, "series_one"},
    {Approximation::series_two, "series_two"},
    {Approximation::radon, "radon"},
    {Approximation::kelisky, "kelisky"},
    {Approximation::cg1, "cg1"},
    {Approximation::cg2, "cg2"},
}};

Evaluation from_cg(const CGResult& r, const EvalPoint& p, const Quality& q) {
  if (r.kind == CGResult::Kind::absolute) {
    return {r.value, r.bracket_lo, r.bracket_hi};
  }
  // F - value = theta F and F > 0
  const double f = reference_f(p, q);
  return {r.value, r.bracket_lo * f, r.bracket_hi * f};
}

}  // namespace

std::string_view to_string(Approximation a) noexcept {
  for (const auto& [key, name] : kNames) {
    if (key == a) return name;
  }
  return "?";
}

std::optional<Approximation> parse_approximation(std::string_view s) noexcept {
  for (const auto& [key, name] : kNames) {
    if (name == s) return key;
  }
  return std::nullopt;
}

Evaluation evaluate(const EvalPoint& p, Approximation a, unsigned order,
                    const Quality& q) {
  auto from = [](const Enclosure& e) {
    return Evaluation{e.value, e.err_lo, e.err_hi};
  };
  switch (a) {
    case Approximation::series_one:
      return from(ellint::evaluate(p, Method::modulus, order, q));
    case Approximation::series_two:
      return from(ellint::evaluate(p, Method::amplitude, order, q));
    case Approximation::radon:
      return from(ellint::evaluate(p, Method::radon, order, q));
    case Approximation::kelisky:
      return from(ellint::evaluate(p, Method::kelisky, order, q));
    case Approximation::cg1:
      return from_cg(cg1(p), p, q);
    case Approximation::cg2:
      return from_cg(cg2(p), p, q);
  }
  return {};
}

}  // namespace ellint::tools
