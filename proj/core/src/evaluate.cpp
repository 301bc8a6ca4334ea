#include "ellint/evaluate.hpp"

#include "ellint/amplitude_series.hpp"
#include "ellint/auxiliary.hpp"
#include "ellint/modulus_series.hpp"

namespace ellint {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::modulus:
      return "modulus";
    case Method::amplitude:
      return "amplitude";
    case Method::radon:
      return "radon";
    case Method::kelisky:
      return "kelisky";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (auto m : {Method::modulus, Method::amplitude, Method::radon,
                 Method::kelisky}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

Enclosure evaluate(const EvalPoint& p, Method method, unsigned order,
                   const Quality& q) {
  if (p.lambda() == 0.0) return Enclosure{0.0, 0.0, 0.0, static_cast<int>(order)};
  switch (method) {
    case Method::modulus:
      return modulus_expansion(p, order);
    case Method::amplitude:
      return amplitude_expansion(p, order, q);
    case Method::radon:
      return radon_expansion(p, order);
    case Method::kelisky:
      return kelisky_expansion(p, order, q);
  }
  return {};
}

}  // namespace ellint
