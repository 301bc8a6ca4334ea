#pragma once

#include <optional>
#include <string_view>

#include "ellint/enclosure.hpp"
#include "ellint/point.hpp"

namespace ellint {

enum class Method { modulus, amplitude, radon, kelisky };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// One truncated expansion at p with its error bounds. F(0, k) = 0 is
/// returned exactly, with zero-width bounds, for every method. Otherwise
/// each method throws the DomainError or RegionError of the routine it
/// forwards to.
Enclosure evaluate(const EvalPoint& p, Method method, unsigned order,
                   const Quality& q = {});

}  // namespace ellint
