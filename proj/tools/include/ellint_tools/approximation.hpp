#pragma once

#include <optional>
#include <string_view>

#include "ellint/point.hpp"

namespace ellint::tools {

// Every approximation the command line can evaluate.
enum class Approximation { series_one, series_two, radon, kelisky, cg1, cg2 };

std::string_view to_string(Approximation a) noexcept;
std::optional<Approximation> parse_approximation(std::string_view s) noexcept;

// An approximation at one point with its claimed interval for F - value.
struct Evaluation {
  double value = 0.0;
  double err_lo = 0.0;
  double err_hi = 0.0;
};

// Throws whatever the underlying routine throws for points outside its region.
Evaluation evaluate(const EvalPoint& p, Approximation a, unsigned order,
                    const Quality& q = {});

}  // namespace ellint::tools
