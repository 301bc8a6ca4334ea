#pragma once

#include <stdexcept>
#include <string>

namespace ellint {

// Argument outside the mathematical domain of an operation (singular corner,
// K(1), a boundary point a formula cannot take).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The point is inside the unit square but outside the region where an
// expansion's remainder bound is proven. `inequality()` names the violated
// condition in plain text.
class RegionError : public std::domain_error {
 public:
  RegionError(const std::string& what, std::string inequality);

  const std::string& inequality() const noexcept { return inequality_; }

 private:
  std::string inequality_;
};

// An iteration (AGM, duplication, adaptive quadrature) hit its iteration cap
// before reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ellint
