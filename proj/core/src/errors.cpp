#include "ellint/errors.hpp"

#include <utility>

namespace ellint {

RegionError::RegionError(const std::string& what, std::string inequality)
    : std::domain_error(what + " (requires " + inequality + ")"),
      inequality_(std::move(inequality)) {}

}  // namespace ellint
