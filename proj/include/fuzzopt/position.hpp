#pragma once

#include <compare>

namespace fuzzopt {

/// Grid coordinate of a schedulable slot. The meaning of the two indices is
/// owned by the domain: the shift domain uses (subgroup, day), the queens
/// domain (column, 0), generic instantiations (unit, object).
struct Position {
  int unit = 0;
  int slot = 0;
  auto operator<=>(const Position&) const = default;
};

}  // namespace fuzzopt
