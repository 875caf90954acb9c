#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stabber/core.hpp"

namespace stabber {

/// Largest n the oracle accepts: STABBER_ORACLE_CAP if set, else 12.
std::size_t oracle_cap();

/// Every class realized by a region of the shape whose bounded sides pass
/// through endpoint coordinates, or are dropped to infinity. Sorted, unique.
/// Throws BadSize above the cap and DegenerateInput without general position.
std::vector<StabberClass> oracle_classes(const Instance& inst, const Shape& shape);

/// Smallest (max - min) of the red coordinates over the strip classes; empty when none.
std::optional<Coord> oracle_narrowest_strip(const Instance& inst, Axis axis);

}  // namespace stabber
