#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabber/core.hpp"

namespace stabber {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t n = 8;
  /// Coordinates are p/q with |p| <= range * q and q in {1, 2}.
  std::int64_t range = 100;
};

/// Largest difference between consecutive values of sorted X (0 when |X| < 2).
Coord maxgap(std::vector<Coord> xs);

/// Default perturbation for gen_maxgap: a quarter of min(1, min X, smallest gap).
Coord default_delta(const std::vector<Coord>& xs);

/// Max-gap reduction instance for vertical strips. Throws DuplicateValues on
/// repeated values, BadSize for |X| < 2 and BadParameter for a bad delta or
/// non-positive values.
Instance gen_maxgap(const std::vector<Coord>& xs, std::optional<Coord> delta = std::nullopt);

/// The same construction laid on the line y = x: vertical strips become
/// bottom-right quadrants.
Instance gen_maxgap_rotated(const std::vector<Coord>& xs, std::optional<Coord> delta = std::nullopt);

/// n >= 8, n % 4 == 0 (else BadSize); at least (n/2 + 1)^2 rectangle classes.
Instance gen_quadratic_rect(std::size_t n);

/// n >= 3 (else BadSize); seeding the horizontal-strip cascade classifies the
/// n - 2 chain segments one after another.
Instance gen_cascade_chain(std::size_t n);

/// Random instance in general position for every shape. n == 0 or a bad range
/// is BadParameter; ExhaustedRetries when distinct coordinates cannot be found.
Instance gen_random(const GenConfig& cfg);

}  // namespace stabber
