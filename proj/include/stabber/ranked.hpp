#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "stabber/core.hpp"

namespace stabber {

/// Position of a coordinate in the sorted list of distinct coordinates of one axis.
using Rank = std::int32_t;

inline constexpr Rank kNegInf = std::numeric_limits<Rank>::min() / 4;
inline constexpr Rank kPosInf = std::numeric_limits<Rank>::max() / 4;

struct RPoint {
  Rank x = 0;
  Rank y = 0;
  friend bool operator==(const RPoint&, const RPoint&) = default;
};

/// Rank-space copy of an instance. Endpoint e = 2*seg + end.
struct RankedGeometry {
  std::size_t n = 0;
  std::vector<RPoint> pts;
  Rank x_extent = 0;  // ranks are in [0, x_extent)
  Rank y_extent = 0;

  const RPoint& at(std::size_t e) const { return pts[e]; }
  std::size_t upper(std::size_t seg) const { return pts[2 * seg].y > pts[2 * seg + 1].y ? 2 * seg : 2 * seg + 1; }
  std::size_t lower(std::size_t seg) const { return upper(seg) ^ 1U; }
  std::size_t right(std::size_t seg) const { return pts[2 * seg].x > pts[2 * seg + 1].x ? 2 * seg : 2 * seg + 1; }
  std::size_t left(std::size_t seg) const { return right(seg) ^ 1U; }
};

/// Dense ranks (equal coordinates share a rank).
RankedGeometry rank_instance(const Instance& inst);

RankedGeometry transpose(const RankedGeometry& g);
RankedGeometry flip_x(const RankedGeometry& g);
RankedGeometry flip_y(const RankedGeometry& g);

/// Maps a geometry so that `shape` becomes the canonical orientation its solver handles:
/// horizontal strips, bottom-right quadrants, 3-rectangles open downward.
RankedGeometry to_canonical(const RankedGeometry& g, const Shape& shape);

}  // namespace stabber
