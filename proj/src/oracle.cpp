#include "stabber/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace stabber {

std::size_t oracle_cap() {
  if (const char* env = std::getenv("STABBER_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<unsigned long>(v, 32);
  }
  return 12;
}

namespace {

using Mask = std::uint64_t;

/// Masks of the endpoints on the inner side of each candidate placement of one side,
/// plus the all-ones mask for the side dropped to infinity.
std::vector<Mask> side_masks(const Instance& inst, Side side) {
  const std::size_t m = 2 * inst.size();
  const bool use_x = side == Side::Left || side == Side::Right;
  auto coord = [&](std::size_t e) -> const Coord& {
    const Point& p = inst.point(EndpointId::from_index(e));
    return use_x ? p.x : p.y;
  };
  std::vector<Coord> values;
  for (std::size_t e = 0; e < m; ++e) values.push_back(coord(e));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Mask> out;
  out.push_back(m == 64 ? ~Mask{0} : (Mask{1} << m) - 1);
  for (const Coord& c : values) {
    Mask mask = 0;
    for (std::size_t e = 0; e < m; ++e) {
      const Coord& v = coord(e);
      const bool inside = (side == Side::Left && v >= c) || (side == Side::Right && v <= c) ||
                          (side == Side::Bottom && v >= c) || (side == Side::Top && v <= c);
      if (inside) mask |= Mask{1} << e;
    }
    out.push_back(mask);
  }
  return out;
}

void search(const std::vector<std::vector<Mask>>& sides, std::size_t depth, Mask acc, Mask full,
            std::vector<Mask>& found) {
  if (depth == sides.size()) {
    // Exactly one endpoint of every segment: bits 2s and 2s+1 differ.
    if (((acc ^ (acc >> 1)) & full) == full) found.push_back(acc);
    return;
  }
  for (Mask m : sides[depth]) search(sides, depth + 1, acc & m, full, found);
}

}  // namespace

std::vector<StabberClass> oracle_classes(const Instance& inst, const Shape& shape) {
  const std::size_t n = inst.size();
  if (n > oracle_cap()) {
    throw Error(ErrorKind::BadSize, "oracle cap exceeded: n=" + std::to_string(n) + " > " +
                                        std::to_string(oracle_cap()));
  }
  validate_general_position(inst, shape);
  Mask full = 0;
  for (std::size_t s = 0; s < n; ++s) full |= Mask{1} << (2 * s);

  std::vector<std::vector<Mask>> sides;
  for (Side side : bounded_sides(shape)) sides.push_back(side_masks(inst, side));
  std::vector<Mask> found;
  search(sides, 0, ~Mask{0}, full, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<StabberClass> out;
  out.reserve(found.size());
  for (Mask m : found) {
    StabberClass cls;
    for (std::size_t e = 0; e < 2 * n; ++e) {
      if (m >> e & 1U) cls.reds.push_back(EndpointId::from_index(e));
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Coord> oracle_narrowest_strip(const Instance& inst, Axis axis) {
  std::optional<Coord> best;
  for (const auto& cls : oracle_classes(inst, Shape::strip(axis))) {
    auto value = [&](const EndpointId& e) -> const Coord& {
      return axis == Axis::Horizontal ? inst.point(e).y : inst.point(e).x;
    };
    Coord lo = value(cls.reds.front()), hi = lo;
    for (const auto& e : cls.reds) {
      lo = std::min(lo, value(e));
      hi = std::max(hi, value(e));
    }
    const Coord width = hi - lo;
    if (!best || width < *best) best = width;
  }
  return best;
}

}  // namespace stabber
