#include "stabber/ranked.hpp"

#include <algorithm>
#include <numeric>

namespace stabber {

namespace {

std::vector<Rank> dense_ranks(const Instance& inst, bool use_x, Rank& extent) {
  const std::size_t m = 2 * inst.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto coord = [&](std::size_t i) -> const Coord& {
    const Point& p = inst.point(EndpointId::from_index(i));
    return use_x ? p.x : p.y;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return coord(l) < coord(r); });
  std::vector<Rank> rank(m, 0);
  Rank current = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && coord(order[i - 1]) < coord(order[i])) ++current;
    rank[order[i]] = current;
  }
  extent = m == 0 ? 0 : current + 1;
  return rank;
}

}  // namespace

RankedGeometry rank_instance(const Instance& inst) {
  RankedGeometry g;
  g.n = inst.size();
  const auto xs = dense_ranks(inst, true, g.x_extent);
  const auto ys = dense_ranks(inst, false, g.y_extent);
  g.pts.resize(2 * g.n);
  for (std::size_t e = 0; e < g.pts.size(); ++e) g.pts[e] = {xs[e], ys[e]};
  return g;
}

RankedGeometry transpose(const RankedGeometry& g) {
  RankedGeometry out = g;
  std::swap(out.x_extent, out.y_extent);
  for (auto& p : out.pts) std::swap(p.x, p.y);
  return out;
}

RankedGeometry flip_x(const RankedGeometry& g) {
  RankedGeometry out = g;
  for (auto& p : out.pts) p.x = g.x_extent - 1 - p.x;
  return out;
}

RankedGeometry flip_y(const RankedGeometry& g) {
  RankedGeometry out = g;
  for (auto& p : out.pts) p.y = g.y_extent - 1 - p.y;
  return out;
}

RankedGeometry to_canonical(const RankedGeometry& g, const Shape& shape) {
  using K = Shape::Kind;
  switch (shape.kind) {
    case K::Strip:
      return shape.axis == Axis::Horizontal ? g : transpose(g);
    case K::Quadrant:
      switch (shape.quadrant) {
        case QuadrantKind::BR: return g;
        case QuadrantKind::BL: return flip_x(g);
        case QuadrantKind::TR: return flip_y(g);
        case QuadrantKind::TL: return flip_y(flip_x(g));
      }
      break;
    case K::ThreeRect:
      switch (shape.open) {
        case OpenSide::Down: return g;
        case OpenSide::Up: return flip_y(g);
        case OpenSide::Left: return transpose(g);
        case OpenSide::Right: return flip_y(transpose(g));
      }
      break;
    case K::Halfplane:
    case K::Rect:
      return g;
  }
  return g;
}

}  // namespace stabber
