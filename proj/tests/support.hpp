#pragma once

// Shared helpers for the test binaries: small instance builders, a naive
// quadratic cascade, and the seeded random corpus.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <vector>

#include "stabber/core.hpp"
#include "stabber/gen.hpp"
#include "stabber/ranked.hpp"

namespace stabber::test {

inline Instance make(std::initializer_list<std::array<long, 4>> segs) {
  std::vector<Segment> out;
  for (const auto& s : segs) out.push_back({{Coord(s[0]), Coord(s[1])}, {Coord(s[2]), Coord(s[3])}});
  return Instance(std::move(out));
}

// y-spans [0,2], [1,3]: a horizontal line at y in [1,2] splits every segment.
inline Instance I1() { return make({{0, 0, 5, 2}, {1, 1, 4, 3}}); }
// y-spans [0,1], [2,3], [4,5]: no horizontal strip.
inline Instance I2() { return make({{0, 0, 7, 1}, {1, 2, 6, 3}, {2, 4, 5, 5}}); }
// y-spans [0,1], [2,3]: exactly one horizontal strip, y in [1,2].
inline Instance I3() { return make({{0, 0, 5, 1}, {1, 2, 4, 3}}); }

inline Instance random_instance(std::uint64_t seed, std::size_t n, std::int64_t range = 20) {
  return gen_random(GenConfig{seed, n, range});
}

inline std::vector<StabberClass> classes_of(const std::vector<Solution>& sols) {
  std::vector<StabberClass> out;
  for (const auto& s : sols) out.push_back(s.cls);
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical shapes in rank space, hull of a point set.
enum class Canon { Strip, Quadrant, ThreeRect };

struct Hull {
  bool any = false;
  Rank xl = 0, xr = 0, yl = 0, yt = 0;  // bounding box of the points

  void add(RPoint p) {
    if (!any) {
      xl = xr = p.x;
      yl = yt = p.y;
      any = true;
      return;
    }
    xl = std::min(xl, p.x);
    xr = std::max(xr, p.x);
    yl = std::min(yl, p.y);
    yt = std::max(yt, p.y);
  }
  bool contains(Canon c, RPoint p) const {
    if (!any) return false;
    switch (c) {
      case Canon::Strip: return yl <= p.y && p.y <= yt;
      case Canon::Quadrant: return p.x >= xl && p.y <= yt;
      case Canon::ThreeRect: return xl <= p.x && p.x <= xr && p.y <= yt;
    }
    return false;
  }
};

struct NaiveResult {
  bool contradiction = false;
  std::vector<Color> colors;
};

/// Fixpoint of: partners opposite; points in the red hull are red; a point is
/// blue when adding it to the red hull would swallow a blue point. Quadratic
/// per round, no index, no queue.
inline NaiveResult naive_cascade(const RankedGeometry& g, Canon c, const std::vector<std::pair<std::size_t, Color>>& seeds,
                                 const std::vector<RPoint>& virtual_red = {}) {
  const std::size_t m = 2 * g.n;
  NaiveResult res;
  res.colors.assign(m, Color::None);
  auto assign = [&](std::size_t e, Color col) {
    if (res.colors[e] == opposite(col) || res.colors[e ^ 1U] == col) return false;
    res.colors[e] = col;
    res.colors[e ^ 1U] = opposite(col);
    return true;
  };
  for (const auto& [e, col] : seeds) {
    if (!assign(e, col)) {
      res.contradiction = true;
      return res;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    Hull red;
    for (const RPoint& v : virtual_red) red.add(v);
    for (std::size_t e = 0; e < m; ++e) {
      if (res.colors[e] == Color::Red) red.add(g.pts[e]);
    }
    for (std::size_t e = 0; e < m; ++e) {
      bool forced_red = red.contains(c, g.pts[e]);
      Hull grown = red;
      grown.add(g.pts[e]);
      bool forced_blue = false;
      for (std::size_t b = 0; b < m; ++b) {
        if (res.colors[b] == Color::Blue && grown.contains(c, g.pts[b])) forced_blue = true;
      }
      if (forced_red && forced_blue) {
        res.contradiction = true;
        return res;
      }
      const Color want = forced_red ? Color::Red : (forced_blue ? Color::Blue : Color::None);
      if (want == Color::None || res.colors[e] == want) continue;
      if (!assign(e, want)) {
        res.contradiction = true;
        return res;
      }
      changed = true;
    }
  }
  return res;
}

}  // namespace stabber::test
