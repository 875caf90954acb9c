#include "stabber/gen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "stabber/oracle.hpp"

namespace stabber {

Coord maxgap(std::vector<Coord> xs) {
  std::sort(xs.begin(), xs.end());
  Coord best(0);
  for (std::size_t i = 1; i < xs.size(); ++i) best = std::max(best, xs[i] - xs[i - 1]);
  return best;
}

namespace {

void check_values(const std::vector<Coord>& xs) {
  if (xs.size() < 2) throw Error(ErrorKind::BadSize, "max-gap needs at least two values");
  std::vector<Coord> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) throw Error(ErrorKind::DuplicateValues, "repeated value " + sorted[i].to_string());
  }
  if (sorted.front() <= Coord(0)) throw Error(ErrorKind::BadParameter, "max-gap values must be positive");
}

Coord delta_bound(const std::vector<Coord>& xs) {
  std::vector<Coord> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  Coord bound = std::min(Coord(1), sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) bound = std::min(bound, sorted[i] - sorted[i - 1]);
  return bound;
}

/// Segments as x-intervals; y given per segment.
struct Interval {
  Coord lo, hi, y;
};

std::vector<Interval> maxgap_intervals(const std::vector<Coord>& xs, std::optional<Coord> delta) {
  check_values(xs);
  const Coord bound = delta_bound(xs);
  const Coord d = delta ? *delta : default_delta(xs);
  if (d <= Coord(0) || d >= bound) {
    throw Error(ErrorKind::BadParameter, "delta must lie in (0, " + bound.to_string() + ")");
  }
  const Coord xm = *std::max_element(xs.begin(), xs.end());
  const Coord xmin = *std::min_element(xs.begin(), xs.end());
  std::vector<Interval> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.push_back({-xm + xs[i] - Coord(1), xs[i], Coord(static_cast<long>(i + 1))});
  }
  out.push_back({d, xm + d, Coord(0)});
  // Left guard starts just right of the leftmost segment's left end, so the
  // all-left-endpoints strip is not a stabber.
  out.push_back({-xm + xmin - Coord(1) + d, -d, Coord(0)});
  return out;
}

}  // namespace

Coord default_delta(const std::vector<Coord>& xs) {
  check_values(xs);
  return delta_bound(xs) / Coord(4);
}

Instance gen_maxgap(const std::vector<Coord>& xs, std::optional<Coord> delta) {
  std::vector<Segment> segs;
  for (const auto& iv : maxgap_intervals(xs, delta)) segs.push_back({{iv.lo, iv.y}, {iv.hi, iv.y}});
  return Instance(std::move(segs));
}

Instance gen_maxgap_rotated(const std::vector<Coord>& xs, std::optional<Coord> delta) {
  // Collinear base on y = 0, then (x, y) -> (x - y, x + y).
  std::vector<Segment> segs;
  for (const auto& iv : maxgap_intervals(xs, delta)) segs.push_back({{iv.lo, iv.lo}, {iv.hi, iv.hi}});
  return Instance(std::move(segs));
}

Instance gen_quadratic_rect(std::size_t n) {
  if (n < 8 || n % 4 != 0) throw Error(ErrorKind::BadSize, "gen_quadratic_rect needs n >= 8 with n % 4 == 0");
  const long m = static_cast<long>(n / 2);
  const long k = m + 1;
  const long c1 = 10 * m + 10;
  const long d = 3 * m + 3;
  std::vector<Segment> segs;
  // Parameter intervals [i - k, i]: a window of length m picks a prefix of right ends.
  // Family one lies on y = x + c1, cut by the left and top sides.
  for (long i = 1; i <= m; ++i) segs.push_back({{i - k, i - k + c1}, {i, i + c1}});
  // Family two lies on y = x around (d, d), cut by the bottom and right sides.
  for (long i = 1; i <= m; ++i) segs.push_back({{i - k + d, i - k + d}, {i + d, i + d}});
  Instance inst(std::move(segs));
  if (n <= 12) {
    const std::size_t need = (n / 4) * (n / 4);
    if (oracle_classes(inst, Shape::rect()).size() < need) {
      throw Error(ErrorKind::InternalInvariantViolation, "quadratic construction lost classes");
    }
  }
  return inst;
}

Instance gen_cascade_chain(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::BadSize, "gen_cascade_chain needs n >= 3");
  const long m = static_cast<long>(n - 2);
  const long a = m + 2;
  const long top = m + 3;
  std::vector<std::pair<Coord, Coord>> ys;  // (lower, upper)
  ys.push_back({Coord(-a), Coord(0)});      // lowest upper endpoint
  ys.push_back({Coord(1), Coord(top)});     // highest lower endpoint
  for (long c = 1; c <= m; ++c) {
    const long j = (c + 1) / 2;
    if (c % 2 == 1) {
      ys.push_back({Coord(-2 * (j - 1) + 1, 2), Coord(top - j)});
    } else {
      ys.push_back({Coord(-j), Coord(2 * (top - j) + 1, 2)});
    }
  }
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const long x = 2 * static_cast<long>(i);
    segs.push_back({{x, ys[i].first}, {x + 1, ys[i].second}});
  }
  return Instance(std::move(segs));
}

Instance gen_random(const GenConfig& cfg) {
  if (cfg.n == 0) throw Error(ErrorKind::BadParameter, "gen_random needs n >= 1");
  if (cfg.range < 1) throw Error(ErrorKind::BadParameter, "gen_random needs range >= 1");
  std::mt19937_64 rng(cfg.seed);
  const auto span = static_cast<std::uint64_t>(4 * cfg.range + 1);  // numerators over denominator 2
  auto draw = [&]() -> Coord {
    const auto v = static_cast<long>(rng() % span) - static_cast<long>(2 * cfg.range);
    return Coord(v, 2);
  };
  std::set<Coord> used_x, used_y;
  auto fresh = [&](std::set<Coord>& used) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Coord c = draw();
      if (used.insert(c).second) return c;
    }
    throw Error(ErrorKind::ExhaustedRetries, "no distinct coordinate left in range " + std::to_string(cfg.range));
  };
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    Point a{fresh(used_x), fresh(used_y)};
    Point b{fresh(used_x), fresh(used_y)};
    segs.push_back({a, b});
  }
  return Instance(std::move(segs));
}

}  // namespace stabber
