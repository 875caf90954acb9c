#include "stabber/solvers.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <optional>

#include "stabber/ranked.hpp"
#include "stabber/regions.hpp"

namespace stabber {

void SolveStats::merge(const SolveStats& o) {
  cascade_iterations += o.cascade_iterations;
  sweep_steps += o.sweep_steps;
  invariant_checks += o.invariant_checks;
  type_violations += o.type_violations;
  gi_overlaps += o.gi_overlaps;
  subproblems += o.subproblems;
}

// ---------------------------------------------------------------------------
// Range counting and triviality

RangeCounter::RangeCounter(const Instance& inst) {
  const std::size_t m = 2 * inst.size();
  std::vector<Point> pts;
  pts.reserve(m);
  for (std::size_t e = 0; e < m; ++e) pts.push_back(inst.point(EndpointId::from_index(e)));
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  for (const auto& p : pts) {
    xs_.push_back(p.x);
    ys_.push_back(p.y);
  }
  std::sort(ys_.begin(), ys_.end());
  nodes_.reserve(m * 24 + 8);
  nodes_.push_back({});  // node 0: the empty tree
  roots_.push_back(0);
  for (const auto& p : pts) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(ys_.begin(), ys_.end(), p.y) - ys_.begin());
    roots_.push_back(insert(roots_.back(), 0, m - 1, pos));
  }
}

std::size_t RangeCounter::insert(std::size_t node, std::size_t lo, std::size_t hi, std::size_t pos) {
  Node copy = nodes_[node];
  ++copy.count;
  if (lo != hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (pos <= mid) copy.left = insert(copy.left, lo, mid, pos);
    else copy.right = insert(copy.right, mid + 1, hi, pos);
  }
  nodes_.push_back(copy);
  return nodes_.size() - 1;
}

std::size_t RangeCounter::query(std::size_t a, std::size_t b, std::size_t lo, std::size_t hi, std::size_t ql,
                                std::size_t qr) const {
  if (qr < lo || hi < ql || nodes_[b].count == nodes_[a].count) return 0;
  if (ql <= lo && hi <= qr) return nodes_[b].count - nodes_[a].count;
  const std::size_t mid = (lo + hi) / 2;
  return query(nodes_[a].left, nodes_[b].left, lo, mid, ql, qr) +
         query(nodes_[a].right, nodes_[b].right, mid + 1, hi, ql, qr);
}

std::size_t RangeCounter::rank_lo(const std::vector<Coord>& axis, const Bound& b) const {
  if (!b.value) return 0;
  auto it = b.open ? std::upper_bound(axis.begin(), axis.end(), *b.value)
                   : std::lower_bound(axis.begin(), axis.end(), *b.value);
  return static_cast<std::size_t>(it - axis.begin());
}

std::size_t RangeCounter::rank_hi(const std::vector<Coord>& axis, const Bound& b) const {
  if (!b.value) return axis.size();
  auto it = b.open ? std::lower_bound(axis.begin(), axis.end(), *b.value)
                   : std::upper_bound(axis.begin(), axis.end(), *b.value);
  return static_cast<std::size_t>(it - axis.begin());
}

std::size_t RangeCounter::count(const Range& x, const Range& y) const {
  const std::size_t x0 = rank_lo(xs_, x.lo), x1 = rank_hi(xs_, x.hi);
  const std::size_t y0 = rank_lo(ys_, y.lo), y1 = rank_hi(ys_, y.hi);
  if (x0 >= x1 || y0 >= y1) return 0;
  return query(roots_[x0], roots_[x1], 0, ys_.size() - 1, y0, y1 - 1);
}

bool is_trivial(const Solution& sol, const Instance& inst, const RangeCounter& counter) {
  const Region r = realize_region(sol, inst);
  using B = RangeCounter::Bound;
  const RangeCounter::Range xr{B{r.xmin, false}, B{r.xmax, false}};
  const RangeCounter::Range yr{B{r.ymin, false}, B{r.ymax, false}};
  for (Side side : bounded_sides(sol.shape)) {
    std::size_t hits = 0;
    switch (side) {
      case Side::Left: hits = counter.count({B{}, B{r.xmin, true}}, yr); break;
      case Side::Right: hits = counter.count({B{r.xmax, true}, B{}}, yr); break;
      case Side::Top: hits = counter.count(xr, {B{r.ymax, true}, B{}}); break;
      case Side::Bottom: hits = counter.count(xr, {B{}, B{r.ymin, true}}); break;
    }
    if (hits == 0) return true;
  }
  return false;
}

std::vector<Solution> make_solutions(const Instance& inst, const Shape& shape, std::vector<StabberClass> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  const RangeCounter counter(inst);
  std::vector<Solution> out;
  out.reserve(classes.size());
  for (auto& cls : classes) {
    Solution sol;
    sol.shape = shape;
    sol.anchors = anchors_for(shape, cls, inst);
    sol.cls = std::move(cls);
    sol.trivial = is_trivial(sol, inst, counter);
    out.push_back(std::move(sol));
  }
  return out;
}

namespace {

using Seeds = std::vector<std::pair<std::size_t, Color>>;

StabberClass with_extra_reds(std::span<const Color> colors, const std::vector<std::size_t>& extra) {
  std::vector<bool> red(colors.size(), false);
  for (std::size_t e = 0; e < colors.size(); ++e) red[e] = colors[e] == Color::Red;
  for (std::size_t e : extra) red[e] = true;
  StabberClass cls;
  for (std::size_t e = 0; e < red.size(); ++e) {
    if (red[e]) cls.reds.push_back(EndpointId::from_index(e));
  }
  return cls;
}

/// Stack of seeding steps over one cascade. Rollback mode undoes a step through a
/// checkpoint; recompute mode rebuilds the state from scratch for every change.
template <class Region>
class Driver {
 public:
  struct Step {
    Seeds seeds;
    std::vector<RPoint> virtual_red;
  };

  Driver(const RankedGeometry& g, const std::vector<bool>& active, const SolveOptions& opts, SolveStats& stats)
      : g_(g), active_(active), opts_(opts), stats_(stats) {
    fresh();
  }

  Outcome push(Step step) {
    if (opts_.sweep == SweepMode::Rollback) {
      checkpoints_.push_back(state_->checkpoint());
      return apply(*state_, step);
    }
    steps_.push_back(std::move(step));
    return rebuild();
  }

  void pop() {
    if (opts_.sweep == SweepMode::Rollback) {
      state_->rollback(checkpoints_.back());
      checkpoints_.pop_back();
      return;
    }
    steps_.pop_back();
    dirty_ = true;
  }

  const Cascade<Region>& state() {
    if (dirty_) rebuild();
    return *state_;
  }

 private:
  void fresh() { state_.emplace(g_, active_, opts_.discipline); }

  Outcome rebuild() {
    dirty_ = false;
    fresh();
    Outcome o;
    for (const auto& s : steps_) {
      o = apply(*state_, s);
      if (o.contradiction()) break;
    }
    return o;
  }

  Outcome apply(Cascade<Region>& c, const Step& step) {
    const std::size_t before = c.iterations();
    Outcome o;
    for (const RPoint& p : step.virtual_red) {
      o = c.seed_region(p, Color::Red);
      if (o.contradiction()) return o;
    }
    o = c.seed(step.seeds);
    if (o.contradiction()) return o;
    o = c.run();
    stats_.cascade_iterations += c.iterations() - before;
    if (!o.contradiction() && opts_.check_invariants) {
      c.check_invariants();
      ++stats_.invariant_checks;
    }
    return o;
  }

  const RankedGeometry& g_;
  const std::vector<bool>& active_;
  const SolveOptions& opts_;
  SolveStats& stats_;
  std::optional<Cascade<Region>> state_;
  std::vector<Checkpoint> checkpoints_;
  std::vector<Step> steps_;
  bool dirty_ = false;
};

[[noreturn]] void internal(const std::string& what) { throw Error(ErrorKind::InternalInvariantViolation, what); }

// ---------------------------------------------------------------------------
// Strips (canonical: horizontal)

std::vector<StabberClass> strip_classes(const RankedGeometry& g, const SolveOptions& opts, SolveStats& stats) {
  std::vector<StabberClass> out;
  const std::size_t n = g.n;
  std::size_t qb = g.lower(0), pt = g.upper(0);
  for (std::size_t s = 1; s < n; ++s) {
    if (g.at(g.lower(s)).y > g.at(qb).y) qb = g.lower(s);
    if (g.at(g.upper(s)).y < g.at(pt).y) pt = g.upper(s);
  }
  if (g.at(qb).y < g.at(pt).y) {
    // A halfplane exists: all upper and all lower endpoints are (trivial) strip classes.
    StabberClass up, low;
    for (std::size_t s = 0; s < n; ++s) {
      up.reds.push_back(EndpointId::from_index(g.upper(s)));
      low.reds.push_back(EndpointId::from_index(g.lower(s)));
    }
    out.push_back(std::move(up));
    out.push_back(std::move(low));
  }

  const std::vector<bool> all;
  Driver<StripRegions> d(g, all, opts, stats);
  Outcome o = d.push({{{qb, Color::Red}, {pt, Color::Red}}, {}});

  std::vector<std::size_t> by_upper(n), by_lower(n);
  std::iota(by_upper.begin(), by_upper.end(), 0);
  std::iota(by_lower.begin(), by_lower.end(), 0);
  std::sort(by_upper.begin(), by_upper.end(), [&](auto a, auto b) { return g.at(g.upper(a)).y < g.at(g.upper(b)).y; });
  std::sort(by_lower.begin(), by_lower.end(), [&](auto a, auto b) { return g.at(g.lower(a)).y > g.at(g.lower(b)).y; });
  std::size_t tau = 0, beta = 0;

  while (!o.contradiction()) {
    const auto& st = d.state();
    if (st.unknown_count() == 0) {
      out.push_back(st.current_class());
      break;
    }
    const auto unknown = st.unknown_segments();
    std::vector<std::size_t> ups, lows;
    for (std::size_t s : unknown) {
      ups.push_back(g.upper(s));
      lows.push_back(g.lower(s));
      const auto lu = st.region().locate(g.at(g.upper(s)));
      const auto ll = st.region().locate(g.at(g.lower(s)));
      if (lu.component != Component::Upper || ll.component != Component::Lower) {
        internal("unknown strip segment does not span both gray components");
      }
    }
    out.push_back(with_extra_reds(st.colors(), ups));
    out.push_back(with_extra_reds(st.colors(), lows));
    while (st.status(by_upper[tau]) != SegStatus::U) ++tau;
    while (st.status(by_lower[beta]) != SegStatus::U) ++beta;
    ++stats.sweep_steps;
    o = d.push({{{g.upper(by_upper[tau]), Color::Red}, {g.lower(by_lower[beta]), Color::Red}}, {}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadrants (canonical: bottom-right)

std::vector<StabberClass> quadrant_classes(const RankedGeometry& g, const SolveOptions& opts, SolveStats& stats) {
  std::vector<StabberClass> out;
  const std::size_t n = g.n;
  Rank ax = kPosInf, ay = kNegInf;
  for (std::size_t s = 0; s < n; ++s) {
    ax = std::min(ax, g.at(g.right(s)).x);
    ay = std::max(ay, g.at(g.lower(s)).y);
  }
  const std::vector<bool> all;
  Driver<QuadrantRegions> d(g, all, opts, stats);
  Outcome o = d.push({{}, {RPoint{ax, ay}}});

  std::vector<std::size_t> by_upper(n), by_left(n);
  std::iota(by_upper.begin(), by_upper.end(), 0);
  std::iota(by_left.begin(), by_left.end(), 0);
  std::sort(by_upper.begin(), by_upper.end(), [&](auto a, auto b) { return g.at(g.right(a)).y < g.at(g.right(b)).y; });
  std::sort(by_left.begin(), by_left.end(), [&](auto a, auto b) { return g.at(g.left(a)).x > g.at(g.left(b)).x; });
  std::size_t tau = 0, beta = 0;

  while (!o.contradiction()) {
    const auto& st = d.state();
    if (st.unknown_count() == 0) {
      out.push_back(st.current_class());
      break;
    }
    std::vector<std::size_t> rights, lefts;
    for (std::size_t s : st.unknown_segments()) {
      rights.push_back(g.right(s));
      lefts.push_back(g.left(s));
      const auto lr = st.region().locate(g.at(g.right(s)));
      const auto ll = st.region().locate(g.at(g.left(s)));
      if (lr.component != Component::Right || ll.component != Component::Down) {
        internal("unknown quadrant segment does not span both gray components");
      }
    }
    out.push_back(with_extra_reds(st.colors(), rights));
    out.push_back(with_extra_reds(st.colors(), lefts));
    while (st.status(by_upper[tau]) != SegStatus::U) ++tau;
    while (st.status(by_left[beta]) != SegStatus::U) ++beta;
    ++stats.sweep_steps;
    o = d.push({{{g.right(by_upper[tau]), Color::Red}, {g.left(by_left[beta]), Color::Red}}, {}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3-rectangles (canonical: open downward)

bool allowed_type(Component a, Component b) {
  if (a > b) std::swap(a, b);
  using C = Component;
  return (a == C::A && (b == C::C || b == C::D || b == C::E)) || (a == C::B && b == C::E) ||
         (a == C::C && b == C::E);
}

void three_rect_core(const RankedGeometry& g, const std::vector<bool>& active, const Seeds& preseed,
                     const SolveOptions& opts, SolveStats& stats, std::vector<StabberClass>& out) {
  Driver<ThreeRectRegions> d(g, active, opts, stats);
  auto emit = [&] { out.push_back(d.state().current_class()); };

  Outcome o = d.push({preseed, {}});
  if (o.contradiction()) return;
  if (d.state().unknown_count() == 0) {
    emit();
    return;
  }

  const auto unknown = d.state().unknown_segments();
  std::size_t pl = g.left(unknown[0]), pr = g.right(unknown[0]), qb = g.lower(unknown[0]);
  for (std::size_t s : unknown) {
    if (g.at(g.left(s)).x > g.at(pl).x) pl = g.left(s);
    if (g.at(g.right(s)).x < g.at(pr).x) pr = g.right(s);
    if (g.at(g.lower(s)).y > g.at(qb).y) qb = g.lower(s);
  }
  const Rank xl = g.at(pl).x, xr = g.at(pr).x;
  if (xr > xl) {
    // A 3-rectangle missing the box holds no left (or no right) endpoint of an unknown segment.
    for (int side = 0; side < 2; ++side) {
      Seeds all_side;
      for (std::size_t s : unknown) all_side.emplace_back(side == 0 ? g.left(s) : g.right(s), Color::Red);
      o = d.push({all_side, {}});
      if (!o.contradiction() && d.state().unknown_count() == 0) emit();
      d.pop();
    }
  }

  const Rank l = std::min(xl, xr), r = std::max(xl, xr), t = g.at(qb).y;
  o = d.push({{}, {RPoint{l, t}, RPoint{r, t}}});
  if (o.contradiction()) return;
  if (d.state().unknown_count() == 0) {
    emit();
    return;
  }

  std::vector<std::size_t> a_points;
  {
    const auto& st = d.state();
    for (std::size_t s : st.unknown_segments()) {
      const Component ca = st.region().locate(g.at(2 * s)).component;
      const Component cb = st.region().locate(g.at(2 * s + 1)).component;
      if (!allowed_type(ca, cb)) {
        ++stats.type_violations;
        internal("unknown segment of a forbidden type after 3-rectangle seeding");
      }
      if (ca == Component::A) a_points.push_back(2 * s);
      if (cb == Component::A) a_points.push_back(2 * s + 1);
    }
  }
  std::sort(a_points.begin(), a_points.end(), [&](auto a, auto b) { return g.at(a).x < g.at(b).x; });

  std::vector<std::size_t> step_of(g.n, static_cast<std::size_t>(-1));
  auto secondary = [&](std::size_t step) {
    const auto& st = d.state();
    const auto left = st.unknown_segments();
    for (std::size_t s : left) {
      if (step_of[s] != static_cast<std::size_t>(-1) && step_of[s] != step) ++stats.gi_overlaps;
      step_of[s] = step;
    }
    if (left.empty()) {
      emit();
      return;
    }
    std::vector<std::size_t> e_points;
    for (std::size_t s : left) {
      for (std::size_t e : {2 * s, 2 * s + 1}) {
        if (st.region().locate(g.at(e)).component == Component::E) e_points.push_back(e);
      }
    }
    std::sort(e_points.begin(), e_points.end(), [&](auto a, auto b) { return g.at(a).x < g.at(b).x; });
    const std::size_t m = e_points.size();
    for (std::size_t j = 0; j <= m; ++j) {
      Seeds seeds;
      if (j >= 1) seeds.emplace_back(e_points[j - 1], Color::Red);
      if (j < m) seeds.emplace_back(e_points[j], Color::Blue);
      const Outcome oj = d.push({seeds, {}});
      if (!oj.contradiction()) {
        if (d.state().unknown_count() != 0) internal("secondary sweep left unknown segments");
        emit();
      }
      d.pop();
    }
  };

  const std::size_t k = a_points.size();
  for (std::size_t i = 1; i <= k + 1; ++i) {
    if (i >= 2) {
      o = d.push({{{a_points[i - 2], Color::Blue}}, {}});
      if (o.contradiction()) break;
    }
    ++stats.sweep_steps;
    Seeds seeds;
    if (i <= k) seeds.emplace_back(a_points[i - 1], Color::Red);
    o = d.push({seeds, {}});
    if (!o.contradiction()) secondary(i);
    d.pop();
  }
}

std::vector<StabberClass> rect_subproblem(const RankedGeometry& g, std::size_t v, const SolveOptions& opts,
                                          SolveStats& stats) {
  std::vector<StabberClass> out;
  const Rank floor = g.at(v).y;
  Seeds preseed;
  std::vector<bool> active(2 * g.n);
  for (std::size_t s = 0; s < g.n; ++s) {
    const bool a_below = g.at(2 * s).y < floor, b_below = g.at(2 * s + 1).y < floor;
    if (a_below && b_below) return out;
    if (a_below) preseed.emplace_back(2 * s + 1, Color::Red);
    if (b_below) preseed.emplace_back(2 * s, Color::Red);
    active[2 * s] = !a_below;
    active[2 * s + 1] = !b_below;
  }
  if (std::find(preseed.begin(), preseed.end(), std::pair{v, Color::Red}) == preseed.end()) {
    preseed.emplace_back(v, Color::Red);
  }
  ++stats.subproblems;
  three_rect_core(g, active, preseed, opts, stats, out);
  return out;
}

std::vector<Solution> rect_impl(const Instance& inst, const SolveOptions& opts, bool parallel) {
  const Shape shape = Shape::rect();
  validate_general_position(inst, shape);
  const RankedGeometry g = rank_instance(inst);
  const std::size_t m = 2 * g.n;
  std::vector<std::vector<StabberClass>> per(m);
  std::vector<SolveStats> per_stats(m);
  std::exception_ptr failure;
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(m); ++v) {
      try {
        per[v] = rect_subproblem(g, static_cast<std::size_t>(v), opts, per_stats[v]);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    for (std::size_t v = 0; v < m; ++v) per[v] = rect_subproblem(g, v, opts, per_stats[v]);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<StabberClass> all;
  for (auto& p : per) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  if (opts.stats) {
    for (const auto& s : per_stats) opts.stats->merge(s);
  }
  return make_solutions(inst, shape, std::move(all));
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Solution> solve_halfplane(const Instance& inst, HalfplaneDir dir, const SolveOptions&) {
  const Shape shape = Shape::halfplane(dir);
  validate_general_position(inst, shape);
  const RankedGeometry g = rank_instance(inst);
  const bool vertical_line = dir == HalfplaneDir::Left || dir == HalfplaneDir::Right;
  const RankedGeometry h = vertical_line ? transpose(g) : g;
  // After transposing, "left" plays the role of "down".
  Rank max_low = kNegInf, min_up = kPosInf;
  for (std::size_t s = 0; s < h.n; ++s) {
    max_low = std::max(max_low, h.at(h.lower(s)).y);
    min_up = std::min(min_up, h.at(h.upper(s)).y);
  }
  if (max_low >= min_up) return {};
  const bool take_upper = dir == HalfplaneDir::Up || dir == HalfplaneDir::Right;
  StabberClass cls;
  for (std::size_t s = 0; s < h.n; ++s) {
    cls.reds.push_back(EndpointId::from_index(take_upper ? h.upper(s) : h.lower(s)));
  }
  std::sort(cls.reds.begin(), cls.reds.end());
  return make_solutions(inst, shape, {cls});
}

std::vector<Solution> solve_halfplane_axis(const Instance& inst, Axis axis, const SolveOptions& opts) {
  auto out = solve_halfplane(inst, axis == Axis::Horizontal ? HalfplaneDir::Up : HalfplaneDir::Left, opts);
  auto other = solve_halfplane(inst, axis == Axis::Horizontal ? HalfplaneDir::Down : HalfplaneDir::Right, opts);
  out.insert(out.end(), other.begin(), other.end());
  return out;
}

std::vector<Solution> solve_strip(const Instance& inst, Axis axis, const SolveOptions& opts) {
  const Shape shape = Shape::strip(axis);
  validate_general_position(inst, shape);
  const RankedGeometry g = to_canonical(rank_instance(inst), shape);
  SolveStats local;
  auto classes = strip_classes(g, opts, local);
  if (opts.stats) opts.stats->merge(local);
  return make_solutions(inst, shape, std::move(classes));
}

std::vector<Solution> solve_quadrant(const Instance& inst, QuadrantKind kind, const SolveOptions& opts) {
  const Shape shape = Shape::quadrant_of(kind);
  validate_general_position(inst, shape);
  const RankedGeometry g = to_canonical(rank_instance(inst), shape);
  SolveStats local;
  auto classes = quadrant_classes(g, opts, local);
  if (opts.stats) opts.stats->merge(local);
  return make_solutions(inst, shape, std::move(classes));
}

std::vector<Solution> solve_three_rect(const Instance& inst, OpenSide open, const std::optional<Classification>& preseed,
                                       const SolveOptions& opts) {
  const Shape shape = Shape::three_rect(open);
  validate_general_position(inst, shape);
  const RankedGeometry g = to_canonical(rank_instance(inst), shape);
  Seeds seeds;
  if (preseed) {
    if (preseed->segments() != inst.size()) {
      throw Error(ErrorKind::BadParameter, "preseed size does not match the instance");
    }
    const auto raw = preseed->raw();
    for (std::size_t e = 0; e < raw.size(); ++e) {
      if (raw[e] == Color::Red) seeds.emplace_back(e, Color::Red);
    }
  }
  SolveStats local;
  std::vector<StabberClass> classes;
  three_rect_core(g, std::vector<bool>(2 * g.n, true), seeds, opts, local, classes);
  if (opts.stats) opts.stats->merge(local);
  return make_solutions(inst, shape, std::move(classes));
}

std::vector<Solution> solve_rect(const Instance& inst, const SolveOptions& opts) { return rect_impl(inst, opts, true); }

std::vector<Solution> solve_rect_serial(const Instance& inst, const SolveOptions& opts) {
  return rect_impl(inst, opts, false);
}

std::vector<Solution> solve(const Instance& inst, const Shape& shape, const SolveOptions& opts) {
  switch (shape.kind) {
    case Shape::Kind::Halfplane: return solve_halfplane(inst, shape.dir, opts);
    case Shape::Kind::Strip: return solve_strip(inst, shape.axis, opts);
    case Shape::Kind::Quadrant: return solve_quadrant(inst, shape.quadrant, opts);
    case Shape::Kind::ThreeRect: return solve_three_rect(inst, shape.open, std::nullopt, opts);
    case Shape::Kind::Rect: return solve_rect(inst, opts);
  }
  return {};
}

}  // namespace stabber
