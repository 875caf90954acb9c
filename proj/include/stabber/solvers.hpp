#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stabber/cascade.hpp"
#include "stabber/core.hpp"

namespace stabber {

enum class SweepMode : std::uint8_t { Rollback, Recompute };

/// Counters filled by the solvers; all sums over every cascade the call ran.
struct SolveStats {
  std::size_t cascade_iterations = 0;
  std::size_t sweep_steps = 0;
  std::size_t invariant_checks = 0;
  std::size_t type_violations = 0;   // unknown segment of a forbidden type after the 3-rect seeding
  std::size_t gi_overlaps = 0;       // a segment unknown in two different sweep steps
  std::size_t subproblems = 0;       // rect bottom anchors actually solved

  void merge(const SolveStats& o);
};

struct SolveOptions {
  bool check_invariants = false;
  Discipline discipline = Discipline::Fifo;
  SweepMode sweep = SweepMode::Rollback;
  SolveStats* stats = nullptr;
};

/// Static orthogonal range counter over the endpoints of an instance
/// (persistent segment tree, O(log n) per query).
class RangeCounter {
 public:
  struct Bound {
    std::optional<Coord> value;  // absent = infinite
    bool open = false;
  };
  struct Range {
    Bound lo, hi;
  };

  explicit RangeCounter(const Instance& inst);
  std::size_t count(const Range& x, const Range& y) const;

 private:
  std::size_t rank_lo(const std::vector<Coord>& axis, const Bound& b) const;
  std::size_t rank_hi(const std::vector<Coord>& axis, const Bound& b) const;  // exclusive
  std::size_t insert(std::size_t node, std::size_t lo, std::size_t hi, std::size_t pos);
  std::size_t query(std::size_t a, std::size_t b, std::size_t lo, std::size_t hi, std::size_t ql, std::size_t qr) const;

  struct Node {
    std::size_t left = 0, right = 0, count = 0;
  };
  std::vector<Coord> xs_, ys_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> roots_;  // roots_[i] = tree of the first i points by x
};

/// True iff extending some bounded side of the realized region to infinity sweeps no endpoint.
bool is_trivial(const Solution& sol, const Instance& inst, const RangeCounter& counter);

std::vector<Solution> solve_halfplane(const Instance& inst, HalfplaneDir dir, const SolveOptions& opts = {});
/// Both halfplanes bounded by a line of the axis (up and down for horizontal).
std::vector<Solution> solve_halfplane_axis(const Instance& inst, Axis axis, const SolveOptions& opts = {});
std::vector<Solution> solve_strip(const Instance& inst, Axis axis, const SolveOptions& opts = {});
std::vector<Solution> solve_quadrant(const Instance& inst, QuadrantKind kind, const SolveOptions& opts = {});
/// preseed: partial classification every reported class must extend.
std::vector<Solution> solve_three_rect(const Instance& inst, OpenSide open,
                                       const std::optional<Classification>& preseed = std::nullopt,
                                       const SolveOptions& opts = {});
/// Rectangles, one 3-rectangle subproblem per bottom anchor, run with OpenMP.
std::vector<Solution> solve_rect(const Instance& inst, const SolveOptions& opts = {});
std::vector<Solution> solve_rect_serial(const Instance& inst, const SolveOptions& opts = {});

std::vector<Solution> solve(const Instance& inst, const Shape& shape, const SolveOptions& opts = {});

/// Anchors, triviality and canonical order for a set of classes of one shape.
std::vector<Solution> make_solutions(const Instance& inst, const Shape& shape, std::vector<StabberClass> classes);

}  // namespace stabber
