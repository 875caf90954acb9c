#pragma once

// Red/blue/gray partitions for the canonical orientations: horizontal strips,
// bottom-right quadrants and 3-rectangles open downward. Coordinates are ranks.
//
// Blue is the forced-blue region: a point is blue when the smallest region of
// the shape containing the current red region and the point would contain an
// already blue point. Red is the smallest region of the shape containing every
// red point (and any virtual seed).

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "stabber/core.hpp"
#include "stabber/range_index.hpp"
#include "stabber/ranked.hpp"

namespace stabber {

enum class Locus { Red, Blue, Gray, White };

enum class Component { None, Lower, Upper, Right, Down, A, B, C, D, E };

struct Location {
  Locus locus = Locus::Gray;
  Component component = Component::None;
  friend bool operator==(const Location&, const Location&) = default;
};

/// Endpoints newly found inside the red or blue region by a report call.
struct ForcedHits {
  std::vector<std::size_t> red;
  std::vector<std::size_t> blue;
  void clear() {
    red.clear();
    blue.clear();
  }
};

/// Min-of-secondary segment tree over a dense primary rank range, with undo by
/// leaf reset. Used for blue points of the 3-rectangle regions.
class MinTree {
 public:
  explicit MinTree(Rank extent = 0);
  void set(Rank i, Rank v);
  void reset(Rank i);
  Rank get(Rank i) const { return tree_[leaves_ + static_cast<std::size_t>(i)]; }
  /// Minimum over [lo, hi] (clamped); kPosInf when empty.
  Rank min(Rank lo, Rank hi) const;
  /// Largest index in [lo, hi] whose value <= bound, or -1.
  Rank rightmost_at_most(Rank lo, Rank hi, Rank bound) const;
  /// Smallest index in [lo, hi] whose value <= bound, or -1.
  Rank leftmost_at_most(Rank lo, Rank hi, Rank bound) const;
  Rank extent() const { return extent_; }

 private:
  Rank rightmost(std::size_t node, Rank nlo, Rank nhi, Rank lo, Rank hi, Rank bound) const;
  Rank leftmost(std::size_t node, Rank nlo, Rank nhi, Rank lo, Rank hi, Rank bound) const;

  Rank extent_ = 0;
  std::size_t leaves_ = 1;
  std::vector<Rank> tree_;
};

// ---------------------------------------------------------------------------

/// Horizontal strip: red interval R = [r_lo, r_hi] of y; blue B_b = (-inf, b_hi]
/// and B_t = [t_lo, +inf) derived from the blue points nearest to R.
class StripRegions {
 public:
  static constexpr bool kPrimaryIsX = false;

  StripRegions() = default;
  explicit StripRegions(const RankedGeometry&) {}

  /// strip_update: false on contradiction (the state is then unspecified until undo).
  bool update(RPoint p, Color c);
  Location locate(RPoint p) const;
  void report(const RangeIndex& index, RPoint last, Color c, ForcedHits& out) const;

  bool has_red() const { return has_red_; }
  Rank r_lo() const { return r_lo_; }
  Rank r_hi() const { return r_hi_; }
  /// Top of B_b (kNegInf if empty) and bottom of B_t (kPosInf if empty).
  Rank b_hi() const;
  Rank t_lo() const;

  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t mark);

  friend bool operator==(const StripRegions& l, const StripRegions& r) {
    return l.has_red_ == r.has_red_ && l.r_lo_ == r.r_lo_ && l.r_hi_ == r.r_hi_ && l.blue_ == r.blue_;
  }

 private:
  struct Entry {
    bool red;
    bool had_red;
    Rank lo, hi;  // previous red bounds, or inserted blue y
  };
  bool has_red_ = false;
  Rank r_lo_ = 0;
  Rank r_hi_ = 0;
  std::set<Rank> blue_;
  std::vector<Entry> log_;
};

// ---------------------------------------------------------------------------

/// Bottom-right quadrant {x >= X, y <= Y}. Blue points kept as a staircase of
/// non-dominated corners (x and y both increasing); corner b forbids its closed
/// top-left quadrant, and a whole halfplane once it lies right of X or below Y.
class QuadrantRegions {
 public:
  static constexpr bool kPrimaryIsX = true;

  QuadrantRegions() = default;
  explicit QuadrantRegions(const RankedGeometry&) {}

  bool update(RPoint p, Color c);
  Location locate(RPoint p) const;
  void report(const RangeIndex& index, RPoint last, Color c, ForcedHits& out) const;

  bool has_red() const { return has_red_; }
  RPoint apex() const { return {x_, y_}; }
  std::vector<RPoint> staircase() const;
  /// min y of corners with x >= X (kPosInf when none): blue halfplane y >= that.
  Rank blue_top() const;
  /// max x of corners with y <= Y (kNegInf when none): blue halfplane x <= that.
  Rank blue_left() const;

  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t mark);

  friend bool operator==(const QuadrantRegions& l, const QuadrantRegions& r) {
    return l.has_red_ == r.has_red_ && l.x_ == r.x_ && l.y_ == r.y_ && l.by_x_ == r.by_x_;
  }

 private:
  enum class Op { Apex, Insert, Erase };
  struct Entry {
    Op op;
    bool had_red;
    Rank a, b;
  };
  bool forbidden(Rank x, Rank y) const;
  void erase_corner(Rank x, Rank y);

  bool has_red_ = false;
  Rank x_ = 0;
  Rank y_ = 0;
  std::map<Rank, Rank> by_x_;
  std::map<Rank, Rank> by_y_;
  std::vector<Entry> log_;
};

// ---------------------------------------------------------------------------

/// 3-rectangle open downward {l <= x <= r, y <= t}. Gray splits into A (left),
/// B (top-left), C (top), D (top-right) and E (right).
class ThreeRectRegions {
 public:
  static constexpr bool kPrimaryIsX = true;

  ThreeRectRegions() = default;
  explicit ThreeRectRegions(const RankedGeometry& g) : blue_(g.x_extent) {}
  explicit ThreeRectRegions(Rank x_extent) : blue_(x_extent) {}

  bool update(RPoint p, Color c);
  Location locate(RPoint p) const;
  void report(const RangeIndex& index, RPoint last, Color c, ForcedHits& out) const;

  bool has_red() const { return has_red_; }
  Rank left() const { return l_; }
  Rank right() const { return r_; }
  Rank top() const { return t_; }
  /// Blue bounds of the A, C and E intervals (x <= a, y >= c, x >= e).
  Rank a_bound() const;
  Rank c_bound() const;
  Rank e_bound() const;
  /// Non-dominated blue corners over B (x, y increasing) and D (x increasing, y decreasing).
  std::vector<RPoint> staircase_b() const;
  std::vector<RPoint> staircase_d() const;

  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t mark);

  friend bool operator==(const ThreeRectRegions& l, const ThreeRectRegions& r);

 private:
  struct Entry {
    bool red;
    bool had_red;
    Rank l, r, t;  // previous red bounds, or blue x in l
  };
  bool has_red_ = false;
  Rank l_ = 0;
  Rank r_ = 0;
  Rank t_ = 0;
  MinTree blue_;
  std::vector<Entry> log_;
};

}  // namespace stabber
