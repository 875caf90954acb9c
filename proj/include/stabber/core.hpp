#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabber/coord.hpp"

namespace stabber {

enum class ErrorKind {
  DegenerateInput,
  PartialClassification,
  MalformedSolution,
  DoubleAssignmentConflict,
  StaleCheckpoint,
  InternalInvariantViolation,
  DuplicateValues,
  BadSize,
  ExhaustedRetries,
  BadParameter,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Point {
  Coord x;
  Coord y;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class End : std::uint8_t { A = 0, B = 1 };

struct Segment {
  Point a;
  Point b;

  const Point& at(End e) const { return e == End::A ? a : b; }
  End upper() const { return a.y > b.y ? End::A : End::B; }
  End lower() const { return a.y > b.y ? End::B : End::A; }
  End right() const { return a.x > b.x ? End::A : End::B; }
  End left() const { return a.x > b.x ? End::B : End::A; }
  bool is_vertical() const { return a.x == b.x; }
  bool is_horizontal() const { return a.y == b.y; }
};

struct EndpointId {
  std::uint32_t seg = 0;
  End end = End::A;

  /// Dense index 2*seg + end, used by the rank-space machinery.
  std::size_t index() const { return 2 * static_cast<std::size_t>(seg) + static_cast<std::size_t>(end); }
  static EndpointId from_index(std::size_t i) {
    return {static_cast<std::uint32_t>(i / 2), static_cast<End>(i % 2)};
  }
  EndpointId partner() const { return {seg, end == End::A ? End::B : End::A}; }

  friend bool operator==(const EndpointId&, const EndpointId&) = default;
  friend auto operator<=>(const EndpointId& l, const EndpointId& r) {
    return std::pair(l.seg, static_cast<int>(l.end)) <=> std::pair(r.seg, static_cast<int>(r.end));
  }
};

class Instance {
 public:
  Instance() = default;
  /// Throws BadSize when empty and DegenerateInput for zero-length segments.
  explicit Instance(std::vector<Segment> segments);

  std::size_t size() const { return segments_.size(); }
  const std::vector<Segment>& segments() const { return segments_; }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }
  const Point& point(EndpointId e) const { return segments_[e.seg].at(e.end); }

 private:
  std::vector<Segment> segments_;
};

enum class Color : std::uint8_t { None = 0, Red = 1, Blue = 2 };

inline Color opposite(Color c) {
  return c == Color::Red ? Color::Blue : (c == Color::Blue ? Color::Red : Color::None);
}

/// Partial endpoint coloring, indexed by EndpointId::index().
class Classification {
 public:
  explicit Classification(std::size_t n) : colors_(2 * n, Color::None) {}

  std::size_t segments() const { return colors_.size() / 2; }
  Color at(EndpointId e) const { return colors_[e.index()]; }
  /// Assigns e and its partner; throws DoubleAssignmentConflict when it contradicts an earlier assignment.
  void assign(EndpointId e, Color c);
  bool is_total() const;
  std::span<const Color> raw() const { return colors_; }

 private:
  std::vector<Color> colors_;
};

/// Canonical red set: exactly one endpoint per segment, sorted by (seg, end).
struct StabberClass {
  std::vector<EndpointId> reds;
  friend bool operator==(const StabberClass&, const StabberClass&) = default;
  friend auto operator<=>(const StabberClass& l, const StabberClass& r) { return l.reds <=> r.reds; }
};

StabberClass canonical_class(const Classification& c);
/// Builds a class from a per-endpoint red mask (size 2n).
StabberClass class_from_mask(std::span<const bool> red);

enum class HalfplaneDir : std::uint8_t { Up, Down, Left, Right };
enum class Axis : std::uint8_t { Horizontal, Vertical };
enum class QuadrantKind : std::uint8_t { TL, TR, BL, BR };
enum class OpenSide : std::uint8_t { Down, Up, Left, Right };

struct Shape {
  enum class Kind : std::uint8_t { Halfplane, Strip, Quadrant, ThreeRect, Rect };
  Kind kind = Kind::Rect;
  HalfplaneDir dir = HalfplaneDir::Up;
  Axis axis = Axis::Horizontal;
  QuadrantKind quadrant = QuadrantKind::BR;
  OpenSide open = OpenSide::Down;

  static Shape halfplane(HalfplaneDir d) { Shape s; s.kind = Kind::Halfplane; s.dir = d; return s; }
  static Shape strip(Axis a) { Shape s; s.kind = Kind::Strip; s.axis = a; return s; }
  static Shape quadrant_of(QuadrantKind q) { Shape s; s.kind = Kind::Quadrant; s.quadrant = q; return s; }
  static Shape three_rect(OpenSide o) { Shape s; s.kind = Kind::ThreeRect; s.open = o; return s; }
  static Shape rect() { return Shape{}; }

  bool operator==(const Shape& o) const;
  std::string name() const;
  std::string orientation() const;
  /// Number of bounded sides (anchors) of the shape.
  std::size_t sides() const;
  bool needs_x() const;
  bool needs_y() const;
};

/// Every shape of every orientation.
std::vector<Shape> all_shapes();

/// Sides in fixed anchor order: left, top, right, bottom (bounded ones only).
enum class Side : std::uint8_t { Left, Top, Right, Bottom };
std::vector<Side> bounded_sides(const Shape& shape);

struct Solution {
  Shape shape;
  std::vector<EndpointId> anchors;
  StabberClass cls;
  bool trivial = false;
};

/// Closed axis-parallel region; absent bounds are infinite.
struct Region {
  std::optional<Coord> xmin, xmax, ymin, ymax;
  bool contains(const Point& p) const;
};

/// Inclusion-wise smallest region of sol.shape whose sides pass through the anchors.
Region realize_region(const Solution& sol, const Instance& inst);

/// Anchors of the hull of the red class for the shape (one per bounded side).
std::vector<EndpointId> anchors_for(const Shape& shape, const StabberClass& cls, const Instance& inst);

/// True iff the region of sol contains exactly the endpoints in sol.cls.reds.
bool verify_solution(const Solution& sol, const Instance& inst);

struct GeneralPositionReport {
  bool ok = true;
  std::vector<EndpointId> offending;
  std::string message;
};

/// Distinct coordinates on each axis the shape depends on.
GeneralPositionReport check_general_position(const Instance& inst, const Shape& shape);
/// Throws DegenerateInput on failure.
void validate_general_position(const Instance& inst, const Shape& shape);

}  // namespace stabber
