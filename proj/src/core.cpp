#include "stabber/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stabber {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::PartialClassification: return "PartialClassification";
    case ErrorKind::MalformedSolution: return "MalformedSolution";
    case ErrorKind::DoubleAssignmentConflict: return "DoubleAssignmentConflict";
    case ErrorKind::StaleCheckpoint: return "StaleCheckpoint";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::DuplicateValues: return "DuplicateValues";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::ExhaustedRetries: return "ExhaustedRetries";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Parse: return "Parse";
  }
  return "?";
}

Instance::Instance(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw Error(ErrorKind::BadSize, "instance must contain at least one segment");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].a == segments_[i].b) {
      throw Error(ErrorKind::DegenerateInput, "segment " + std::to_string(i) + " has zero length");
    }
  }
}

void Classification::assign(EndpointId e, Color c) {
  if (c == Color::None) return;
  Color& self = colors_[e.index()];
  Color& other = colors_[e.partner().index()];
  if ((self != Color::None && self != c) || (other != Color::None && other != opposite(c))) {
    throw Error(ErrorKind::DoubleAssignmentConflict,
                "conflicting colors for segment " + std::to_string(e.seg));
  }
  self = c;
  other = opposite(c);
}

bool Classification::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == Color::None; });
}

StabberClass canonical_class(const Classification& c) {
  StabberClass out;
  out.reds.reserve(c.segments());
  for (std::uint32_t s = 0; s < c.segments(); ++s) {
    const Color a = c.at({s, End::A});
    const Color b = c.at({s, End::B});
    if (a == Color::None || b == Color::None) {
      throw Error(ErrorKind::PartialClassification, "segment " + std::to_string(s) + " is unassigned");
    }
    out.reds.push_back({s, a == Color::Red ? End::A : End::B});
  }
  return out;
}

StabberClass class_from_mask(std::span<const bool> red) {
  StabberClass out;
  out.reds.reserve(red.size() / 2);
  for (std::size_t i = 0; i < red.size(); ++i) {
    if (red[i]) out.reds.push_back(EndpointId::from_index(i));
  }
  return out;
}

bool Shape::operator==(const Shape& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Halfplane: return dir == o.dir;
    case Kind::Strip: return axis == o.axis;
    case Kind::Quadrant: return quadrant == o.quadrant;
    case Kind::ThreeRect: return open == o.open;
    case Kind::Rect: return true;
  }
  return false;
}

std::string Shape::name() const {
  switch (kind) {
    case Kind::Halfplane: return "halfplane";
    case Kind::Strip: return "strip";
    case Kind::Quadrant: return "quadrant";
    case Kind::ThreeRect: return "threerect";
    case Kind::Rect: return "rect";
  }
  return "?";
}

std::string Shape::orientation() const {
  switch (kind) {
    case Kind::Halfplane: {
      constexpr const char* names[] = {"up", "down", "left", "right"};
      return names[static_cast<int>(dir)];
    }
    case Kind::Strip: return axis == Axis::Horizontal ? "horizontal" : "vertical";
    case Kind::Quadrant: {
      constexpr const char* names[] = {"tl", "tr", "bl", "br"};
      return names[static_cast<int>(quadrant)];
    }
    case Kind::ThreeRect: {
      constexpr const char* names[] = {"down", "up", "left", "right"};
      return names[static_cast<int>(open)];
    }
    case Kind::Rect: return "none";
  }
  return "?";
}

std::vector<Side> bounded_sides(const Shape& shape) {
  using K = Shape::Kind;
  switch (shape.kind) {
    case K::Halfplane:
      switch (shape.dir) {
        case HalfplaneDir::Up: return {Side::Bottom};
        case HalfplaneDir::Down: return {Side::Top};
        case HalfplaneDir::Left: return {Side::Right};
        case HalfplaneDir::Right: return {Side::Left};
      }
      break;
    case K::Strip:
      if (shape.axis == Axis::Horizontal) return {Side::Top, Side::Bottom};
      return {Side::Left, Side::Right};
    case K::Quadrant:
      switch (shape.quadrant) {
        case QuadrantKind::TL: return {Side::Right, Side::Bottom};
        case QuadrantKind::TR: return {Side::Left, Side::Bottom};
        case QuadrantKind::BL: return {Side::Top, Side::Right};
        case QuadrantKind::BR: return {Side::Left, Side::Top};
      }
      break;
    case K::ThreeRect:
      switch (shape.open) {
        case OpenSide::Down: return {Side::Left, Side::Top, Side::Right};
        case OpenSide::Up: return {Side::Left, Side::Right, Side::Bottom};
        case OpenSide::Left: return {Side::Top, Side::Right, Side::Bottom};
        case OpenSide::Right: return {Side::Left, Side::Top, Side::Bottom};
      }
      break;
    case K::Rect: return {Side::Left, Side::Top, Side::Right, Side::Bottom};
  }
  return {};
}

std::size_t Shape::sides() const { return bounded_sides(*this).size(); }

bool Shape::needs_x() const {
  for (Side s : bounded_sides(*this)) {
    if (s == Side::Left || s == Side::Right) return true;
  }
  return false;
}

bool Shape::needs_y() const {
  for (Side s : bounded_sides(*this)) {
    if (s == Side::Top || s == Side::Bottom) return true;
  }
  return false;
}

std::vector<Shape> all_shapes() {
  std::vector<Shape> out;
  for (auto d : {HalfplaneDir::Up, HalfplaneDir::Down, HalfplaneDir::Left, HalfplaneDir::Right}) {
    out.push_back(Shape::halfplane(d));
  }
  out.push_back(Shape::strip(Axis::Horizontal));
  out.push_back(Shape::strip(Axis::Vertical));
  for (auto q : {QuadrantKind::TL, QuadrantKind::TR, QuadrantKind::BL, QuadrantKind::BR}) {
    out.push_back(Shape::quadrant_of(q));
  }
  for (auto o : {OpenSide::Down, OpenSide::Up, OpenSide::Left, OpenSide::Right}) {
    out.push_back(Shape::three_rect(o));
  }
  out.push_back(Shape::rect());
  return out;
}

bool Region::contains(const Point& p) const {
  if (xmin && p.x < *xmin) return false;
  if (xmax && p.x > *xmax) return false;
  if (ymin && p.y < *ymin) return false;
  if (ymax && p.y > *ymax) return false;
  return true;
}

Region realize_region(const Solution& sol, const Instance& inst) {
  const auto sides = bounded_sides(sol.shape);
  if (sol.anchors.size() != sides.size()) {
    throw Error(ErrorKind::MalformedSolution, "anchor count does not match shape " + sol.shape.name());
  }
  Region r;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const EndpointId a = sol.anchors[i];
    if (a.seg >= inst.size()) throw Error(ErrorKind::MalformedSolution, "anchor segment out of range");
    const Point& p = inst.point(a);
    switch (sides[i]) {
      case Side::Left: r.xmin = p.x; break;
      case Side::Right: r.xmax = p.x; break;
      case Side::Top: r.ymax = p.y; break;
      case Side::Bottom: r.ymin = p.y; break;
    }
  }
  return r;
}

std::vector<EndpointId> anchors_for(const Shape& shape, const StabberClass& cls, const Instance& inst) {
  if (cls.reds.empty()) throw Error(ErrorKind::MalformedSolution, "empty class");
  std::vector<EndpointId> out;
  for (Side side : bounded_sides(shape)) {
    EndpointId best = cls.reds.front();
    for (const EndpointId& e : cls.reds) {
      const Point& p = inst.point(e);
      const Point& q = inst.point(best);
      const bool better = (side == Side::Left && p.x < q.x) || (side == Side::Right && p.x > q.x) ||
                          (side == Side::Top && p.y > q.y) || (side == Side::Bottom && p.y < q.y);
      if (better) best = e;
    }
    out.push_back(best);
  }
  return out;
}

bool verify_solution(const Solution& sol, const Instance& inst) {
  if (sol.cls.reds.size() != inst.size()) return false;
  for (const EndpointId& a : sol.anchors) {
    if (!std::binary_search(sol.cls.reds.begin(), sol.cls.reds.end(), a)) return false;
  }
  const Region r = realize_region(sol, inst);
  std::size_t next = 0;
  for (std::uint32_t s = 0; s < inst.size(); ++s) {
    const bool in_a = r.contains(inst[s].a);
    const bool in_b = r.contains(inst[s].b);
    if (in_a == in_b) return false;
    const EndpointId red{s, in_a ? End::A : End::B};
    if (next >= sol.cls.reds.size() || sol.cls.reds[next] != red) return false;
    ++next;
  }
  return true;
}

namespace {

void check_axis(const Instance& inst, bool use_x, GeneralPositionReport& report) {
  const std::size_t m = 2 * inst.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto coord = [&](std::size_t i) -> const Coord& {
    const Point& p = inst.point(EndpointId::from_index(i));
    return use_x ? p.x : p.y;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return coord(l) < coord(r); });
  for (std::size_t i = 1; i < m; ++i) {
    if (coord(order[i - 1]) == coord(order[i])) {
      const EndpointId a = EndpointId::from_index(order[i - 1]);
      const EndpointId b = EndpointId::from_index(order[i]);
      report.ok = false;
      report.offending = {std::min(a, b), std::max(a, b)};
      std::ostringstream os;
      os << "endpoints (" << report.offending[0].seg << "," << static_cast<int>(report.offending[0].end)
         << ") and (" << report.offending[1].seg << "," << static_cast<int>(report.offending[1].end)
         << ") share " << (use_x ? "x" : "y") << "=" << coord(order[i]);
      report.message = os.str();
      return;
    }
  }
}

}  // namespace

GeneralPositionReport check_general_position(const Instance& inst, const Shape& shape) {
  GeneralPositionReport report;
  if (inst.size() == 0) {
    report.ok = false;
    report.message = "empty instance";
    return report;
  }
  if (shape.needs_y()) check_axis(inst, false, report);
  if (report.ok && shape.needs_x()) check_axis(inst, true, report);
  return report;
}

void validate_general_position(const Instance& inst, const Shape& shape) {
  const auto report = check_general_position(inst, shape);
  if (!report.ok) throw Error(ErrorKind::DegenerateInput, report.message);
}

}  // namespace stabber
