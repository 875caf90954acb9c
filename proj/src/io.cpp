#include "stabber/io.hpp"

#include <algorithm>

#include "json.hpp"

namespace stabber {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Coord coord_from(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto v = j.get<std::uint64_t>();
      if (v > static_cast<std::uint64_t>(INT64_MAX)) return *Coord::parse(std::to_string(v));
    }
    return Coord(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    if (auto c = Coord::parse(j.get<std::string>())) return *c;
    parse_fail("bad rational \"" + j.get<std::string>() + "\"");
  }
  parse_fail("coordinate must be an integer or a \"p/q\" string, got " + j.dump());
}

Json coord_to(const Coord& c) {
  if (auto v = c.as_int64()) return *v;
  return c.to_string();
}

Json endpoint_to(const EndpointId& e) { return Json::array({e.seg, static_cast<int>(e.end)}); }

EndpointId endpoint_from(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned()) {
    throw Error(ErrorKind::MalformedSolution, "endpoint must be [seg, end], got " + j.dump());
  }
  const auto seg = j[0].get<std::uint64_t>();
  const auto end = j[1].get<std::uint64_t>();
  if (seg >= n || end > 1) throw Error(ErrorKind::MalformedSolution, "endpoint out of range: " + j.dump());
  return {static_cast<std::uint32_t>(seg), end == 0 ? End::A : End::B};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array()) {
    parse_fail("expected an object with a \"segments\" array");
  }
  std::vector<Segment> segs;
  for (const auto& s : doc["segments"]) {
    if (!s.is_array() || s.size() != 2) parse_fail("segment must be [[x1, y1], [x2, y2]], got " + s.dump());
    Point pts[2];
    for (int i = 0; i < 2; ++i) {
      if (!s[i].is_array() || s[i].size() != 2) parse_fail("point must be [x, y], got " + s[i].dump());
      pts[i] = {coord_from(s[i][0]), coord_from(s[i][1])};
    }
    segs.push_back({pts[0], pts[1]});
  }
  return Instance(std::move(segs));
}

std::string dump_instance(const Instance& inst) {
  Json segs = Json::array();
  for (const auto& s : inst.segments()) {
    segs.push_back(Json::array({Json::array({coord_to(s.a.x), coord_to(s.a.y)}),
                                Json::array({coord_to(s.b.x), coord_to(s.b.y)})}));
  }
  Json doc;
  doc["segments"] = std::move(segs);
  return doc.dump() + "\n";
}

Shape parse_shape(std::string_view type, std::string_view orientation) {
  std::string o(orientation);
  std::transform(o.begin(), o.end(), o.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto bad = [&] {
    throw Error(ErrorKind::BadParameter,
                "unknown orientation \"" + std::string(orientation) + "\" for shape " + std::string(type));
  };
  if (type == "rect") {
    if (!o.empty() && o != "none") bad();
    return Shape::rect();
  }
  if (type == "halfplane") {
    if (o == "up") return Shape::halfplane(HalfplaneDir::Up);
    if (o == "down") return Shape::halfplane(HalfplaneDir::Down);
    if (o == "left") return Shape::halfplane(HalfplaneDir::Left);
    if (o == "right") return Shape::halfplane(HalfplaneDir::Right);
    bad();
  }
  if (type == "strip") {
    if (o == "horizontal") return Shape::strip(Axis::Horizontal);
    if (o == "vertical") return Shape::strip(Axis::Vertical);
    bad();
  }
  if (type == "quadrant") {
    if (o == "tl") return Shape::quadrant_of(QuadrantKind::TL);
    if (o == "tr") return Shape::quadrant_of(QuadrantKind::TR);
    if (o == "bl") return Shape::quadrant_of(QuadrantKind::BL);
    if (o == "br") return Shape::quadrant_of(QuadrantKind::BR);
    bad();
  }
  if (type == "threerect" || type == "3rect") {
    if (o == "down") return Shape::three_rect(OpenSide::Down);
    if (o == "up") return Shape::three_rect(OpenSide::Up);
    if (o == "left") return Shape::three_rect(OpenSide::Left);
    if (o == "right") return Shape::three_rect(OpenSide::Right);
    bad();
  }
  throw Error(ErrorKind::BadParameter, "unknown shape \"" + std::string(type) + "\"");
}

std::string dump_solutions(const SolutionSet& set) {
  Json doc;
  doc["shape"]["type"] = set.shape.name();
  doc["shape"]["orientation"] =
      set.halfplane_axis ? (*set.halfplane_axis == Axis::Horizontal ? "horizontal" : "vertical")
                         : set.shape.orientation();
  Json list = Json::array();
  for (const auto& sol : set.solutions) {
    Json item;
    if (set.halfplane_axis) item["direction"] = sol.shape.orientation();
    item["anchors"] = Json::array();
    for (const auto& a : sol.anchors) item["anchors"].push_back(endpoint_to(a));
    item["class"] = Json::array();
    for (const auto& e : sol.cls.reds) item["class"].push_back(endpoint_to(e));
    item["trivial"] = sol.trivial;
    list.push_back(std::move(item));
  }
  doc["solutions"] = std::move(list);
  return doc.dump(2) + "\n";
}

SolutionSet parse_solutions(std::string_view text, const Instance& inst) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("shape") || !doc.contains("solutions") || !doc["solutions"].is_array()) {
    parse_fail("expected an object with \"shape\" and \"solutions\"");
  }
  const Json& sh = doc["shape"];
  if (!sh.is_object() || !sh.contains("type") || !sh["type"].is_string()) parse_fail("shape needs a \"type\"");
  const std::string type = sh["type"].get<std::string>();
  const std::string orientation = sh.contains("orientation") && sh["orientation"].is_string()
                                      ? sh["orientation"].get<std::string>()
                                      : std::string();
  SolutionSet set;
  try {
    if (type == "halfplane" && (orientation == "horizontal" || orientation == "vertical")) {
      set.halfplane_axis = orientation == "horizontal" ? Axis::Horizontal : Axis::Vertical;
      set.shape = Shape::halfplane(orientation == "horizontal" ? HalfplaneDir::Up : HalfplaneDir::Left);
    } else {
      set.shape = parse_shape(type, orientation);
    }
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  for (const auto& item : doc["solutions"]) {
    if (!item.is_object() || !item.contains("anchors") || !item.contains("class")) {
      throw Error(ErrorKind::MalformedSolution, "solution needs \"anchors\" and \"class\"");
    }
    Solution sol;
    sol.shape = set.shape;
    if (set.halfplane_axis) {
      if (!item.contains("direction") || !item["direction"].is_string()) {
        throw Error(ErrorKind::MalformedSolution, "axis halfplane solution needs a \"direction\"");
      }
      try {
        sol.shape = parse_shape("halfplane", item["direction"].get<std::string>());
      } catch (const Error& e) {
        throw Error(ErrorKind::MalformedSolution, e.what());
      }
    }
    for (const auto& a : item["anchors"]) sol.anchors.push_back(endpoint_from(a, inst.size()));
    for (const auto& e : item["class"]) sol.cls.reds.push_back(endpoint_from(e, inst.size()));
    if (!std::is_sorted(sol.cls.reds.begin(), sol.cls.reds.end())) {
      throw Error(ErrorKind::MalformedSolution, "class list is not sorted");
    }
    if (sol.anchors.size() != sol.shape.sides()) {
      throw Error(ErrorKind::MalformedSolution, "anchor count does not match the shape");
    }
    sol.trivial = item.contains("trivial") && item["trivial"].is_boolean() && item["trivial"].get<bool>();
    set.solutions.push_back(std::move(sol));
  }
  return set;
}

}  // namespace stabber
