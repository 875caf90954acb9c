#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabber/io.hpp"
#include "stabber/solvers.hpp"
#include "stabber/svg.hpp"
#include "support.hpp"

using namespace stabber;
using namespace stabber::test;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::BadSize;
}

}  // namespace

TEST_CASE("instance files") {
  const std::string text = R"({"segments":[[[0,"1/2"],[3,-4]],[["-7/3",2],[5,"10"]]]})";
  const Instance inst = parse_instance(text);
  CHECK(inst.size() == 2);
  CHECK(inst[0].a.y == Coord(1, 2));
  CHECK(inst[1].a.x == Coord(-7, 3));
  CHECK(inst[1].b.y == Coord(10));
  const std::string canonical = dump_instance(inst);
  CHECK(canonical == "{\"segments\":[[[0,\"1/2\"],[3,-4]],[[\"-7/3\",2],[5,10]]]}\n");
  CHECK(dump_instance(parse_instance(canonical)) == canonical);

  const std::string huge = R"({"segments":[[[0,0],["123456789012345678901234567890",1]]]})";
  CHECK(dump_instance(parse_instance(huge)).find("\"123456789012345678901234567890\"") != std::string::npos);

  CHECK(kind_of([] { parse_instance("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_instance(R"({"segs":[]})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_instance(R"({"segments":[[[0.5,0],[1,1]]]})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_instance(R"({"segments":[[[0,0],[1]]]})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_instance(R"({"segments":[[[0,0],["1/0",1]]]})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_instance(R"({"segments":[]})"); }) == ErrorKind::BadSize);
  CHECK(kind_of([] { parse_instance(R"({"segments":[[[1,1],[1,1]]]})"); }) == ErrorKind::DegenerateInput);
}

TEST_CASE("shape words") {
  CHECK(parse_shape("3rect", "Left") == Shape::three_rect(OpenSide::Left));
  CHECK(parse_shape("threerect", "down") == Shape::three_rect(OpenSide::Down));
  CHECK(parse_shape("rect", "") == Shape::rect());
  CHECK(parse_shape("rect", "none") == Shape::rect());
  CHECK(parse_shape("quadrant", "tl") == Shape::quadrant_of(QuadrantKind::TL));
  for (const Shape& s : all_shapes()) CHECK(parse_shape(s.name(), s.orientation()) == s);
  CHECK(kind_of([] { parse_shape("strip", "diagonal"); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { parse_shape("circle", ""); }) == ErrorKind::BadParameter);
}

TEST_CASE("solution files") {
  std::uint64_t seed = 1;
  while (solve_rect(random_instance(seed, 6)).size() < 3) ++seed;
  const Instance inst = random_instance(seed, 6);
  const auto sols = solve_rect(inst);
  REQUIRE_FALSE(sols.empty());
  const SolutionSet set{Shape::rect(), std::nullopt, sols};
  const std::string text = dump_solutions(set);
  CHECK(text.find("\"shape\"") < text.find("\"solutions\""));
  CHECK(text.find("\"anchors\"") < text.find("\"class\""));
  CHECK(text.find("\"class\"") < text.find("\"trivial\""));
  const SolutionSet back = parse_solutions(text, inst);
  CHECK(back.shape == Shape::rect());
  REQUIRE(back.solutions.size() == sols.size());
  for (std::size_t i = 0; i < sols.size(); ++i) {
    CHECK(back.solutions[i].cls == sols[i].cls);
    CHECK(back.solutions[i].anchors == sols[i].anchors);
    CHECK(back.solutions[i].trivial == sols[i].trivial);
  }
  CHECK(dump_solutions(back) == text);

  const SolutionSet axis{Shape::halfplane(HalfplaneDir::Up), Axis::Horizontal,
                         solve_halfplane_axis(I1(), Axis::Horizontal)};
  const std::string ax = dump_solutions(axis);
  CHECK(count(ax, "\"direction\"") == 2);
  const SolutionSet ax_back = parse_solutions(ax, I1());
  REQUIRE(ax_back.solutions.size() == 2);
  CHECK(ax_back.solutions[1].shape == Shape::halfplane(HalfplaneDir::Down));

  const std::string bad_seg = R"({"shape":{"type":"strip","orientation":"horizontal"},
    "solutions":[{"anchors":[[0,0],[9,0]],"class":[[0,0],[1,1]],"trivial":false}]})";
  CHECK(kind_of([&] { parse_solutions(bad_seg, I3()); }) == ErrorKind::MalformedSolution);
  const std::string unsorted = R"({"shape":{"type":"strip","orientation":"horizontal"},
    "solutions":[{"anchors":[[0,0],[1,1]],"class":[[1,1],[0,0]],"trivial":false}]})";
  CHECK(kind_of([&] { parse_solutions(unsorted, I3()); }) == ErrorKind::MalformedSolution);
  CHECK(kind_of([&] { parse_solutions(R"({"solutions":[]})", I3()); }) == ErrorKind::Parse);
}

TEST_CASE("svg rendering") {
  const auto strip = solve_strip(I3(), Axis::Horizontal);
  const std::string svg = render_svg(I3(), strip);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<line") == 2);
  CHECK(count(svg, "class=\"region\"") == 1);
  CHECK(count(svg, "<circle") == 4);
  CHECK(count(svg, "fill=\"white\"") == 2);
  CHECK(svg.find("</svg>") != std::string::npos);

  const std::string bare = render_svg(I3(), {});
  CHECK(count(bare, "<line") == 2);
  CHECK(count(bare, "<circle") == 0);
  CHECK(count(bare, "<rect") == 0);

  // The instance spans x in [0, 5], y in [0, 3]; the BR quadrant is cut at the grown box.
  const Instance q = make({{0, 3, 5, 0}, {1, 2, 4, 1}});
  const auto quads = solve_quadrant(q, QuadrantKind::BR);
  REQUIRE_FALSE(quads.empty());
  const std::string qsvg = render_svg(q, {quads.front()});
  CHECK(qsvg.find("viewBox=\"-0.5000 -3.3000 6.0000 3.6000\"") != std::string::npos);
  CHECK(qsvg.find("y=\"-0.3000\"") != std::string::npos);
}
