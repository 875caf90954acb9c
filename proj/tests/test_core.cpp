#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabber/core.hpp"
#include "stabber/ranked.hpp"
#include "support.hpp"

using namespace stabber;
using stabber::test::make;

TEST_CASE("coord parsing and exact order") {
  CHECK(Coord::parse("3/6")->to_string() == "1/2");
  CHECK(Coord::parse("-4")->to_string() == "-4");
  CHECK_FALSE(Coord::parse("1/0").has_value());
  CHECK_FALSE(Coord::parse("0.5").has_value());
  CHECK_FALSE(Coord::parse("").has_value());
  CHECK(Coord(1, 3) + Coord(1, 3) + Coord(1, 3) == Coord(1));
  CHECK(Coord(1, 3) < Coord(334, 1000));
  CHECK(Coord(-7, 2).as_int64() == std::nullopt);
  CHECK(Coord(12).as_int64() == 12);
  auto big = Coord::parse("123456789012345678901234567890");
  REQUIRE(big);
  CHECK_FALSE(big->as_int64().has_value());
  CHECK(big->to_string() == "123456789012345678901234567890");
}

TEST_CASE("instance construction") {
  CHECK_THROWS_AS(Instance(std::vector<Segment>{}), Error);
  try {
    make({{1, 1, 1, 1}});
    FAIL("zero-length segment accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
  const Instance inst = make({{0, 5, 3, 1}});
  CHECK(inst[0].upper() == End::A);
  CHECK(inst[0].lower() == End::B);
  CHECK(inst[0].right() == End::B);
  CHECK(inst[0].left() == End::A);
}

TEST_CASE("canonical_class") {
  Classification one(1);
  one.assign({0, End::A}, Color::Red);
  CHECK(canonical_class(one).reds == std::vector<EndpointId>{{0, End::A}});

  Classification two(2);
  two.assign({1, End::B}, Color::Red);
  two.assign({0, End::A}, Color::Red);
  CHECK(canonical_class(two).reds == std::vector<EndpointId>{{0, End::A}, {1, End::B}});
  CHECK(canonical_class(two) == canonical_class(two));

  Classification partial(2);
  partial.assign({0, End::A}, Color::Red);
  try {
    canonical_class(partial);
    FAIL("partial classification accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PartialClassification);
  }

  Classification clash(1);
  clash.assign({0, End::A}, Color::Red);
  CHECK_THROWS_AS(clash.assign({0, End::B}, Color::Red), Error);
  CHECK_NOTHROW(clash.assign({0, End::B}, Color::Blue));
}

TEST_CASE("validate_general_position") {
  CHECK(check_general_position(make({{0, 0, 1, 1}, {2, 2, 3, 3}}), Shape::rect()).ok);

  const Instance shared_y = make({{0, 0, 1, 1}, {2, 1, 3, 3}});
  const auto report = check_general_position(shared_y, Shape::strip(Axis::Horizontal));
  CHECK_FALSE(report.ok);
  CHECK(report.offending.size() == 2);
  CHECK_THROWS_AS(validate_general_position(shared_y, Shape::strip(Axis::Horizontal)), Error);
  CHECK(check_general_position(shared_y, Shape::strip(Axis::Vertical)).ok);

  // Horizontal segments are fine for vertical strips.
  const Instance maxgap = gen_maxgap({Coord(7), Coord(4), Coord(1), Coord(2), Coord(8)});
  CHECK(check_general_position(maxgap, Shape::strip(Axis::Vertical)).ok);
  CHECK_FALSE(check_general_position(maxgap, Shape::strip(Axis::Horizontal)).ok);

  const Instance vertical = make({{0, 0, 0, 3}});
  CHECK_FALSE(check_general_position(vertical, Shape::rect()).ok);
  CHECK(check_general_position(vertical, Shape::halfplane(HalfplaneDir::Up)).ok);
}

TEST_CASE("shape bookkeeping") {
  CHECK(all_shapes().size() == 15);
  CHECK(Shape::halfplane(HalfplaneDir::Up).sides() == 1);
  CHECK(Shape::strip(Axis::Vertical).sides() == 2);
  CHECK(Shape::quadrant_of(QuadrantKind::TL).sides() == 2);
  CHECK(Shape::three_rect(OpenSide::Left).sides() == 3);
  CHECK(Shape::rect().sides() == 4);
  CHECK(bounded_sides(Shape::rect()) == std::vector<Side>{Side::Left, Side::Top, Side::Right, Side::Bottom});
  CHECK(bounded_sides(Shape::three_rect(OpenSide::Down)) == std::vector<Side>{Side::Left, Side::Top, Side::Right});
  CHECK(bounded_sides(Shape::quadrant_of(QuadrantKind::BR)) == std::vector<Side>{Side::Left, Side::Top});
}

TEST_CASE("realize_region") {
  // Horizontal strip anchored at y = 1 and y = 2.
  const Instance inst = stabber::test::I3();
  Solution strip{Shape::strip(Axis::Horizontal), {{1, End::A}, {0, End::B}}, {}, false};
  strip.cls.reds = {{0, End::B}, {1, End::A}};
  const Region r = realize_region(strip, inst);
  CHECK(r.contains({Coord(100), Coord(1)}));
  CHECK(r.contains({Coord(-100), Coord(3, 2)}));
  CHECK(r.contains({Coord(0), Coord(2)}));
  CHECK_FALSE(r.contains({Coord(0), Coord(201, 100)}));
  CHECK(verify_solution(strip, inst));
  CHECK(anchors_for(strip.shape, strip.cls, inst) == strip.anchors);

  // Bottom-right quadrant with apex (2, 0): left anchor at x = 2, top anchor at y = 0.
  const Instance q = make({{2, -5, -1, 4}, {6, 0, -3, 7}});
  Solution quad{Shape::quadrant_of(QuadrantKind::BR), {{0, End::A}, {1, End::A}}, {}, false};
  quad.cls.reds = {{0, End::A}, {1, End::A}};
  const Region qr = realize_region(quad, q);
  CHECK(qr.contains({Coord(2), Coord(0)}));
  CHECK(qr.contains({Coord(9), Coord(-9)}));
  CHECK_FALSE(qr.contains({Coord(1), Coord(0)}));
  CHECK_FALSE(qr.contains({Coord(3), Coord(1, 10)}));
  CHECK(verify_solution(quad, q));

  // Rectangle through four anchors.
  const Instance box = make({{0, 2, -5, 9}, {1, 4, 8, 11}, {3, 0, 5, -3}, {2, 1, 4, -6}});
  Solution rect{Shape::rect(), {{0, End::A}, {1, End::A}, {2, End::A}, {2, End::A}}, {}, false};
  rect.cls.reds = {{0, End::A}, {1, End::A}, {2, End::A}, {3, End::A}};
  const Region rr = realize_region(rect, box);
  CHECK(rr.contains({Coord(0), Coord(0)}));
  CHECK(rr.contains({Coord(3), Coord(4)}));
  CHECK_FALSE(rr.contains({Coord(5), Coord(2)}));
  CHECK_FALSE(rr.contains({Coord(2), Coord(-1)}));
  CHECK(verify_solution(rect, box));
  CHECK(anchors_for(Shape::rect(), rect.cls, box) == rect.anchors);

  Solution bad = rect;
  bad.anchors.pop_back();
  CHECK_THROWS_AS(realize_region(bad, box), Error);
}

TEST_CASE("rank space transforms") {
  const Instance inst = make({{0, 10, 5, -2}, {3, 1, -4, 7}});
  const RankedGeometry g = rank_instance(inst);
  CHECK(g.n == 2);
  CHECK(g.x_extent == 4);
  CHECK(g.at(0).x == 1);
  CHECK(g.at(3).x == 0);
  CHECK(g.upper(0) == 0);
  CHECK(g.left(1) == 3);
  const RankedGeometry t = transpose(g);
  CHECK(t.at(0).x == g.at(0).y);
  const RankedGeometry fx = flip_x(flip_x(g));
  CHECK(fx.pts == g.pts);
  CHECK(flip_y(g).at(0).y == g.y_extent - 1 - g.at(0).y);
}
