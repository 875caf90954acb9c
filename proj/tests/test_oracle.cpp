#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "stabber/oracle.hpp"
#include "support.hpp"

using namespace stabber;
using namespace stabber::test;

namespace {

// Every class of `sub` is realized by `super` with its extra sides at infinity.
bool sides_subset(const Shape& sub, const Shape& super) {
  const auto a = bounded_sides(sub);
  const auto b = bounded_sides(super);
  return std::all_of(a.begin(), a.end(), [&](Side s) { return std::find(b.begin(), b.end(), s) != b.end(); });
}

// Straight from the definition, independent of the mask tables: every box with
// sides on endpoint coordinates or at infinity.
std::vector<StabberClass> slow_classes(const Instance& inst, const Shape& shape) {
  std::vector<std::optional<Coord>> xs{std::nullopt}, ys{std::nullopt};
  for (const auto& s : inst.segments()) {
    for (const Point* p : {&s.a, &s.b}) {
      xs.push_back(p->x);
      ys.push_back(p->y);
    }
  }
  const auto sides = bounded_sides(shape);
  auto has = [&](Side s) { return std::find(sides.begin(), sides.end(), s) != sides.end(); };
  std::vector<std::optional<Coord>> none{std::nullopt};
  const auto& ls = has(Side::Left) ? xs : none;
  const auto& rs = has(Side::Right) ? xs : none;
  const auto& bs = has(Side::Bottom) ? ys : none;
  const auto& ts = has(Side::Top) ? ys : none;
  std::vector<StabberClass> out;
  for (const auto& l : ls) {
    for (const auto& r : rs) {
      for (const auto& b : bs) {
        for (const auto& t : ts) {
          const Region reg{l, r, b, t};
          StabberClass cls;
          bool ok = true;
          for (std::uint32_t s = 0; s < inst.size() && ok; ++s) {
            const bool a_in = reg.contains(inst[s].a);
            const bool b_in = reg.contains(inst[s].b);
            ok = a_in != b_in;
            cls.reds.push_back({s, a_in ? End::A : End::B});
          }
          if (ok) out.push_back(cls);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("oracle examples") {
  const auto s3 = oracle_classes(I3(), Shape::strip(Axis::Horizontal));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].reds == std::vector<EndpointId>{{0, End::B}, {1, End::A}});
  CHECK(oracle_classes(I2(), Shape::strip(Axis::Horizontal)).empty());
  CHECK(oracle_classes(make({{0, 0, 1, 1}}), Shape::rect()).size() == 2);
}

TEST_CASE("narrowest strip") {
  const Instance mg = gen_maxgap({Coord(7), Coord(4), Coord(1), Coord(2), Coord(8)});
  CHECK(oracle_narrowest_strip(mg, Axis::Vertical) == Coord(6));
  CHECK(oracle_narrowest_strip(I3(), Axis::Horizontal) == Coord(1));
  CHECK_FALSE(oracle_narrowest_strip(I2(), Axis::Horizontal).has_value());
}

TEST_CASE("oracle agrees with a definition-level enumeration") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance inst = random_instance(seed, 2 + seed % 5);
    for (const Shape& shape : all_shapes()) {
      CHECK(oracle_classes(inst, shape) == slow_classes(inst, shape));
    }
  }
}

TEST_CASE("degeneration chain") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance inst = random_instance(seed, 3 + seed % 5);
    const auto shapes = all_shapes();
    for (const Shape& sub : shapes) {
      const auto small = oracle_classes(inst, sub);
      for (const Shape& super : shapes) {
        if (!sides_subset(sub, super)) continue;
        const auto big = oracle_classes(inst, super);
        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      }
    }
  }
}

TEST_CASE("cap and degeneracy") {
  CHECK(oracle_cap() == 12);
  const Instance big = random_instance(3, 13);
  try {
    oracle_classes(big, Shape::rect());
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadSize);
  }
  setenv("STABBER_ORACLE_CAP", "14", 1);
  CHECK(oracle_cap() == 14);
  CHECK_NOTHROW(oracle_classes(big, Shape::strip(Axis::Horizontal)));
  setenv("STABBER_ORACLE_CAP", "99", 1);
  CHECK(oracle_cap() == 32);
  unsetenv("STABBER_ORACLE_CAP");

  const Instance shared_y = make({{0, 0, 1, 1}, {2, 1, 3, 3}});
  CHECK_THROWS_AS(oracle_classes(shared_y, Shape::strip(Axis::Horizontal)), Error);
}
