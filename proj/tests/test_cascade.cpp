#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "stabber/cascade.hpp"
#include "support.hpp"

using namespace stabber;
using namespace stabber::test;

namespace {

std::pair<std::size_t, std::size_t> strip_seed(const RankedGeometry& g) {
  std::size_t qb = g.lower(0), pt = g.upper(0);
  for (std::size_t s = 1; s < g.n; ++s) {
    if (g.at(g.lower(s)).y > g.at(qb).y) qb = g.lower(s);
    if (g.at(g.upper(s)).y < g.at(pt).y) pt = g.upper(s);
  }
  return {qb, pt};
}

template <class Region>
void expect_same(const Cascade<Region>& a, const Cascade<Region>& b) {
  CHECK(a.contradicted() == b.contradicted());
  if (a.contradicted()) return;
  CHECK(std::equal(a.colors().begin(), a.colors().end(), b.colors().begin(), b.colors().end()));
  CHECK(a.region() == b.region());
  for (std::size_t s = 0; s < a.geometry().n; ++s) CHECK(a.status(s) == b.status(s));
}

struct Scenario {
  std::vector<std::pair<std::size_t, Color>> seeds;
  std::vector<RPoint> virtual_red;
};

Scenario random_scenario(const RankedGeometry& g, std::mt19937_64& rng) {
  Scenario sc;
  const std::size_t k = 1 + rng() % 2;
  for (std::size_t i = 0; i < k; ++i) {
    sc.seeds.emplace_back(rng() % (2 * g.n), rng() % 3 == 0 ? Color::Blue : Color::Red);
  }
  if (rng() % 2 == 0) {
    sc.virtual_red.push_back({static_cast<Rank>(rng() % g.x_extent), static_cast<Rank>(rng() % g.y_extent)});
  }
  return sc;
}

template <class Region>
Outcome play(Cascade<Region>& c, const Scenario& sc) {
  for (const RPoint& p : sc.virtual_red) {
    if (c.seed_region(p).contradiction()) return {Outcome::Kind::Contradiction};
  }
  for (const auto& [e, col] : sc.seeds) {
    if (c.seed(e, col).contradiction()) return {Outcome::Kind::Contradiction};
  }
  return c.run();
}

bool duplicate_conflict(const Scenario& sc) {
  for (const auto& a : sc.seeds) {
    for (const auto& b : sc.seeds) {
      if (a.first == b.first && a.second != b.second) return true;
    }
  }
  return false;
}

template <class Region>
void cross_check(Canon canon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Instance inst = random_instance(seed, 2 + seed % 9);
  const RankedGeometry g = rank_instance(inst);
  const Scenario sc = random_scenario(g, rng);
  if (duplicate_conflict(sc)) return;

  Cascade<Region> fifo(g);
  const Outcome o = play(fifo, sc);
  const NaiveResult naive = naive_cascade(g, canon, sc.seeds, sc.virtual_red);
  REQUIRE(o.contradiction() == naive.contradiction);
  if (!o.contradiction()) {
    CHECK(std::equal(naive.colors.begin(), naive.colors.end(), fifo.colors().begin(), fifo.colors().end()));
    fifo.check_invariants();
    CHECK(fifo.iterations() <= g.n);
  }

  Cascade<Region> lifo(g, {}, Discipline::Lifo);
  play(lifo, sc);
  expect_same(fifo, lifo);

  if (!o.contradiction()) {
    Region replay(g);
    for (const Paint& p : fifo.paints()) REQUIRE(replay.update(p.at, p.color));
    CHECK(replay == fifo.region());
  }
}

}  // namespace

TEST_CASE("strip seeding on I3 reaches the single class") {
  const RankedGeometry g = rank_instance(I3());
  const auto [qb, pt] = strip_seed(g);
  CHECK(qb == 2);
  CHECK(pt == 1);
  Cascade<StripRegions> c(g);
  const std::pair<std::size_t, Color> seeds[] = {{qb, Color::Red}, {pt, Color::Red}};
  CHECK(c.seed(seeds).kind == Outcome::Kind::Updated);
  CHECK(c.status(0) == SegStatus::W);
  CHECK(c.status(1) == SegStatus::W);
  CHECK(c.unknown_count() == 0);
  CHECK(c.run().kind == Outcome::Kind::Quiescent);
  CHECK(c.region().r_lo() == 1);
  CHECK(c.region().r_hi() == 2);
  CHECK(c.current_class().reds == std::vector<EndpointId>{{0, End::B}, {1, End::A}});
  c.check_invariants();
}

TEST_CASE("strip seeding on I2 contradicts at the middle segment") {
  const RankedGeometry g = rank_instance(I2());
  const auto [qb, pt] = strip_seed(g);
  Cascade<StripRegions> c(g);
  const std::pair<std::size_t, Color> seeds[] = {{qb, Color::Red}, {pt, Color::Red}};
  c.seed(seeds);
  const Outcome o = c.run();
  REQUIRE(o.contradiction());
  CHECK(o.witness / 2 == 1);
  CHECK(c.run().contradiction());
}

TEST_CASE("seeding one endpoint with both colors") {
  const RankedGeometry g = rank_instance(I3());
  Cascade<StripRegions> c(g);
  const std::pair<std::size_t, Color> seeds[] = {{0, Color::Red}, {0, Color::Blue}};
  try {
    c.seed(seeds);
    FAIL("conflicting seed accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DoubleAssignmentConflict);
  }
  // Opposite colors on partners are the same assignment.
  const std::pair<std::size_t, Color> partners[] = {{0, Color::Red}, {1, Color::Blue}};
  CHECK_FALSE(c.seed(partners).contradiction());
}

TEST_CASE("quadrant apex seed moves segments touching the seed quadrant to W") {
  const Instance inst = make({{0, 9, 6, 2}, {1, 4, 8, 7}, {2, 0, 5, 10}, {3, 1, 9, 5}, {4, 6, 7, 3}});
  const RankedGeometry g = rank_instance(inst);
  Rank apex_x = kPosInf, apex_y = kNegInf;
  for (std::size_t s = 0; s < g.n; ++s) {
    apex_x = std::min(apex_x, g.at(g.right(s)).x);
    apex_y = std::max(apex_y, g.at(g.lower(s)).y);
  }
  Cascade<QuadrantRegions> c(g);
  REQUIRE_FALSE(c.seed_region({apex_x, apex_y}).contradiction());
  std::size_t touched = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    bool inside = false;
    for (std::size_t e : {2 * s, 2 * s + 1}) inside |= g.at(e).x >= apex_x && g.at(e).y <= apex_y;
    CHECK((c.status(s) == SegStatus::W) == inside);
    touched += inside;
  }
  CHECK(touched > 0);
}

TEST_CASE("cascade matches the naive fixpoint, FIFO equals LIFO, paints replay") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    cross_check<StripRegions>(Canon::Strip, seed);
    cross_check<QuadrantRegions>(Canon::Quadrant, seed);
    cross_check<ThreeRectRegions>(Canon::ThreeRect, seed);
  }
}

TEST_CASE("cascade chain classifies one segment per iteration") {
  for (std::size_t n : {3U, 5U, 9U, 20U}) {
    const RankedGeometry g = rank_instance(gen_cascade_chain(n));
    const auto [qb, pt] = strip_seed(g);
    Cascade<StripRegions> c(g);
    const std::pair<std::size_t, Color> seeds[] = {{qb, Color::Red}, {pt, Color::Red}};
    c.seed(seeds);
    CHECK(c.waiting_count() == 2);
    REQUIRE(c.run().kind == Outcome::Kind::Quiescent);
    CHECK(c.iterations() >= n - 2);
    CHECK(c.unknown_count() == 0);
    c.check_invariants();
  }
}

TEST_CASE("checkpoint and rollback") {
  const RankedGeometry g = rank_instance(gen_cascade_chain(8));
  Cascade<StripRegions> c(g);
  const auto [qb, pt] = strip_seed(g);
  const std::vector<Color> before(c.colors().begin(), c.colors().end());
  const StripRegions region_before = c.region();
  const Checkpoint cp = c.checkpoint();

  const std::pair<std::size_t, Color> seeds[] = {{qb, Color::Red}, {pt, Color::Red}};
  c.seed(seeds);
  c.run();
  std::size_t colored = 0;
  for (std::size_t s = 0; s < g.n; ++s) colored += c.status(s) == SegStatus::C;
  CHECK(colored >= 3);
  const Checkpoint late = c.checkpoint();

  c.rollback(cp);
  CHECK(std::equal(before.begin(), before.end(), c.colors().begin(), c.colors().end()));
  CHECK(c.region() == region_before);
  CHECK(c.unknown_count() == g.n);
  CHECK(c.index().size() == 2 * g.n);
  CHECK(c.paints().empty());
  c.rollback(cp);
  CHECK(c.unknown_count() == g.n);
  CHECK(c.journal_size() == cp.journal);

  // late now points past the end of the journal.
  try {
    c.rollback(late);
    FAIL("stale checkpoint accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StaleCheckpoint);
  }

  // A checkpoint overwritten by different work is detected by its serial.
  c.seed(qb, Color::Red);
  c.run();
  const Checkpoint mid = c.checkpoint();
  c.rollback(cp);
  c.seed(pt, Color::Blue);
  c.run();
  c.seed(qb ^ 1U, Color::Red);
  c.run();
  if (c.journal_size() >= mid.journal) CHECK_THROWS_AS(c.rollback(mid), Error);
  c.rollback(cp);
  CHECK(c.unknown_count() == g.n);
}

TEST_CASE("rollback restores exact state on random walks") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const RankedGeometry g = rank_instance(random_instance(seed, 3 + seed % 8));
    Cascade<ThreeRectRegions> c(g);
    c.seed(rng() % (2 * g.n), Color::Red);
    c.run();
    const Checkpoint cp = c.checkpoint();
    const std::vector<Color> colors(c.colors().begin(), c.colors().end());
    const ThreeRectRegions region = c.region();
    const bool contradicted = c.contradicted();
    const std::size_t unknown = c.unknown_count();
    const std::size_t indexed = c.index().size();
    for (int k = 0; k < 3; ++k) {
      c.seed(rng() % (2 * g.n), rng() % 2 ? Color::Red : Color::Blue);
      c.run();
    }
    c.rollback(cp);
    CHECK(std::equal(colors.begin(), colors.end(), c.colors().begin(), c.colors().end()));
    CHECK(c.region() == region);
    CHECK(c.contradicted() == contradicted);
    CHECK(c.unknown_count() == unknown);
    CHECK(c.index().size() == indexed);
    if (!c.contradicted()) c.check_invariants();
  }
}
