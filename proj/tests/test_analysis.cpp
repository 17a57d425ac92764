#include <algorithm>
#include <set>

#include "doctest.h"

#include "bcl/analysis.hpp"
#include "bcl/constructions.hpp"
#include "bcl/covers.hpp"
#include "bcl/search.hpp"
#include "oracles.hpp"

using namespace bcl;

namespace {

ColoredBiclique from_rows(int r, std::vector<std::vector<int>> rows) {
  ColoredBiclique cb((int)rows.size(), (int)rows[0].size(), r);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) cb.set((int)i, (int)j, rows[i][j]);
  cb.validate();
  return cb;
}

// Linear congruential stream, fixed seed, for reproducible random instances.
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  int next(int bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (int)((state >> 33) % bound);
  }
};

ColoredBiclique random_cb(Rng& rng, int max_side, int max_r) {
  int m = 1 + rng.next(max_side);
  int n = 1 + rng.next(max_side);
  int r = 1 + rng.next(max_r);
  ColoredBiclique cb(m, n, r);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) cb.set(i, j, 1 + rng.next(r));
  return cb;
}

}  // namespace

TEST_CASE("components match a BFS oracle on random instances") {
  Rng rng;
  for (int trial = 0; trial < 300; ++trial) {
    ColoredBiclique cb = random_cb(rng, 4, 3);
    for (Color c = 1; c <= cb.r; ++c) {
      for (bool iso : {false, true}) {
        auto got = components(cb, c, iso);
        auto want = oracle::components(cb, c, iso);
        REQUIRE(got.size() == want.size());
        for (size_t k = 0; k < got.size(); ++k) {
          CHECK(got[k].xs == want[k].xs);
          CHECK(got[k].ys == want[k].ys);
          CHECK(got[k].color == c);
        }
      }
    }
  }
}

TEST_CASE("components on a hand-worked instance") {
  ColoredBiclique cb = from_rows(2, {{1, 1, 2}, {2, 1, 1}});
  auto comps = components(cb, 1);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].xs == std::vector<int>{0, 1});
  CHECK(comps[0].ys == std::vector<int>{0, 1, 2});
  auto comps2 = components(cb, 2);
  REQUIRE(comps2.size() == 2);
  CHECK(comps2[0].xs == std::vector<int>{0});
  CHECK(comps2[0].ys == std::vector<int>{2});
  CHECK(comps2[1].xs == std::vector<int>{1});
  CHECK(comps2[1].ys == std::vector<int>{0});
  auto with_iso = components(cb, 2, true);
  CHECK(with_iso.size() == 3);
  CHECK(with_iso[2].trivial());
  CHECK(with_iso[2].ys == std::vector<int>{1});
}

TEST_CASE("width report splits nontrivial and isolated counts") {
  ColoredBiclique cb = gstar(3);
  WidthReport rep = width_report(cb);
  REQUIRE(rep.per_color.size() == 3);
  for (const auto& pc : rep.per_color) {
    CHECK(pc.nontrivial == 2);
    CHECK(pc.isolated == 2);
    CHECK(pc.with_isolated() == 4);
  }
  for (Color c = 1; c <= 3; ++c) {
    CHECK(width(cb, c) == 2);
    CHECK(width(cb, c, true) == 4);
  }
}

TEST_CASE("bi-equivalence detection matches the oracle") {
  Rng rng;
  for (int trial = 0; trial < 300; ++trial) {
    ColoredBiclique cb = random_cb(rng, 4, 3);
    for (Color c = 1; c <= cb.r; ++c) {
      BiEquivalenceResult res = is_bi_equivalence(cb, c);
      CHECK(res.ok == oracle::bi_equivalence(cb, c));
      if (!res.ok) {
        // The witness pair lies in one c-component but its edge is off-color.
        CHECK(cb.at(res.x, res.y) != c);
        auto comps = oracle::components(cb, c, false);
        bool together = false;
        for (const auto& comp : comps)
          together = together || (comp.contains_x(res.x) && comp.contains_y(res.y));
        CHECK(together);
      }
    }
    CHECK(all_bi_equivalence(cb) == oracle::all_bi_equivalence(cb));
  }
}

TEST_CASE("spanning detection matches the oracle and reports first witness") {
  Rng rng;
  for (int trial = 0; trial < 300; ++trial) {
    ColoredBiclique cb = random_cb(rng, 4, 3);
    CHECK(is_spanning(cb).ok == oracle::spanning(cb));
  }
  ColoredBiclique cb = from_rows(2, {{1, 2}, {1, 1}});
  SpanningResult sp = is_spanning(cb);
  CHECK_FALSE(sp.ok);
  CHECK(sp.x_side);
  CHECK(sp.vertex == 1);
  CHECK(sp.missing == 2);
}

TEST_CASE("antichain preconditions and witnesses") {
  CHECK_THROWS_WITH_AS(is_antichain(gstar(3)), "not spanning", PreconditionError);
  ColoredBiclique nb = from_rows(2, {{1, 2}, {2, 1}});
  nb.set(1, 1, 2);  // row 2: {2,2}, not spanning
  CHECK_THROWS_AS(is_antichain(nb), PreconditionError);

  CHECK(is_antichain(doubling(2)).ok);
  CHECK(is_antichain(ham_factor(3)).ok);

  AntichainResult ac = is_antichain(doubling(3));
  CHECK_FALSE(ac.ok);
  CHECK(ac.inner.x_side == ac.outer.x_side);
  CHECK(ac.inner.members == std::vector<int>{0});
  CHECK(ac.inner.color == 1);
  CHECK(ac.outer.members == std::vector<int>{0, 1});
  CHECK(ac.outer.color == 3);
  CHECK(std::includes(ac.outer.members.begin(), ac.outer.members.end(),
                      ac.inner.members.begin(), ac.inner.members.end()));
}

TEST_CASE("equivalent pairs and reduction") {
  ColoredBiclique uniform(2, 2, 1);
  auto pairs = equivalent_pairs(uniform);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].x_side);
  CHECK(pairs[0].a == 0);
  CHECK(pairs[0].b == 1);
  CHECK_FALSE(pairs[1].x_side);

  CHECK(equivalent_pairs(gstar(3)).empty());

  Reduction red = reduce_equivalent(uniform);
  CHECK(red.reduced.m == 1);
  CHECK(red.reduced.n == 1);
  CHECK(red.x_map == std::vector<int>{0, 0});
  CHECK(red.y_map == std::vector<int>{0, 0});

  CHECK_THROWS_WITH_AS(equivalent_pairs(from_rows(2, {{1, 2}, {2, 2}})), "not bi-equivalence",
                       PreconditionError);
}

TEST_CASE("reduction is idempotent, consistent, and preserves the cover number") {
  // Every 2-coloring of K_{m,n} with m, n <= 3 whose classes are all
  // bi-equivalence graphs.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      long long total = 1;
      for (int k = 0; k < m * n; ++k) total *= 2;
      for (long long code = 0; code < total; ++code) {
        ColoredBiclique cb(m, n, 2);
        long long rest = code;
        for (int k = 0; k < m * n; ++k) {
          cb.cells[k] = (std::uint8_t)(1 + rest % 2);
          rest /= 2;
        }
        if (!oracle::all_bi_equivalence(cb)) continue;
        Reduction red = reduce_equivalent(cb);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < n; ++j)
            CHECK(cb.at(i, j) == red.reduced.at(red.x_map[i], red.y_map[j]));
        CHECK(equivalent_pairs(red.reduced).empty());
        Reduction again = reduce_equivalent(red.reduced);
        CHECK(again.reduced == red.reduced);
        CHECK(min_cover(cb).size() == min_cover(red.reduced).size());
      }
    }
}

TEST_CASE("singleton blocks on the permutation-star instance") {
  auto singles = singleton_blocks(gstar(3));
  REQUIRE(singles.size() == 8);
  // Both X vertices are singleton blocks in every color.
  CHECK(singles[0].x_side);
  CHECK(singles[0].vertex == 0);
  CHECK(singles[0].colors == std::vector<Color>{1, 2, 3});
  CHECK(singles[1].vertex == 1);
  CHECK(singles[1].colors == std::vector<Color>{1, 2, 3});
  // Each Y vertex is a singleton exactly in its one missing color.
  ColoredBiclique cb = gstar(3);
  for (size_t k = 2; k < singles.size(); ++k) {
    CHECK_FALSE(singles[k].x_side);
    REQUIRE(singles[k].colors.size() == 1);
    int y = singles[k].vertex;
    for (int i = 0; i < cb.m; ++i) CHECK(cb.at(i, y) != singles[k].colors[0]);
  }
}

TEST_CASE("antichain instances have one singleton vertex set for all colors") {
  for (const ColoredBiclique& cb : spanning_bieq_fixtures(40, 3, 3, 3, true)) {
    std::set<std::pair<bool, int>> expected;
    for (const auto& entry : singleton_blocks(cb))
      expected.insert({entry.x_side, entry.vertex});
    for (Color c = 1; c <= cb.r; ++c) {
      std::set<std::pair<bool, int>> in_c;
      for (const auto& entry : singleton_blocks(cb))
        if (std::count(entry.colors.begin(), entry.colors.end(), c))
          in_c.insert({entry.x_side, entry.vertex});
      CHECK(in_c == expected);
    }
  }
}
