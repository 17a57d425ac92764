#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"

#include "bcl/analysis.hpp"
#include "bcl/constructions.hpp"
#include "bcl/covers.hpp"
#include "bcl/set_cover.hpp"
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

void fill_from_code(ColoredBiclique& cb, long long code) {
  for (size_t k = 0; k < cb.cells.size(); ++k) {
    cb.cells[k] = (std::uint8_t)(1 + code % cb.r);
    code /= cb.r;
  }
}

}  // namespace

TEST_CASE("min_pick solves hand instances and rejects bad input") {
  PickProblem pb;
  pb.item_count = 4;
  pb.requirements = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(min_pick(pb) == std::vector<int>{1, 2});

  pb.requirements = {{3}};
  CHECK(min_pick(pb) == std::vector<int>{3});

  pb.requirements = {};
  CHECK(min_pick(pb).empty());

  pb.requirements = {{}};
  CHECK_THROWS_WITH_AS(min_pick(pb), "empty requirement", InputError);
  pb.requirements = {{4}};
  CHECK_THROWS_AS(min_pick(pb), InputError);
  pb.requirements = {{-1}};
  CHECK_THROWS_AS(min_pick(pb), InputError);
}

TEST_CASE("min_pick is optimal on random instances") {
  std::uint64_t state = 777;
  auto next = [&](int bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (int)((state >> 33) % bound);
  };
  for (int trial = 0; trial < 200; ++trial) {
    PickProblem pb;
    pb.item_count = 3 + next(8);
    int nreq = 1 + next(10);
    for (int q = 0; q < nreq; ++q) {
      std::set<int> req;
      int sz = 1 + next(4);
      for (int t = 0; t < sz; ++t) req.insert(next(pb.item_count));
      pb.requirements.emplace_back(req.begin(), req.end());
    }
    // Oracle: minimum hitting set by iterative deepening over items.
    std::vector<std::uint64_t> sets;
    for (int it = 0; it < pb.item_count; ++it) {
      std::uint64_t mask = 0;
      for (size_t q = 0; q < pb.requirements.size(); ++q)
        if (std::count(pb.requirements[q].begin(), pb.requirements[q].end(), it))
          mask |= 1ull << q;
      sets.push_back(mask);
    }
    int want = oracle::min_set_cover(sets, (int)pb.requirements.size());
    auto got = min_pick(pb);
    CHECK((int)got.size() == want);
    for (const auto& req : pb.requirements) {
      bool hit = false;
      for (int it : got) hit = hit || std::count(req.begin(), req.end(), it) > 0;
      CHECK(hit);
    }
    CHECK(min_pick(pb) == got);
  }
}

TEST_CASE("exact cover matches a brute-force oracle on all small 2-colorings") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      long long total = 1;
      for (int k = 0; k < m * n; ++k) total *= 2;
      for (long long code = 0; code < total; ++code) {
        ColoredBiclique cb(m, n, 2);
        fill_from_code(cb, code);
        CoverCertificate cert = min_cover(cb);
        CHECK(cert.size() == oracle::min_cover_size(cb));
        CHECK(cert.optimal);
        CHECK(cert.cover.covers(cb));
        CHECK(std::string(cover_rule_name(cert.rule)) == "exact-solver");
      }
    }
}

TEST_CASE("exact cover matches the oracle on sampled 3-colorings") {
  std::uint64_t state = 42;
  auto next = [&](int bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (int)((state >> 33) % bound);
  };
  for (int trial = 0; trial < 150; ++trial) {
    ColoredBiclique cb(1 + next(3), 1 + next(3), 3);
    for (auto& cell : cb.cells) cell = (std::uint8_t)(1 + next(3));
    CoverCertificate cert = min_cover(cb);
    CHECK(cert.size() == oracle::min_cover_size(cb));
    CHECK(cert.cover.covers(cb));
  }
}

TEST_CASE("exact cover parts never repeat a vertex set") {
  CoverCertificate cert = min_cover(gstar(3));
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const Component& part : cert.cover.parts) CHECK(seen.insert({part.xs, part.ys}).second);
  CHECK(cert.size() == 4);
}

TEST_CASE("homogeneous cover number") {
  CHECK(homogeneous_cover_number(doubling(2)) == std::pair<Color, int>{1, 2});
  for (int r = 3; r <= 6; ++r) CHECK(homogeneous_cover_number(doubling(r)) == std::pair<Color, int>{r, 2});
  CHECK(homogeneous_cover_number(ham_factor(3)) == std::pair<Color, int>{1, 3});
  CHECK_THROWS_WITH_AS(homogeneous_cover_number(gstar(3)), "no spanning color", PreconditionError);
}

TEST_CASE("double star cover from an edge") {
  CoverCertificate cert = double_star_cover(gstar(3), 0, 0);
  REQUIRE(cert.size() == 4);
  CHECK(std::string(cover_rule_name(cert.rule)) == "double-star");
  CHECK_FALSE(cert.optimal);
  CHECK(cert.cover.covers(gstar(3)));
  // First part is the component of the anchor edge's own color.
  CHECK(cert.cover.parts[0].color == gstar(3).at(0, 0));
  CHECK(cert.cover.parts[0].contains_x(0));
  CHECK(cert.cover.parts[0].contains_y(0));

  CHECK_THROWS_WITH_AS(double_star_cover(gstar(3), 0, 6), "vertex out of range", InputError);
  CHECK_THROWS_AS(double_star_cover(gstar(3), -1, 0), InputError);
}

TEST_CASE("double star cover is within 2r-1 on random instances") {
  std::uint64_t state = 99;
  auto next = [&](int bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (int)((state >> 33) % bound);
  };
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + next(4);
    ColoredBiclique cb(1 + next(4), 1 + next(4), r);
    for (auto& cell : cb.cells) cell = (std::uint8_t)(1 + next(r));
    int x = next(cb.m), y = next(cb.n);
    CoverCertificate cert = double_star_cover(cb, x, y);
    CHECK(cert.size() <= 2 * r - 1);
    CHECK(cert.cover.covers(cb));
  }
}

TEST_CASE("structural cover: non-biclique class") {
  ColoredBiclique cb = from_rows(2, {{1, 1}, {1, 2}});
  CoverCertificate cert = structural_cover(cb);
  CHECK(std::string(cover_rule_name(cert.rule)) == "non-biclique-reduction");
  REQUIRE(cert.size() == 2);
  CHECK(cert.cover.parts[0].color == 2);
  CHECK(cert.cover.parts[0].xs == std::vector<int>{1});
  CHECK(cert.cover.parts[0].ys == std::vector<int>{1});
  CHECK(cert.cover.parts[1].color == 1);
  CHECK(cert.cover.parts[1].xs == std::vector<int>{0, 1});
  CHECK(cert.cover.parts[1].ys == std::vector<int>{0, 1});
  CHECK(cert.cover.covers(cb));
}

TEST_CASE("structural cover: non-spanning vertex") {
  ColoredBiclique cb = gstar(3);
  CoverCertificate cert = structural_cover(cb);
  CHECK(std::string(cover_rule_name(cert.rule)) == "non-spanning-reduction");
  CHECK(cert.size() <= 4);
  CHECK(cert.cover.covers(cb));
}

TEST_CASE("structural cover: antichain violation") {
  CoverCertificate cert = structural_cover(doubling(3));
  CHECK(std::string(cover_rule_name(cert.rule)) == "antichain-violation-reduction");
  REQUIRE(cert.size() == 4);
  CHECK(cert.cover.covers(doubling(3)));
  // All four parts are the pinned blocks around x_1 and y_0.
  CHECK(cert.cover.parts[0] == Component{1, {1}, {1}});
  CHECK(cert.cover.parts[1] == Component{2, {1}, {0}});
  CHECK(cert.cover.parts[2] == Component{3, {0, 1}, {2, 3}});
  CHECK(cert.cover.parts[3] == Component{3, {2, 3}, {0, 1}});
}

TEST_CASE("structural cover refuses spanning bi-equivalence antichains") {
  CHECK_THROWS_WITH_AS(structural_cover(doubling(2)), "no structural rule applies",
                       PreconditionError);
  CHECK_THROWS_AS(structural_cover(ham_factor(3)), PreconditionError);
  CHECK_THROWS_AS(structural_cover(ColoredBiclique(2, 2, 1)), PreconditionError);
}

TEST_CASE("structural cover stays within 2r-2 wherever a rule applies") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      long long total = 1;
      for (int k = 0; k < m * n; ++k) total *= 3;
      for (long long code = 0; code < total; ++code) {
        ColoredBiclique cb(m, n, 3);
        fill_from_code(cb, code);
        try {
          CoverCertificate cert = structural_cover(cb);
          CHECK(cert.size() <= 2 * cb.r - 2);
          CHECK(cert.cover.covers(cb));
        } catch (const PreconditionError&) {
          // Spanning bi-equivalence antichain: no reduction applies.
        }
      }
    }
}

TEST_CASE("plus closure and matching complement") {
  BipartiteGraph c4 = ktt_minus(2);
  CHECK(c4.p == 2);
  CHECK(c4.q == 2);
  CHECK(c4.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK_THROWS_WITH_AS(ktt_minus(1), "t must be at least 2", InputError);

  SimpleGraph closed = plus_closure(c4);
  CHECK(closed.nv == 4);
  // Side cliques {0,1} and {2,3} plus the bipartite edges shifted.
  CHECK(closed.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("equivalence cover number matches the oracle on all 4-vertex graphs") {
  for (int mask = 0; mask < 64; ++mask) {
    SimpleGraph g{4, {}};
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if (mask >> bit & 1) g.edges.push_back({u, v});
    CHECK(min_equivalence_cover(g) == oracle::min_equivalence_cover(g));
  }
}

TEST_CASE("equivalence cover number on hand instances") {
  SimpleGraph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
  CHECK(min_equivalence_cover(triangle) == 1);
  SimpleGraph path3{3, {{0, 1}, {1, 2}}};
  CHECK(min_equivalence_cover(path3) == 2);
  SimpleGraph empty{5, {}};
  CHECK(min_equivalence_cover(empty) == 0);

  // K_{3,3} minus a perfect matching, plus cliques on both sides.
  SimpleGraph k33m = plus_closure(ktt_minus(3));
  CHECK(min_equivalence_cover(k33m) == oracle::min_equivalence_cover(k33m));
  CHECK(min_equivalence_cover(k33m) == 3);

  SimpleGraph big{13, {{0, 1}}};
  CHECK_THROWS_AS(min_equivalence_cover(big), GuardError);
}

TEST_CASE("bi-equivalence cover number matches the oracle on small graphs") {
  for (int p : {2, 3})
    for (int q : {2, 3}) {
      int cells = p * q;
      for (int mask = 0; mask < (1 << cells); ++mask) {
        BipartiteGraph bg{p, q, {}};
        int bit = 0;
        for (int x = 0; x < p; ++x)
          for (int y = 0; y < q; ++y, ++bit)
            if (mask >> bit & 1) bg.edges.push_back({x, y});
        CHECK(min_bi_equivalence_cover(bg) == oracle::min_bi_equivalence_cover(bg));
      }
    }
}

TEST_CASE("bi-equivalence cover number on hand instances") {
  // C_6 as a bipartite 3+3 graph.
  BipartiteGraph c6{3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {2, 2}}};
  CHECK(min_bi_equivalence_cover(c6) == 2);

  CHECK(min_bi_equivalence_cover(ktt_minus(2)) == 1);
  CHECK(min_bi_equivalence_cover(ktt_minus(3)) == 2);

  // P_4 admits no spanning bi-equivalence layer covering its middle edge.
  BipartiteGraph p4{2, 2, {{0, 0}, {1, 0}, {1, 1}}};
  CHECK(min_bi_equivalence_cover(p4) == std::nullopt);

  BipartiteGraph empty{3, 3, {}};
  CHECK(min_bi_equivalence_cover(empty) == 0);

  BipartiteGraph big{9, 2, {{0, 0}}};
  CHECK_THROWS_AS(min_bi_equivalence_cover(big), GuardError);
}

TEST_CASE("blow-up equality for the matching-complement covers") {
  // Replacing each vertex of K_{t,t} minus a matching by a block of size 2
  // leaves the bi-equivalence cover number unchanged.
  for (int t : {2, 3}) {
    BipartiteGraph base = ktt_minus(t);
    BipartiteGraph blown{2 * t, 2 * t, {}};
    for (int x = 0; x < t; ++x)
      for (int y = 0; y < t; ++y) {
        if (x == y) continue;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) blown.edges.push_back({2 * x + a, 2 * y + b});
      }
    std::sort(blown.edges.begin(), blown.edges.end());
    blown.validate();
    auto small = min_bi_equivalence_cover(base);
    auto large = min_bi_equivalence_cover(blown);
    REQUIRE(small.has_value());
    REQUIRE(large.has_value());
    CHECK(*small == *large);
  }
}
