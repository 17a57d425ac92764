#pragma once

#include <functional>
#include <optional>
#include <string>

#include "bcl/model.hpp"

namespace bcl {

// Exhaustive enumeration of r-colorings of K_{m,n} in row-major
// lexicographic order, optionally filtered. canonical keeps only matrices
// that are lexicographically least within their orbit under row
// permutations, column permutations, and color relabeling. Guarded to
// r <= 3 and m*n <= 16 unless override_guard is set or BCL_GUARD_OVERRIDE=1
// is in the environment.
struct EnumSpec {
  int r = 1, m = 1, n = 1;
  bool require_bi_equivalence = false;
  bool require_spanning = false;
  bool require_antichain = false;  // implies the two filters above
  bool require_reduced = false;    // implies bi-equivalence
  bool canonical = false;
  bool override_guard = false;
};

// Calls fn for each emitted coloring; fn returns false to stop early.
void enumerate_partitions(const EnumSpec& spec, const std::function<bool(const ColoredBiclique&)>& fn);

// First enumerated coloring whose exact minimum cover exceeds bound, if any.
std::optional<ColoredBiclique> verify_cover_conjecture(const EnumSpec& spec, int bound);

struct ClaimResult {
  std::string claim;
  std::string space;           // human-readable description of the swept space
  long long raw_count = 0;     // colorings visited
  long long checked_count = 0; // instances that passed the filters
  bool exhaustive = true;
  bool pass = false;
  std::optional<ColoredBiclique> witness;
  std::string detail;
};

// Every 2-class bi-equivalence partition on K_{m,n}, m <= max_m, n <= max_n,
// has at most 2 nontrivial components per class.
ClaimResult verify_prop_two_class(int max_m, int max_n);

// In every 3-class bi-equivalence partition, a class with more than 3
// nontrivial components forces another class that spans all vertices with
// exactly 2 components.
ClaimResult verify_prop_three_class(int max_m, int max_n);

// Every spanning bi-equivalence partition into r classes has a class of
// width at most r. r in {2, 3}.
ClaimResult verify_min_width(int r, int max_m, int max_n);

// min_cover <= bound over every r-coloring of K_{m,n} with m <= max_m,
// n <= max_n. threads > 1 splits each shape's index space; the least
// counterexample still wins deterministically.
ClaimResult verify_cover_bound(int r, int max_m, int max_n, int bound, int threads = 1);

// Reducedness bounds at r = 2, checked exhaustively: a 2-class
// bi-equivalence partition with no two X-vertices equivalent has m <= 2, and
// a fully reduced one has max(m, n) <= 2. Also checks that gstar(r) is
// reduced with |Y| = r! for r <= 5.
ClaimResult verify_reduced_bounds(int max_m, int max_n);

// Sampled width checks on constructed and enumerated antichain fixtures:
// some class width is at most r for r <= 3, at most 4 for r = 4, at most 8
// for r = 5. Explicitly marked sampled, not exhaustive.
ClaimResult verify_width_sampled();

// Up to `limit` canonically-first spanning bi-equivalence instances, shapes
// swept in (r, m, n) order with r <= max_r, m <= max_m, n <= max_n.
// antichain_only additionally filters to antichain partitions.
std::vector<ColoredBiclique> spanning_bieq_fixtures(int limit, int max_r, int max_m, int max_n,
                                                    bool antichain_only = false);

}  // namespace bcl
