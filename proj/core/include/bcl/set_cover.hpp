#pragma once

#include <vector>

#include "bcl/model.hpp"

namespace bcl {

// Exact minimum-pick solver: choose the fewest items so that every
// requirement (a set of item ids) contains at least one chosen item.
// Minimum set cover and minimum hitting set both map onto this shape.
//
// Branch and bound: the initial upper bound comes from the standard greedy
// pick; branching always selects the unmet requirement with the fewest
// available items and tries its items in ascending order, banning each tried
// item for the remaining branches of that node; pruning uses the larger of a
// degree bound (unmet count over best item degree) and a greedy packing of
// item-disjoint unmet requirements. All tie-breaks are by index, so the
// result is deterministic.
struct PickProblem {
  int item_count = 0;
  std::vector<std::vector<int>> requirements;
};

// Returns the chosen item ids, sorted ascending. Throws InputError on an
// empty requirement (it can never be met).
std::vector<int> min_pick(const PickProblem& pb);

}  // namespace bcl
