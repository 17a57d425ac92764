#pragma once

#include <vector>

#include "bcl/model.hpp"

namespace bcl {

// Dual pair of a spanning bi-equivalence coloring: hypergraph vertices are
// the monochromatic components (class i = the components of color i, in
// canonical component order), h1 edge x lists the r components through x_i,
// h2 edge y those through y_j. Edge order follows vertex order, so repeated
// edges keep their multiplicity.
struct DualPair {
  PartiteHypergraph h1, h2;
};

// Precondition: cb spanning and every class bi-equivalence; throws
// PreconditionError otherwise.
DualPair dualize(const ColoredBiclique& cb);

// True when every two edges share a vertex.
bool is_intersecting(const PartiteHypergraph& h);

// True when the two hypergraphs share the class structure, |e1 ∩ e2| = 1 for
// every cross pair, and every vertex lies in at least one edge of each side.
// Throws InputError when the class structures differ.
bool is_one_cross_intersecting(const PartiteHypergraph& h1, const PartiteHypergraph& h2);

// Exact minimum transversal of an edge family (vertex ids are arbitrary
// nonnegative ints). Requires a nonempty family of nonempty edges.
struct Transversal {
  int size = 0;
  std::vector<int> witness;  // sorted ascending
};
Transversal transversal_number(const std::vector<std::vector<int>>& edges);

// Edge union of a dual pair, in h1-then-h2 order.
std::vector<std::vector<int>> union_edges(const DualPair& dp);

// True when every class of the pair has at most C(2(r-1), r-1) vertices.
bool quickproof_bound_check(const DualPair& dp);

}  // namespace bcl
