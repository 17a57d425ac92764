#pragma once

#include "bcl/model.hpp"

namespace bcl {

// The permutation-star coloring: |X| = r-1, |Y| = r!, columns labeled by the
// (r-1)-permutations of {1..r} in lexicographic order; edge (k, pi) gets the
// color at position k of pi. Every monochromatic component is a star
// centered on the X side with (r-1)! leaves, and every class has width
// (r-1)! + (r-1) once isolated vertices are counted. Requires r >= 2.
ColoredBiclique gstar(int r);

// The crosswise doubling coloring on K_{2^{r-1}, 2^{r-1}}: two disjoint
// copies of the previous step form the diagonal blocks and the two crosswise
// bicliques form class r. Spanning, every class a bi-equivalence graph, and
// the largest class width is exactly 2^{r-1}. Requires r >= 1.
ColoredBiclique doubling(int r);

struct HamFactorParams {
  int s = 0;
  int r = 0;  // number of colors: (s-2)s
  int p = 0;  // blow-up block size: (s-1)(s-2)/2

  static HamFactorParams for_s(int s);
};

// The Hamiltonian 1-factor blow-up on K_{sp,sp}: color K_{s,s} with a red
// Hamiltonian cycle u_0 v_0 u_1 v_1 ... u_{s-1} v_{s-1}; every other edge is
// blue and extends uniquely to a 1-factor whose remaining s-1 edges are red.
// Blow every vertex up to p elements; a blue edge becomes the full K_{p,p}
// of its own color, and each red edge's K_{p,p} splits into the p cyclic
// matchings a -> a+k (mod p), assigned in ascending order to the p colors
// whose 1-factors use that red edge. Every class is a spanning
// bi-equivalence graph of width p(s-1) + 1. Requires s >= 3.
ColoredBiclique ham_factor(int s);

// The projective plane of prime order q with one point and the q+1 lines
// through it removed: an intersecting (q+1)-partite hypergraph with q^2
// edges on q^2+q points whose transversal number is exactly q. Classes are
// the removed lines minus the removed point. Throws InputError ("q must be
// prime") for composite or out-of-range q.
PartiteHypergraph truncated_plane(int q);

}  // namespace bcl
