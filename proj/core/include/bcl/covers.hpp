#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bcl/model.hpp"

namespace bcl {

enum class CoverRule {
  exact_solver,
  double_star,
  non_biclique_reduction,
  non_spanning_reduction,
  antichain_violation_reduction,
};
const char* cover_rule_name(CoverRule rule);

struct CoverCertificate {
  Cover cover;
  bool optimal = false;  // true only when certified by the exact solver
  CoverRule rule = CoverRule::exact_solver;

  int size() const { return static_cast<int>(cover.parts.size()); }
};

// Exact minimum number of monochromatic components covering all vertices.
// Candidate parts are the components of every color; vertices missing a
// color contribute singleton components in that color.
CoverCertificate min_cover(const ColoredBiclique& cb);

// (color, width) for the color whose class spans all vertices with the
// fewest components; smallest color id on ties. Throws PreconditionError
// ("no spanning color") when no class spans.
std::pair<Color, int> homogeneous_cover_number(const ColoredBiclique& cb);

// Cover from edge (x, y): the component of color(x,y) through the edge plus
// the components at x and at y in every other color present there. At most
// 2r-1 parts.
CoverCertificate double_star_cover(const ColoredBiclique& cb, int x, int y);

// Applies the first applicable structural reduction, in this order:
// a non-biclique class, a non-spanning vertex, an antichain violation. Each
// yields an explicit cover of at most 2r-2 components. When the instance is
// a spanning bi-equivalence antichain partition, throws PreconditionError
// ("no structural rule applies").
CoverCertificate structural_cover(const ColoredBiclique& cb);

// The bipartite graph plus complete graphs on each side.
SimpleGraph plus_closure(const BipartiteGraph& bg);

// K_{t,t} minus the perfect matching (i, i). Requires t >= 2.
BipartiteGraph ktt_minus(int t);

// Exact minimum number of spanning equivalence graphs (vertex partitions
// into cliques of g) covering E(g). Guarded exact search.
int min_equivalence_cover(const SimpleGraph& g, int guard = 12);

// Exact minimum number of spanning bi-equivalence graphs covering E(bg).
// Every layer must cover each positive-degree vertex by a biclique block;
// degree-0 vertices sit in singleton blocks. Some graphs admit no spanning
// layer around some edge at all; those return nullopt. Guard is per side.
std::optional<int> min_bi_equivalence_cover(const BipartiteGraph& bg, int guard = 8);

}  // namespace bcl
