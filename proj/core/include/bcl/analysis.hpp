#pragma once

#include <vector>

#include "bcl/model.hpp"

namespace bcl {

// Connected components of the color-c subgraph, ordered by smallest global
// vertex id. Vertices with no c-edge are omitted unless include_isolated is
// set, in which case each appears as a single-sided singleton component.
std::vector<Component> components(const ColoredBiclique& cb, Color c, bool include_isolated = false);

// Number of components of the color-c subgraph under the same flag.
int width(const ColoredBiclique& cb, Color c, bool include_isolated = false);

struct WidthReport {
  struct PerColor {
    int nontrivial = 0;
    int isolated = 0;
    int with_isolated() const { return nontrivial + isolated; }
  };
  std::vector<PerColor> per_color;  // index c-1
};
WidthReport width_report(const ColoredBiclique& cb);

// True when every component of the color-c subgraph is a complete bipartite
// graph in color c. On failure, (x, y) is the first same-component pair whose
// edge has a different color.
struct BiEquivalenceResult {
  bool ok = false;
  int x = -1, y = -1;
};
BiEquivalenceResult is_bi_equivalence(const ColoredBiclique& cb, Color c);
bool all_bi_equivalence(const ColoredBiclique& cb);

// True when every vertex is incident to every color. On failure reports the
// first vertex (X side scanned before Y) and its smallest missing color.
struct SpanningResult {
  bool ok = false;
  bool x_side = false;
  int vertex = -1;
  Color missing = 0;
};
SpanningResult is_spanning(const ColoredBiclique& cb);

// A block: one side of a monochromatic component.
struct Block {
  Color color = 0;
  bool x_side = false;
  std::vector<int> members;  // sorted ascending

  bool operator==(const Block&) const = default;
};

// True when no block properly contains a block of the same side (across any
// pair of colors). Precondition: spanning with every class a bi-equivalence
// graph; violations throw PreconditionError rather than returning false.
struct AntichainResult {
  bool ok = false;
  Block inner, outer;  // witness: inner is a proper subset of outer
};
AntichainResult is_antichain(const ColoredBiclique& cb);

// Same-side vertex pairs with identical color rows/columns, equivalently in
// the same block of every color. Precondition: every class bi-equivalence.
struct VertexPair {
  bool x_side = false;
  int a = -1, b = -1;  // a < b

  bool operator==(const VertexPair&) const = default;
};
std::vector<VertexPair> equivalent_pairs(const ColoredBiclique& cb);

// Merge equivalent vertices until none remain. x_map/y_map send original
// indices to reduced ones. Idempotent, and min_cover is invariant under it.
struct Reduction {
  ColoredBiclique reduced;
  std::vector<int> x_map, y_map;
};
Reduction reduce_equivalent(const ColoredBiclique& cb);

// For each vertex, the colors in which its block is exactly {v}. Vertices
// with no singleton colors are omitted. Precondition: every class
// bi-equivalence.
struct SingletonEntry {
  bool x_side = false;
  int vertex = -1;
  std::vector<Color> colors;  // ascending

  bool operator==(const SingletonEntry&) const = default;
};
std::vector<SingletonEntry> singleton_blocks(const ColoredBiclique& cb);

}  // namespace bcl
