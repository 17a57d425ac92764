#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Caller handed us a bad document or bad argument values.
struct InputError : Error {
  using Error::Error;
};
// Instance exceeds a solver/enumeration guard limit.
struct GuardError : Error {
  using Error::Error;
};
// An operation's precondition does not hold for this instance.
struct PreconditionError : Error {
  using Error::Error;
};

using Color = int;  // colors are 1-based: 1..r

// A complete r-edge-coloring of the biclique K_{m,n}. Rows are X-side
// vertices x_0..x_{m-1}, columns are Y-side vertices y_0..y_{n-1}; the entry
// at (i,j) is the color of edge x_i y_j. Global vertex ids put the X side
// first: x_i has id i, y_j has id m+j.
struct ColoredBiclique {
  int m = 0, n = 0, r = 0;
  std::vector<std::uint8_t> cells;  // row-major, entries in 1..r

  ColoredBiclique() = default;
  ColoredBiclique(int m_, int n_, int r_);

  Color at(int i, int j) const { return cells[static_cast<size_t>(i) * n + j]; }
  void set(int i, int j, Color c) { cells[static_cast<size_t>(i) * n + j] = static_cast<std::uint8_t>(c); }
  int vertex_count() const { return m + n; }

  // Throws InputError unless dimensions are positive, r fits, and every cell
  // lies in 1..r.
  void validate() const;

  bool operator==(const ColoredBiclique&) const = default;
};

// One monochromatic connected component. Nontrivial components have both
// sides nonempty; an isolated vertex appears as a single-sided component.
struct Component {
  Color color = 0;
  std::vector<int> xs, ys;  // sorted ascending, side-local indices

  bool trivial() const { return xs.empty() || ys.empty(); }
  bool contains_x(int x) const;
  bool contains_y(int y) const;
  // Smallest global vertex id, used as the canonical ordering key.
  int min_global_id(int m) const;

  bool operator==(const Component&) const = default;
};

struct Cover {
  std::vector<Component> parts;

  // True when every vertex of cb lies in some part.
  bool covers(const ColoredBiclique& cb) const;
};

struct SimpleGraph {
  int nv = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

  void validate() const;
};

struct BipartiteGraph {
  int p = 0, q = 0;                        // left / right side sizes
  std::vector<std::pair<int, int>> edges;  // (left, right), sorted, unique

  void validate() const;
};

// An r-partite hypergraph: disjoint vertex classes and edges meeting every
// class exactly once.
struct PartiteHypergraph {
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> edges;

  void validate() const;
  int vertex_count() const;
};

// Two edge families over one shared class structure; the document form of a
// dual pair, also accepted by the transversal solver as a union.
struct DualDocument {
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> edges1, edges2;
};

// Document IO. Parsing accepts any JSON with the required fields; the
// serializers emit one canonical byte form (fixed key order, one matrix row
// or edge per line, LF endings) so identical values round-trip to identical
// bytes.
ColoredBiclique parse_coloring(const std::string& text);
std::string serialize_coloring(const ColoredBiclique& cb);
PartiteHypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const PartiteHypergraph& h);
DualDocument parse_dual_document(const std::string& text);
std::string serialize_dual_document(const DualDocument& d);

}  // namespace bcl
