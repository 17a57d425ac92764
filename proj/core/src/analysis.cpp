#include "bcl/analysis.hpp"

#include <algorithm>
#include <map>

#include "bcl/union_find.hpp"

namespace bcl {

namespace {

void check_bi_equivalence(const ColoredBiclique& cb) {
  for (Color c = 1; c <= cb.r; ++c)
    if (!is_bi_equivalence(cb, c).ok) throw PreconditionError("not bi-equivalence");
}

}  // namespace

std::vector<Component> components(const ColoredBiclique& cb, Color c, bool include_isolated) {
  if (c < 1 || c > cb.r) throw InputError("color out of range");
  UnionFind uf(cb.vertex_count());
  for (int i = 0; i < cb.m; ++i)
    for (int j = 0; j < cb.n; ++j)
      if (cb.at(i, j) == c) uf.unite(i, cb.m + j);

  // Global-id order falls out of scanning roots in ascending vertex order.
  std::vector<int> slot(cb.vertex_count(), -1);
  std::vector<Component> out;
  for (int v = 0; v < cb.vertex_count(); ++v) {
    int root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.push_back(Component{c, {}, {}});
    }
    Component& comp = out[slot[root]];
    if (v < cb.m)
      comp.xs.push_back(v);
    else
      comp.ys.push_back(v - cb.m);
  }
  if (!include_isolated)
    std::erase_if(out, [](const Component& comp) { return comp.trivial(); });
  return out;
}

int width(const ColoredBiclique& cb, Color c, bool include_isolated) {
  return static_cast<int>(components(cb, c, include_isolated).size());
}

WidthReport width_report(const ColoredBiclique& cb) {
  WidthReport rep;
  rep.per_color.resize(cb.r);
  for (Color c = 1; c <= cb.r; ++c) {
    int with = width(cb, c, true);
    int without = width(cb, c, false);
    rep.per_color[c - 1].nontrivial = without;
    rep.per_color[c - 1].isolated = with - without;
  }
  return rep;
}

BiEquivalenceResult is_bi_equivalence(const ColoredBiclique& cb, Color c) {
  for (const Component& comp : components(cb, c)) {
    for (int x : comp.xs)
      for (int y : comp.ys)
        if (cb.at(x, y) != c) return {false, x, y};
  }
  return {true, -1, -1};
}

bool all_bi_equivalence(const ColoredBiclique& cb) {
  for (Color c = 1; c <= cb.r; ++c)
    if (!is_bi_equivalence(cb, c).ok) return false;
  return true;
}

SpanningResult is_spanning(const ColoredBiclique& cb) {
  for (int i = 0; i < cb.m; ++i) {
    std::vector<char> seen(cb.r + 1, 0);
    for (int j = 0; j < cb.n; ++j) seen[cb.at(i, j)] = 1;
    for (Color c = 1; c <= cb.r; ++c)
      if (!seen[c]) return {false, true, i, c};
  }
  for (int j = 0; j < cb.n; ++j) {
    std::vector<char> seen(cb.r + 1, 0);
    for (int i = 0; i < cb.m; ++i) seen[cb.at(i, j)] = 1;
    for (Color c = 1; c <= cb.r; ++c)
      if (!seen[c]) return {false, false, j, c};
  }
  return {true, false, -1, 0};
}

AntichainResult is_antichain(const ColoredBiclique& cb) {
  if (!is_spanning(cb).ok) throw PreconditionError("not spanning");
  check_bi_equivalence(cb);

  std::vector<Block> xblocks, yblocks;
  for (Color c = 1; c <= cb.r; ++c) {
    for (const Component& comp : components(cb, c)) {
      xblocks.push_back(Block{c, true, comp.xs});
      yblocks.push_back(Block{c, false, comp.ys});
    }
  }
  auto proper_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto* side : {&xblocks, &yblocks}) {
    for (size_t i = 0; i < side->size(); ++i)
      for (size_t j = 0; j < side->size(); ++j)
        if (i != j && proper_subset((*side)[i].members, (*side)[j].members))
          return {false, (*side)[i], (*side)[j]};
  }
  return {true, {}, {}};
}

std::vector<VertexPair> equivalent_pairs(const ColoredBiclique& cb) {
  check_bi_equivalence(cb);
  std::vector<VertexPair> out;
  for (int a = 0; a < cb.m; ++a)
    for (int b = a + 1; b < cb.m; ++b) {
      bool same = true;
      for (int j = 0; same && j < cb.n; ++j) same = cb.at(a, j) == cb.at(b, j);
      if (same) out.push_back({true, a, b});
    }
  for (int a = 0; a < cb.n; ++a)
    for (int b = a + 1; b < cb.n; ++b) {
      bool same = true;
      for (int i = 0; same && i < cb.m; ++i) same = cb.at(i, a) == cb.at(i, b);
      if (same) out.push_back({false, a, b});
    }
  return out;
}

Reduction reduce_equivalent(const ColoredBiclique& cb) {
  check_bi_equivalence(cb);

  // One dedupe pass per side reaches the fixpoint: merging duplicate rows
  // never changes whether two columns agree, and vice versa.
  std::vector<int> x_map(cb.m, -1), y_map(cb.n, -1);
  std::vector<int> x_rep, y_rep;
  for (int i = 0; i < cb.m; ++i) {
    for (int k : x_rep) {
      bool same = true;
      for (int j = 0; same && j < cb.n; ++j) same = cb.at(i, j) == cb.at(k, j);
      if (same) {
        x_map[i] = x_map[k];
        break;
      }
    }
    if (x_map[i] < 0) {
      x_map[i] = static_cast<int>(x_rep.size());
      x_rep.push_back(i);
    }
  }
  for (int j = 0; j < cb.n; ++j) {
    for (int k : y_rep) {
      bool same = true;
      for (int i = 0; same && i < cb.m; ++i) same = cb.at(i, j) == cb.at(i, k);
      if (same) {
        y_map[j] = y_map[k];
        break;
      }
    }
    if (y_map[j] < 0) {
      y_map[j] = static_cast<int>(y_rep.size());
      y_rep.push_back(j);
    }
  }

  ColoredBiclique red(static_cast<int>(x_rep.size()), static_cast<int>(y_rep.size()), cb.r);
  for (size_t a = 0; a < x_rep.size(); ++a)
    for (size_t b = 0; b < y_rep.size(); ++b)
      red.set(static_cast<int>(a), static_cast<int>(b), cb.at(x_rep[a], y_rep[b]));
  return {std::move(red), std::move(x_map), std::move(y_map)};
}

std::vector<SingletonEntry> singleton_blocks(const ColoredBiclique& cb) {
  std::vector<std::vector<Color>> xcolors(cb.m), ycolors(cb.n);
  for (Color c = 1; c <= cb.r; ++c) {
    for (const Component& comp : components(cb, c, true)) {
      if (comp.xs.size() == 1) xcolors[comp.xs[0]].push_back(c);
      if (comp.ys.size() == 1) ycolors[comp.ys[0]].push_back(c);
    }
  }
  std::vector<SingletonEntry> out;
  for (int i = 0; i < cb.m; ++i)
    if (!xcolors[i].empty()) out.push_back({true, i, std::move(xcolors[i])});
  for (int j = 0; j < cb.n; ++j)
    if (!ycolors[j].empty()) out.push_back({false, j, std::move(ycolors[j])});
  return out;
}

}  // namespace bcl
