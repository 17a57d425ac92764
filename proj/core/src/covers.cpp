#include "bcl/covers.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "bcl/analysis.hpp"
#include "bcl/set_cover.hpp"

namespace bcl {

const char* cover_rule_name(CoverRule rule) {
  switch (rule) {
    case CoverRule::exact_solver: return "exact-solver";
    case CoverRule::double_star: return "double-star";
    case CoverRule::non_biclique_reduction: return "non-biclique-reduction";
    case CoverRule::non_spanning_reduction: return "non-spanning-reduction";
    case CoverRule::antichain_violation_reduction: return "antichain-violation-reduction";
  }
  return "unknown";
}

namespace {

Component component_at(const ColoredBiclique& cb, Color c, int global_id) {
  for (Component& comp : components(cb, c, true)) {
    bool inside = global_id < cb.m ? comp.contains_x(global_id) : comp.contains_y(global_id - cb.m);
    if (inside) return std::move(comp);
  }
  throw InputError("vertex out of range");
}

void push_unique(std::vector<Component>& parts, Component&& comp) {
  for (const Component& p : parts)
    if (p.xs == comp.xs && p.ys == comp.ys) return;
  parts.push_back(std::move(comp));
}

std::vector<Color> colors_at_row(const ColoredBiclique& cb, int i) {
  std::vector<char> seen(cb.r + 1, 0);
  for (int j = 0; j < cb.n; ++j) seen[cb.at(i, j)] = 1;
  std::vector<Color> out;
  for (Color c = 1; c <= cb.r; ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

std::vector<Color> colors_at_col(const ColoredBiclique& cb, int j) {
  std::vector<char> seen(cb.r + 1, 0);
  for (int i = 0; i < cb.m; ++i) seen[cb.at(i, j)] = 1;
  std::vector<Color> out;
  for (Color c = 1; c <= cb.r; ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

// The edge's own component, then per color the component at x and at y.
// Shared components collapse, which is what drops the count to 2r-2 when x
// and y already share a component in a color other than theirs.
std::vector<Component> double_star_parts(const ColoredBiclique& cb, int x, int y) {
  Color c0 = cb.at(x, y);
  std::vector<Component> parts;
  parts.push_back(component_at(cb, c0, x));
  auto row = colors_at_row(cb, x);
  auto col = colors_at_col(cb, y);
  for (Color d = 1; d <= cb.r; ++d) {
    if (d == c0) continue;
    if (std::binary_search(row.begin(), row.end(), d)) push_unique(parts, component_at(cb, d, x));
    if (std::binary_search(col.begin(), col.end(), d)) push_unique(parts, component_at(cb, d, cb.m + y));
  }
  return parts;
}

}  // namespace

CoverCertificate min_cover(const ColoredBiclique& cb) {
  cb.validate();
  std::vector<Component> items;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (Color c = 1; c <= cb.r; ++c)
    for (Component& comp : components(cb, c, true))
      if (seen.insert({comp.xs, comp.ys}).second) items.push_back(std::move(comp));

  PickProblem pb;
  pb.item_count = static_cast<int>(items.size());
  pb.requirements.resize(cb.vertex_count());
  for (int idx = 0; idx < pb.item_count; ++idx) {
    for (int x : items[idx].xs) pb.requirements[x].push_back(idx);
    for (int y : items[idx].ys) pb.requirements[cb.m + y].push_back(idx);
  }

  CoverCertificate cert;
  for (int idx : min_pick(pb)) cert.cover.parts.push_back(items[idx]);
  cert.optimal = true;
  cert.rule = CoverRule::exact_solver;
  return cert;
}

std::pair<Color, int> homogeneous_cover_number(const ColoredBiclique& cb) {
  cb.validate();
  Color best_color = 0;
  int best_width = 0;
  for (Color c = 1; c <= cb.r; ++c) {
    int with = width(cb, c, true);
    int without = width(cb, c, false);
    if (with != without) continue;  // isolated vertex: class does not span
    if (best_color == 0 || without < best_width) {
      best_color = c;
      best_width = without;
    }
  }
  if (best_color == 0) throw PreconditionError("no spanning color");
  return {best_color, best_width};
}

CoverCertificate double_star_cover(const ColoredBiclique& cb, int x, int y) {
  cb.validate();
  if (x < 0 || x >= cb.m || y < 0 || y >= cb.n) throw InputError("vertex out of range");
  CoverCertificate cert;
  cert.cover.parts = double_star_parts(cb, x, y);
  cert.optimal = false;
  cert.rule = CoverRule::double_star;
  return cert;
}

CoverCertificate structural_cover(const ColoredBiclique& cb) {
  cb.validate();

  // A class that is not bi-equivalence hands us an edge (x, y) whose
  // endpoints already share a component in a third color, so the double
  // star at that edge collapses to 2r-2 parts.
  for (Color c = 1; c <= cb.r; ++c) {
    BiEquivalenceResult be = is_bi_equivalence(cb, c);
    if (!be.ok) {
      CoverCertificate cert;
      cert.cover.parts = double_star_parts(cb, be.x, be.y);
      cert.optimal = false;
      cert.rule = CoverRule::non_biclique_reduction;
      return cert;
    }
  }

  // A vertex v that misses a color reaches the whole opposite side through
  // at most r-1 components; an anchor on the opposite side reaches v's side
  // through at most r, and the color of the edge (v, anchor) is shared.
  SpanningResult sp = is_spanning(cb);
  if (!sp.ok) {
    CoverCertificate cert;
    int v_global = sp.x_side ? sp.vertex : cb.m + sp.vertex;
    int a_global = sp.x_side ? cb.m : 0;  // first vertex of the opposite side
    auto v_colors = sp.x_side ? colors_at_row(cb, sp.vertex) : colors_at_col(cb, sp.vertex);
    auto a_colors = sp.x_side ? colors_at_col(cb, 0) : colors_at_row(cb, 0);
    for (Color d : v_colors) push_unique(cert.cover.parts, component_at(cb, d, v_global));
    for (Color d : a_colors) push_unique(cert.cover.parts, component_at(cb, d, a_global));
    cert.optimal = false;
    cert.rule = CoverRule::non_spanning_reduction;
    return cert;
  }

  // Antichain violation: inner block of color c1 sits properly inside an
  // outer block of color c2. Pick w in outer minus inner and z on the other
  // side of the inner component; the edge (w, z) has a third color c3, and
  // every color at z other than c1 and c3 is either shared with w or
  // redundant, so r + (r-2) parts suffice.
  AntichainResult ac = is_antichain(cb);
  if (!ac.ok) {
    Color c1 = ac.inner.color;
    int w = -1;
    for (int member : ac.outer.members)
      if (!std::binary_search(ac.inner.members.begin(), ac.inner.members.end(), member)) {
        w = member;
        break;
      }
    Component inner_comp = component_at(
        cb, c1, ac.inner.x_side ? ac.inner.members[0] : cb.m + ac.inner.members[0]);
    int z, w_global, z_global;
    Color c3;
    if (ac.inner.x_side) {
      z = inner_comp.ys.front();
      c3 = cb.at(w, z);
      w_global = w;
      z_global = cb.m + z;
    } else {
      z = inner_comp.xs.front();
      c3 = cb.at(z, w);
      w_global = cb.m + w;
      z_global = z;
    }
    CoverCertificate cert;
    for (Color d = 1; d <= cb.r; ++d) push_unique(cert.cover.parts, component_at(cb, d, w_global));
    for (Color d = 1; d <= cb.r; ++d)
      if (d != c1 && d != c3) push_unique(cert.cover.parts, component_at(cb, d, z_global));
    cert.optimal = false;
    cert.rule = CoverRule::antichain_violation_reduction;
    return cert;
  }

  throw PreconditionError("no structural rule applies");
}

SimpleGraph plus_closure(const BipartiteGraph& bg) {
  bg.validate();
  SimpleGraph g;
  g.nv = bg.p + bg.q;
  for (auto [u, v] : bg.edges) g.edges.emplace_back(u, bg.p + v);
  for (int i = 0; i < bg.p; ++i)
    for (int j = i + 1; j < bg.p; ++j) g.edges.emplace_back(i, j);
  for (int i = 0; i < bg.q; ++i)
    for (int j = i + 1; j < bg.q; ++j) g.edges.emplace_back(bg.p + i, bg.p + j);
  std::sort(g.edges.begin(), g.edges.end());
  g.validate();
  return g;
}

BipartiteGraph ktt_minus(int t) {
  if (t < 2) throw InputError("t must be at least 2");
  BipartiteGraph bg;
  bg.p = bg.q = t;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j) bg.edges.emplace_back(i, j);
  return bg;
}

namespace {

// Layered exact search shared by the two cover-number solvers. A layer is a
// partial vertex partition; the search places the first uncovered edge into
// every layer in every valid way, with the usual first-empty-layer symmetry
// break, and restores layers by snapshot.

struct CliqueLayer {
  std::vector<int> group;  // -1 = unassigned
  std::vector<std::uint64_t> gmask;
  bool used = false;
};

struct EqSearch {
  int nv;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint64_t> adj;
  std::vector<CliqueLayer> layers;

  bool covered(int e) const {
    auto [u, v] = edges[e];
    for (const CliqueLayer& L : layers)
      if (L.group[u] >= 0 && L.group[u] == L.group[v]) return true;
    return false;
  }

  bool place(CliqueLayer& L, int u, int v) {
    int gu = L.group[u], gv = L.group[v];
    if (gu < 0 && gv < 0) {
      L.group[u] = L.group[v] = static_cast<int>(L.gmask.size());
      L.gmask.push_back((1ull << u) | (1ull << v));
      L.used = true;
      return true;
    }
    if (gu >= 0 && gv < 0) {
      if ((adj[v] & L.gmask[gu]) != L.gmask[gu]) return false;
      L.group[v] = gu;
      L.gmask[gu] |= 1ull << v;
      return true;
    }
    if (gu < 0 && gv >= 0) {
      if ((adj[u] & L.gmask[gv]) != L.gmask[gv]) return false;
      L.group[u] = gv;
      L.gmask[gv] |= 1ull << u;
      return true;
    }
    if (gu == gv) return false;  // cannot happen for an uncovered edge
    std::uint64_t mb = L.gmask[gv];
    for (int w = 0; w < nv; ++w)
      if ((L.gmask[gu] >> w) & 1)
        if ((adj[w] & mb) != mb) return false;
    for (int w = 0; w < nv; ++w)
      if ((mb >> w) & 1) L.group[w] = gu;
    L.gmask[gu] |= mb;
    L.gmask[gv] = 0;
    return true;
  }

  bool dfs(int from) {
    int e = from;
    while (e < static_cast<int>(edges.size()) && covered(e)) ++e;
    if (e == static_cast<int>(edges.size())) return true;
    auto [u, v] = edges[e];
    for (CliqueLayer& L : layers) {
      bool was_empty = !L.used;
      CliqueLayer snapshot = L;
      if (place(L, u, v) && dfs(e + 1)) return true;
      L = std::move(snapshot);
      if (was_empty) break;  // later empty layers are interchangeable
    }
    return false;
  }
};

struct BiBlock {
  std::uint32_t xmask = 0, ymask = 0;
};

struct BiLayer {
  std::vector<int> gx, gy;  // -1 = unassigned
  std::vector<BiBlock> blocks;
  bool used = false;
};

struct BieqSearch {
  int p, q;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint32_t> nx, ny;  // neighborhoods
  std::vector<BiLayer> layers;

  bool x_fits(const BiLayer& L, int u, int b) const {
    return (nx[u] & L.blocks[b].ymask) == L.blocks[b].ymask;
  }
  bool y_fits(const BiLayer& L, int v, int b) const {
    return (ny[v] & L.blocks[b].xmask) == L.blocks[b].xmask;
  }

  bool covered(int e) const {
    auto [u, v] = edges[e];
    for (const BiLayer& L : layers)
      if (L.gx[u] >= 0 && L.gx[u] == L.gy[v]) return true;
    return false;
  }

  bool place(BiLayer& L, int u, int v) {
    int bu = L.gx[u], bv = L.gy[v];
    if (bu < 0 && bv < 0) {
      L.gx[u] = L.gy[v] = static_cast<int>(L.blocks.size());
      L.blocks.push_back({1u << u, 1u << v});
      L.used = true;
      return true;
    }
    if (bu >= 0 && bv < 0) {
      if (!y_fits(L, v, bu)) return false;
      L.gy[v] = bu;
      L.blocks[bu].ymask |= 1u << v;
      return true;
    }
    if (bu < 0 && bv >= 0) {
      if (!x_fits(L, u, bv)) return false;
      L.gx[u] = bv;
      L.blocks[bv].xmask |= 1u << u;
      return true;
    }
    if (bu == bv) return false;
    const BiBlock& B = L.blocks[bv];
    for (int w = 0; w < p; ++w)
      if ((L.blocks[bu].xmask >> w) & 1)
        if ((nx[w] & B.ymask) != B.ymask) return false;
    for (int w = 0; w < p; ++w)
      if ((B.xmask >> w) & 1)
        if ((nx[w] & L.blocks[bu].ymask) != L.blocks[bu].ymask) return false;
    for (int w = 0; w < p; ++w)
      if ((B.xmask >> w) & 1) L.gx[w] = bu;
    for (int w = 0; w < q; ++w)
      if ((B.ymask >> w) & 1) L.gy[w] = bu;
    L.blocks[bu].xmask |= B.xmask;
    L.blocks[bu].ymask |= B.ymask;
    L.blocks[bv] = {0, 0};
    return true;
  }

  // Makes one layer spanning: every positive-degree vertex joins a block it
  // is complete to, or opens a new block with an unassigned neighbor.
  // Exhaustive with backtracking over both choices.
  bool repair(BiLayer& L) {
    int u = -1, v = -1;
    for (int w = 0; w < p && u < 0; ++w)
      if (L.gx[w] < 0 && nx[w] != 0) u = w;
    if (u < 0)
      for (int w = 0; w < q && v < 0; ++w)
        if (L.gy[w] < 0 && ny[w] != 0) v = w;
    if (u < 0 && v < 0) return true;

    if (u >= 0) {
      for (int b = 0; b < static_cast<int>(L.blocks.size()); ++b) {
        if (L.blocks[b].xmask == 0 && L.blocks[b].ymask == 0) continue;
        if (!x_fits(L, u, b)) continue;
        L.gx[u] = b;
        L.blocks[b].xmask |= 1u << u;
        if (repair(L)) return true;
        L.blocks[b].xmask &= ~(1u << u);
        L.gx[u] = -1;
      }
      for (int w = 0; w < q; ++w) {
        if (L.gy[w] >= 0 || !((nx[u] >> w) & 1)) continue;
        int b = static_cast<int>(L.blocks.size());
        L.gx[u] = L.gy[w] = b;
        L.blocks.push_back({1u << u, 1u << w});
        if (repair(L)) return true;
        L.blocks.pop_back();
        L.gx[u] = L.gy[w] = -1;
      }
      return false;
    }
    for (int b = 0; b < static_cast<int>(L.blocks.size()); ++b) {
      if (L.blocks[b].xmask == 0 && L.blocks[b].ymask == 0) continue;
      if (!y_fits(L, v, b)) continue;
      L.gy[v] = b;
      L.blocks[b].ymask |= 1u << v;
      if (repair(L)) return true;
      L.blocks[b].ymask &= ~(1u << v);
      L.gy[v] = -1;
    }
    for (int w = 0; w < p; ++w) {
      if (L.gx[w] >= 0 || !((ny[v] >> w) & 1)) continue;
      int b = static_cast<int>(L.blocks.size());
      L.gx[w] = L.gy[v] = b;
      L.blocks.push_back({1u << w, 1u << v});
      if (repair(L)) return true;
      L.blocks.pop_back();
      L.gx[w] = L.gy[v] = -1;
    }
    return false;
  }

  bool repair_all() {
    for (BiLayer& L : layers) {
      BiLayer snapshot = L;
      bool ok = repair(L);
      L = std::move(snapshot);
      if (!ok) return false;
    }
    return true;
  }

  bool dfs(int from) {
    int e = from;
    while (e < static_cast<int>(edges.size()) && covered(e)) ++e;
    if (e == static_cast<int>(edges.size())) return repair_all();
    auto [u, v] = edges[e];
    for (BiLayer& L : layers) {
      bool was_empty = !L.used;
      BiLayer snapshot = L;
      if (place(L, u, v) && dfs(e + 1)) return true;
      L = std::move(snapshot);
      if (was_empty) break;
    }
    return false;
  }
};

}  // namespace

int min_equivalence_cover(const SimpleGraph& g, int guard) {
  g.validate();
  if (g.nv > guard) throw GuardError("vertex count exceeds guard");
  if (g.edges.empty()) return 0;

  EqSearch search;
  search.nv = g.nv;
  search.edges = g.edges;
  search.adj.assign(g.nv, 0);
  for (auto [u, v] : g.edges) {
    search.adj[u] |= 1ull << v;
    search.adj[v] |= 1ull << u;
  }
  for (int k = 1;; ++k) {
    search.layers.assign(k, CliqueLayer{std::vector<int>(g.nv, -1), {}, false});
    if (search.dfs(0)) return k;
  }
}

std::optional<int> min_bi_equivalence_cover(const BipartiteGraph& bg, int guard) {
  bg.validate();
  if (bg.p > guard || bg.q > guard) throw GuardError("side size exceeds guard");
  if (bg.edges.empty()) return 0;

  BieqSearch search;
  search.p = bg.p;
  search.q = bg.q;
  search.edges = bg.edges;
  search.nx.assign(bg.p, 0);
  search.ny.assign(bg.q, 0);
  for (auto [u, v] : bg.edges) {
    search.nx[u] |= 1u << v;
    search.ny[v] |= 1u << u;
  }

  // An edge nobody can cover ends the search: a spanning layer around it
  // must exist or no stack of layers ever covers it.
  for (auto [u, v] : bg.edges) {
    BiLayer L{std::vector<int>(bg.p, -1), std::vector<int>(bg.q, -1), {}, true};
    L.gx[u] = L.gy[v] = 0;
    L.blocks.push_back({1u << u, 1u << v});
    if (!search.repair(L)) return std::nullopt;
  }

  for (int k = 1;; ++k) {
    search.layers.assign(
        k, BiLayer{std::vector<int>(bg.p, -1), std::vector<int>(bg.q, -1), {}, false});
    if (search.dfs(0)) return k;
  }
}

}  // namespace bcl
