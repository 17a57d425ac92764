#include "bcl/dual.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "bcl/analysis.hpp"
#include "bcl/set_cover.hpp"

namespace bcl {

DualPair dualize(const ColoredBiclique& cb) {
  cb.validate();
  if (!is_spanning(cb).ok) throw PreconditionError("not spanning");
  for (Color c = 1; c <= cb.r; ++c)
    if (!is_bi_equivalence(cb, c).ok) throw PreconditionError("not bi-equivalence");

  // Spanning rules out isolated vertices, so the components per color
  // partition both sides and every vertex meets each class exactly once.
  std::vector<std::vector<int>> x_comp(cb.m), y_comp(cb.n);
  DualPair dp;
  int next_id = 0;
  for (Color c = 1; c <= cb.r; ++c) {
    std::vector<int> cls;
    for (const Component& comp : components(cb, c)) {
      for (int x : comp.xs) x_comp[x].push_back(next_id);
      for (int y : comp.ys) y_comp[y].push_back(next_id);
      cls.push_back(next_id++);
    }
    dp.h1.classes.push_back(cls);
    dp.h2.classes.push_back(std::move(cls));
  }
  dp.h1.edges = std::move(x_comp);
  dp.h2.edges = std::move(y_comp);
  dp.h1.validate();
  dp.h2.validate();
  return dp;
}

bool is_intersecting(const PartiteHypergraph& h) {
  for (size_t a = 0; a < h.edges.size(); ++a)
    for (size_t b = a + 1; b < h.edges.size(); ++b) {
      bool meet = false;
      for (int v : h.edges[a])
        if (std::find(h.edges[b].begin(), h.edges[b].end(), v) != h.edges[b].end()) {
          meet = true;
          break;
        }
      if (!meet) return false;
    }
  return true;
}

bool is_one_cross_intersecting(const PartiteHypergraph& h1, const PartiteHypergraph& h2) {
  if (h1.classes != h2.classes) throw InputError("class structures differ");
  for (const auto& e1 : h1.edges)
    for (const auto& e2 : h2.edges) {
      int common = 0;
      for (int v : e1)
        common += std::find(e2.begin(), e2.end(), v) != e2.end();
      if (common != 1) return false;
    }
  std::vector<char> in1, in2;
  int nv = h1.vertex_count();
  in1.assign(nv, 0);
  in2.assign(nv, 0);
  for (const auto& e : h1.edges)
    for (int v : e) in1[v] = 1;
  for (const auto& e : h2.edges)
    for (int v : e) in2[v] = 1;
  for (int v = 0; v < nv; ++v)
    if (!in1[v] || !in2[v]) return false;
  return true;
}

Transversal transversal_number(const std::vector<std::vector<int>>& edges) {
  if (edges.empty()) throw InputError("empty edge family");
  if (edges.size() > 100000) throw GuardError("edge family exceeds the size guard");
  std::vector<int> ids;
  for (const auto& e : edges) {
    if (e.empty()) throw InputError("empty requirement");
    for (int v : e) {
      if (v < 0) throw InputError("negative vertex id");
      ids.push_back(v);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > 4096) throw GuardError("vertex set exceeds the size guard");
  std::map<int, int> dense;
  for (size_t i = 0; i < ids.size(); ++i) dense[ids[i]] = static_cast<int>(i);

  PickProblem pb;
  pb.item_count = static_cast<int>(ids.size());
  for (const auto& e : edges) {
    std::vector<int> req;
    req.reserve(e.size());
    for (int v : e) req.push_back(dense.at(v));
    pb.requirements.push_back(std::move(req));
  }
  Transversal t;
  for (int idx : min_pick(pb)) t.witness.push_back(ids[idx]);
  t.size = static_cast<int>(t.witness.size());
  return t;
}

std::vector<std::vector<int>> union_edges(const DualPair& dp) {
  std::vector<std::vector<int>> out = dp.h1.edges;
  out.insert(out.end(), dp.h2.edges.begin(), dp.h2.edges.end());
  return out;
}

namespace {

std::uint64_t central_binomial(int k) {
  // C(2k, k); exact in 64 bits for k <= 31.
  unsigned __int128 res = 1;
  for (int i = 1; i <= k; ++i) res = res * (k + i) / i;
  return static_cast<std::uint64_t>(res);
}

}  // namespace

bool quickproof_bound_check(const DualPair& dp) {
  int r = static_cast<int>(dp.h1.classes.size());
  if (r < 1) throw InputError("no classes");
  if (r > 32) return true;  // bound exceeds any representable class
  std::uint64_t bound = central_binomial(r - 1);
  for (const auto& cls : dp.h1.classes)
    if (cls.size() > bound) return false;
  return true;
}

}  // namespace bcl
