#include "bcl/set_cover.hpp"

#include <algorithm>

namespace bcl {

namespace {

struct Solver {
  int item_count = 0;
  std::vector<std::vector<int>> reqs;       // sorted unique item ids per requirement
  std::vector<std::vector<int>> item_reqs;  // requirement ids per item
  std::vector<int> cover_count;             // chosen items inside each requirement
  std::vector<char> banned;
  std::vector<int> chosen;
  std::vector<int> best;
  int unmet = 0;

  explicit Solver(const PickProblem& pb) : item_count(pb.item_count) {
    reqs.reserve(pb.requirements.size());
    for (const auto& raw : pb.requirements) {
      if (raw.empty()) throw InputError("empty requirement");
      std::vector<int> req = raw;
      std::sort(req.begin(), req.end());
      req.erase(std::unique(req.begin(), req.end()), req.end());
      for (int a : req)
        if (a < 0 || a >= item_count) throw InputError("item id out of range");
      reqs.push_back(std::move(req));
    }
    item_reqs.resize(item_count);
    for (size_t q = 0; q < reqs.size(); ++q)
      for (int a : reqs[q]) item_reqs[a].push_back(static_cast<int>(q));
    cover_count.assign(reqs.size(), 0);
    banned.assign(item_count, 0);
    unmet = static_cast<int>(reqs.size());
  }

  void take(int a) {
    chosen.push_back(a);
    for (int q : item_reqs[a])
      if (cover_count[q]++ == 0) --unmet;
  }

  void drop(int a) {
    chosen.pop_back();
    for (int q : item_reqs[a])
      if (--cover_count[q] == 0) ++unmet;
  }

  std::vector<int> greedy() const {
    std::vector<int> met(reqs.size(), 0), picks;
    int left = static_cast<int>(reqs.size());
    while (left > 0) {
      int best_item = -1, best_gain = 0;
      for (int a = 0; a < item_count; ++a) {
        int gain = 0;
        for (int q : item_reqs[a]) gain += !met[q];
        if (gain > best_gain) {
          best_gain = gain;
          best_item = a;
        }
      }
      for (int q : item_reqs[best_item])
        if (!met[q]) {
          met[q] = 1;
          --left;
        }
      picks.push_back(best_item);
    }
    return picks;
  }

  // Lower bound on further picks: unmet count over the best available item
  // degree, and a greedy packing of item-disjoint unmet requirements (one
  // distinct pick is forced per packed requirement).
  int lower_bound() const {
    int maxdeg = 0;
    std::vector<int> deg(item_count, 0);
    for (size_t q = 0; q < reqs.size(); ++q)
      if (cover_count[q] == 0)
        for (int a : reqs[q])
          if (!banned[a]) maxdeg = std::max(maxdeg, ++deg[a]);
    if (maxdeg == 0) return unmet > 0 ? item_count + 1 : 0;
    int by_degree = (unmet + maxdeg - 1) / maxdeg;

    std::vector<char> used(item_count, 0);
    int packed = 0;
    for (size_t q = 0; q < reqs.size(); ++q) {
      if (cover_count[q] != 0) continue;
      bool disjoint = true;
      for (int a : reqs[q])
        if (!banned[a] && used[a]) {
          disjoint = false;
          break;
        }
      if (disjoint) {
        ++packed;
        for (int a : reqs[q])
          if (!banned[a]) used[a] = 1;
      }
    }
    return std::max(by_degree, packed);
  }

  void dfs() {
    if (unmet == 0) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    if (chosen.size() + lower_bound() >= best.size()) return;

    int pick_req = -1, pick_avail = item_count + 1;
    for (size_t q = 0; q < reqs.size(); ++q) {
      if (cover_count[q] != 0) continue;
      int avail = 0;
      for (int a : reqs[q]) avail += !banned[a];
      if (avail < pick_avail) {
        pick_avail = avail;
        pick_req = static_cast<int>(q);
      }
    }
    if (pick_avail == 0) return;

    std::vector<int> tried;
    for (int a : reqs[pick_req]) {
      if (banned[a]) continue;
      take(a);
      dfs();
      drop(a);
      banned[a] = 1;  // every solution through a was just explored
      tried.push_back(a);
      if (chosen.size() + 1 >= best.size()) break;
    }
    for (int a : tried) banned[a] = 0;
  }
};

}  // namespace

std::vector<int> min_pick(const PickProblem& pb) {
  if (pb.item_count < 0) throw InputError("negative item count");
  if (pb.requirements.empty()) return {};
  Solver solver(pb);
  solver.best = solver.greedy();
  solver.dfs();
  std::sort(solver.best.begin(), solver.best.end());
  return solver.best;
}

}  // namespace bcl
