#include "bcl/search.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "bcl/analysis.hpp"
#include "bcl/constructions.hpp"
#include "bcl/covers.hpp"

namespace bcl {

namespace {

bool guard_overridden() {
  const char* env = std::getenv("BCL_GUARD_OVERRIDE");
  return env != nullptr && std::string(env) == "1";
}

void check_guard(int r, int m, int n, bool override_guard) {
  if (override_guard || guard_overridden()) return;
  if (r > 3 || m * n > 16)
    throw GuardError("enumeration guard: r <= 3 and m*n <= 16 (override to proceed)");
}

long long power_count(int r, int cells) {
  long long total = 1;
  for (int k = 0; k < cells; ++k) {
    if (total > (1ll << 62) / r) throw GuardError("search space too large to index");
    total *= r;
  }
  return total;
}

// Per-color row masks: rm[c-1][i] holds the columns of color c in row i.
// Under bi-equivalence the nonzero masks of a color are pairwise equal or
// disjoint, each distinct value being one component.
struct MaskTable {
  int r = 0, m = 0, n = 0;
  std::vector<std::uint32_t> rm;  // (c-1) * m + i

  void resize(int r_, int m_, int n_) {
    r = r_;
    m = m_;
    n = n_;
    rm.assign(static_cast<size_t>(r) * m, 0);
  }
  std::uint32_t& at(Color c, int i) { return rm[static_cast<size_t>(c - 1) * m + i]; }
  std::uint32_t at(Color c, int i) const { return rm[static_cast<size_t>(c - 1) * m + i]; }

  void fill(const ColoredBiclique& cb) {
    std::fill(rm.begin(), rm.end(), 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) at(cb.at(i, j), i) |= 1u << j;
  }

  bool spanning() const {
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (Color c = 1; c <= r; ++c) {
      std::uint32_t cols = 0;
      for (int i = 0; i < m; ++i) {
        if (at(c, i) == 0) return false;
        cols |= at(c, i);
      }
      if (cols != full) return false;
    }
    return true;
  }

  bool bi_equivalence() const {
    for (Color c = 1; c <= r; ++c)
      for (int i = 0; i < m; ++i) {
        std::uint32_t a = at(c, i);
        if (a == 0) continue;
        for (int k = i + 1; k < m; ++k) {
          std::uint32_t b = at(c, k);
          if ((a & b) != 0 && a != b) return false;
        }
      }
    return true;
  }

  bool class_spans(Color c) const {
    std::uint32_t full = (1u << n) - 1, cols = 0;
    for (int i = 0; i < m; ++i) {
      if (at(c, i) == 0) return false;
      cols |= at(c, i);
    }
    return cols == full;
  }

  // Number of nontrivial components of a bi-equivalence class.
  int mask_width(Color c) const {
    std::uint32_t seen[32];
    int distinct = 0;
    for (int i = 0; i < m; ++i) {
      std::uint32_t a = at(c, i);
      if (a == 0) continue;
      bool fresh = true;
      for (int k = 0; k < distinct; ++k)
        if (seen[k] == a) {
          fresh = false;
          break;
        }
      if (fresh) seen[distinct++] = a;
    }
    return distinct;
  }

  // Proper block containment across colors, either side. Assumes a spanning
  // bi-equivalence partition.
  bool antichain() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> xb;  // (row-set, col-set)
    for (Color c = 1; c <= r; ++c)
      for (int i = 0; i < m; ++i) {
        std::uint32_t a = at(c, i);
        if (a == 0) continue;
        bool first = true;
        for (int k = 0; k < i; ++k)
          if (at(c, k) == a) {
            first = false;
            break;
          }
        if (!first) continue;
        std::uint32_t rows = 0;
        for (int k = 0; k < m; ++k)
          if (at(c, k) == a) rows |= 1u << k;
        xb.emplace_back(rows, a);
      }
    for (const auto& [ra, ca] : xb)
      for (const auto& [rb, cbm] : xb) {
        if (ra != rb && (ra & rb) == ra) return false;  // X-block ra inside rb
        if (ca != cbm && (ca & cbm) == ca) return false; // Y-block likewise
      }
    return true;
  }
};

bool has_equivalent_pair(const ColoredBiclique& cb) {
  for (int a = 0; a < cb.m; ++a)
    for (int b = a + 1; b < cb.m; ++b) {
      bool same = true;
      for (int j = 0; same && j < cb.n; ++j) same = cb.at(a, j) == cb.at(b, j);
      if (same) return true;
    }
  for (int a = 0; a < cb.n; ++a)
    for (int b = a + 1; b < cb.n; ++b) {
      bool same = true;
      for (int i = 0; same && i < cb.m; ++i) same = cb.at(i, a) == cb.at(i, b);
      if (same) return true;
    }
  return false;
}

bool is_canonical_form(const ColoredBiclique& cb) {
  if (cb.m > 6 || cb.n > 6) throw GuardError("canonical filter guard: sides must be at most 6");
  std::vector<int> rp(cb.m), cp(cb.n), relabel(cb.r + 1);
  std::iota(rp.begin(), rp.end(), 0);
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      std::fill(relabel.begin(), relabel.end(), 0);
      int next = 1, cmp = 0;
      for (int i = 0; cmp == 0 && i < cb.m; ++i)
        for (int j = 0; j < cb.n; ++j) {
          int v = cb.at(rp[i], cp[j]);
          if (relabel[v] == 0) relabel[v] = next++;
          int orig = cb.at(i, j);
          if (relabel[v] != orig) {
            cmp = relabel[v] < orig ? -1 : 1;
            break;
          }
        }
      if (cmp < 0) return false;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return true;
}

std::vector<std::vector<std::uint8_t>> surjective_rows(int n, int r) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> row(n, 1);
  while (true) {
    std::uint32_t colors = 0;
    for (std::uint8_t v : row) colors |= 1u << (v - 1);
    if (colors == (1u << r) - 1) out.push_back(row);
    int k = n - 1;
    while (k >= 0 && row[k] == r) row[k--] = 1;
    if (k < 0) break;
    ++row[k];
  }
  return out;
}

struct SweepCounters {
  long long raw = 0;      // candidates materialized
  long long checked = 0;  // candidates surviving the span/bieq filters
};

// Odometer over one shape in row-major lexicographic order. When span is
// demanded the rows run over the surjective patterns only, which visits
// exactly the colorings whose rows already carry every color. visit gets the
// coloring plus its mask table; returning false stops the whole sweep.
template <class F>
bool sweep_shape(int r, int m, int n, bool span, bool bieq, SweepCounters& ct, F&& visit) {
  if (m > 16 || n > 16) throw GuardError("mask sweep limited to sides <= 16");
  ColoredBiclique cb(m, n, r);
  MaskTable masks;
  masks.resize(r, m, n);

  auto consider = [&]() -> bool {  // false stops the sweep
    ++ct.raw;
    masks.fill(cb);
    if (span && !masks.spanning()) return true;
    if (bieq && !masks.bi_equivalence()) return true;
    ++ct.checked;
    return visit(cb, masks);
  };

  if (span) {
    auto rows = surjective_rows(n, r);
    if (rows.empty()) return true;
    std::vector<int> pick(m, 0);
    while (true) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) cb.set(i, j, rows[pick[i]][j]);
      if (!consider()) return false;
      int k = m - 1;
      while (k >= 0 && pick[k] + 1 == static_cast<int>(rows.size())) pick[k--] = 0;
      if (k < 0) break;
      ++pick[k];
    }
    return true;
  }

  power_count(r, m * n);  // size guard only
  std::vector<std::uint8_t>& cells = cb.cells;
  std::fill(cells.begin(), cells.end(), 1);
  while (true) {
    if (!consider()) return false;
    int k = m * n - 1;
    while (k >= 0 && cells[k] == r) cells[k--] = 1;
    if (k < 0) break;
    ++cells[k];
  }
  return true;
}

std::string shape_string(int r, int m, int n) {
  std::ostringstream os;
  os << "r=" << r << " K_{" << m << "," << n << "}";
  return os.str();
}

}  // namespace

void enumerate_partitions(const EnumSpec& spec,
                          const std::function<bool(const ColoredBiclique&)>& fn) {
  if (spec.r < 1 || spec.m < 1 || spec.n < 1) throw InputError("r, m, n must be positive");
  if (spec.r > 255) throw InputError("r must be in 1..255");
  check_guard(spec.r, spec.m, spec.n, spec.override_guard);

  bool bieq = spec.require_bi_equivalence || spec.require_antichain || spec.require_reduced;
  bool span = spec.require_spanning || spec.require_antichain;
  SweepCounters ct;
  sweep_shape(spec.r, spec.m, spec.n, span, bieq, ct,
              [&](const ColoredBiclique& cb, const MaskTable& masks) {
                if (spec.require_reduced && has_equivalent_pair(cb)) return true;
                if (spec.require_antichain && !masks.antichain()) return true;
                if (spec.canonical && !is_canonical_form(cb)) return true;
                return fn(cb);
              });
}

std::optional<ColoredBiclique> verify_cover_conjecture(const EnumSpec& spec, int bound) {
  std::optional<ColoredBiclique> witness;
  enumerate_partitions(spec, [&](const ColoredBiclique& cb) {
    if (min_cover(cb).size() > bound) {
      witness = cb;
      return false;
    }
    return true;
  });
  return witness;
}

ClaimResult verify_prop_two_class(int max_m, int max_n) {
  ClaimResult res;
  res.claim = "prop_two_class";
  {
    std::ostringstream os;
    os << "2-class bi-equivalence partitions of K_{m,n}, m <= " << max_m << ", n <= " << max_n;
    res.space = os.str();
  }
  res.pass = true;
  for (int m = 1; m <= max_m && res.pass; ++m)
    for (int n = 1; n <= max_n && res.pass; ++n) {
      check_guard(2, m, n, false);
      SweepCounters ct;
      sweep_shape(2, m, n, false, true, ct, [&](const ColoredBiclique& cb, const MaskTable& masks) {
        if (masks.mask_width(1) > 2 || masks.mask_width(2) > 2) {
          res.pass = false;
          res.witness = cb;
          res.detail = "class with more than 2 nontrivial components at " + shape_string(2, m, n);
          return false;
        }
        return true;
      });
      res.raw_count += ct.raw;
      res.checked_count += ct.checked;
    }
  if (res.pass) res.detail = "every class has at most 2 nontrivial components";
  return res;
}

ClaimResult verify_prop_three_class(int max_m, int max_n) {
  ClaimResult res;
  res.claim = "prop_three_class";
  {
    std::ostringstream os;
    os << "3-class bi-equivalence partitions of K_{m,n}, m <= " << max_m << ", n <= " << max_n;
    res.space = os.str();
  }
  res.pass = true;
  long long fired = 0;
  for (int m = 1; m <= max_m && res.pass; ++m)
    for (int n = 1; n <= max_n && res.pass; ++n) {
      check_guard(3, m, n, false);
      SweepCounters ct;
      sweep_shape(3, m, n, false, true, ct, [&](const ColoredBiclique& cb, const MaskTable& masks) {
        for (Color c = 1; c <= 3; ++c) {
          if (masks.mask_width(c) <= 3) continue;
          ++fired;
          bool rescued = false;
          for (Color d = 1; d <= 3 && !rescued; ++d)
            rescued = d != c && masks.class_spans(d) && masks.mask_width(d) == 2;
          if (!rescued) {
            res.pass = false;
            res.witness = cb;
            res.detail = "wide class without a spanning 2-component partner at " +
                         shape_string(3, m, n);
            return false;
          }
        }
        return true;
      });
      res.raw_count += ct.raw;
      res.checked_count += ct.checked;
    }
  if (res.pass) {
    std::ostringstream os;
    os << "hypothesis fired on " << fired
       << " instances; each had another spanning class with exactly 2 components";
    res.detail = os.str();
  }
  return res;
}

ClaimResult verify_min_width(int r, int max_m, int max_n) {
  if (r != 2 && r != 3) throw InputError("r must be 2 or 3");
  ClaimResult res;
  res.claim = "min_width";
  {
    std::ostringstream os;
    os << "spanning bi-equivalence partitions into " << r << " classes, m <= " << max_m
       << ", n <= " << max_n;
    res.space = os.str();
  }
  res.pass = true;
  for (int m = 1; m <= max_m && res.pass; ++m)
    for (int n = 1; n <= max_n && res.pass; ++n) {
      check_guard(r, m, n, false);
      SweepCounters ct;
      sweep_shape(r, m, n, true, true, ct, [&](const ColoredBiclique& cb, const MaskTable& masks) {
        int best = masks.mask_width(1);
        for (Color c = 2; c <= r; ++c) best = std::min(best, masks.mask_width(c));
        if (best > r) {
          res.pass = false;
          res.witness = cb;
          res.detail = "minimum class width exceeds r at " + shape_string(r, m, n);
          return false;
        }
        return true;
      });
      res.raw_count += ct.raw;
      res.checked_count += ct.checked;
    }
  if (res.pass) res.detail = "some class has width at most r on every instance";
  return res;
}

ClaimResult verify_cover_bound(int r, int max_m, int max_n, int bound, int threads) {
  if (r < 1) throw InputError("r must be positive");
  if (threads < 1) throw InputError("threads must be positive");
  ClaimResult res;
  res.claim = "cover_bound";
  {
    std::ostringstream os;
    os << "all " << r << "-colorings of K_{m,n}, m <= " << max_m << ", n <= " << max_n
       << ", bound " << bound;
    res.space = os.str();
  }
  res.pass = true;
  for (int m = 1; m <= max_m && res.pass; ++m)
    for (int n = 1; n <= max_n && res.pass; ++n) {
      check_guard(r, m, n, false);
      long long total = power_count(r, m * n);

      auto decode = [r, m, n](long long idx) {
        ColoredBiclique cb(m, n, r);
        for (int k = m * n - 1; k >= 0; --k) {
          cb.cells[k] = static_cast<std::uint8_t>(idx % r + 1);
          idx /= r;
        }
        return cb;
      };

      int t_count = static_cast<int>(std::min<long long>(threads, total));
      std::vector<long long> found(t_count, -1);
      auto scan = [&](int t) {
        long long lo = total * t / t_count, hi = total * (t + 1) / t_count;
        for (long long idx = lo; idx < hi; ++idx) {
          ColoredBiclique cb = decode(idx);
          if (min_cover(cb).size() > bound) {
            found[t] = idx;
            return;
          }
        }
      };
      if (t_count == 1) {
        scan(0);
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < t_count; ++t) pool.emplace_back(scan, t);
        for (auto& th : pool) th.join();
      }

      long long least = -1;
      for (long long f : found)
        if (f >= 0 && (least < 0 || f < least)) least = f;
      if (least >= 0) {
        res.pass = false;
        res.witness = decode(least);
        res.detail = "cover exceeds bound at " + shape_string(r, m, n);
        res.raw_count += least + 1;
        res.checked_count += least + 1;
        return res;
      }
      res.raw_count += total;
      res.checked_count += total;
    }
  res.detail = "minimum cover within bound on every coloring";
  return res;
}

ClaimResult verify_reduced_bounds(int max_m, int max_n) {
  ClaimResult res;
  res.claim = "reduced_bounds";
  {
    std::ostringstream os;
    os << "2-class bi-equivalence partitions, m <= " << max_m << ", n <= " << max_n
       << ", plus gstar(2..5)";
    res.space = os.str();
  }
  res.pass = true;
  for (int m = 1; m <= max_m && res.pass; ++m)
    for (int n = 1; n <= max_n && res.pass; ++n) {
      check_guard(2, m, n, false);
      SweepCounters ct;
      sweep_shape(2, m, n, false, true, ct, [&](const ColoredBiclique& cb, const MaskTable&) {
        bool rows_distinct = true;
        for (int a = 0; a < cb.m && rows_distinct; ++a)
          for (int b = a + 1; b < cb.m && rows_distinct; ++b) {
            bool same = true;
            for (int j = 0; same && j < cb.n; ++j) same = cb.at(a, j) == cb.at(b, j);
            rows_distinct = !same;
          }
        if (rows_distinct && cb.m > 2) {
          res.pass = false;
          res.witness = cb;
          res.detail = "X-reduced partition with more than 2 rows at " + shape_string(2, m, n);
          return false;
        }
        if (!has_equivalent_pair(cb) && (cb.m > 2 || cb.n > 2)) {
          res.pass = false;
          res.witness = cb;
          res.detail = "reduced partition beyond 2x2 at " + shape_string(2, m, n);
          return false;
        }
        return true;
      });
      res.raw_count += ct.raw;
      res.checked_count += ct.checked;
    }
  if (!res.pass) return res;

  for (int r = 2; r <= 5; ++r) {
    ColoredBiclique g = gstar(r);
    long long fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    ++res.checked_count;
    if (!equivalent_pairs(g).empty() || g.n != fact) {
      res.pass = false;
      res.witness = std::move(g);
      res.detail = "gstar(" + std::to_string(r) + ") is not reduced with r! columns";
      return res;
    }
  }
  res.detail = "X-reduced implies m <= 2, reduced implies max(m,n) <= 2; gstar reduced with r! columns";
  return res;
}

ClaimResult verify_width_sampled() {
  ClaimResult res;
  res.claim = "width_sampled";
  res.space = "doubling(2..5), ham_factor(3), enumerated antichain fixtures r <= 3, m,n <= 3";
  res.exhaustive = false;
  res.pass = true;

  auto threshold = [](int r) { return r <= 3 ? r : (r == 4 ? 4 : 8); };
  std::ostringstream detail;
  detail << "sampled, not exhaustive";

  auto check_fixture = [&](const ColoredBiclique& cb, const std::string& name) {
    ++res.raw_count;
    ++res.checked_count;
    int best = width(cb, 1);
    for (Color c = 2; c <= cb.r; ++c) best = std::min(best, width(cb, c));
    bool anti = is_antichain(cb).ok;
    bool ok = best <= threshold(cb.r);
    detail << "; " << name << " r=" << cb.r << " min_width=" << best
           << " antichain=" << (anti ? "yes" : "no");
    if (!ok) {
      res.pass = false;
      if (!res.witness) res.witness = cb;
      detail << " EXCEEDS " << threshold(cb.r);
    }
  };

  for (int r = 2; r <= 5; ++r) check_fixture(doubling(r), "doubling(" + std::to_string(r) + ")");
  check_fixture(ham_factor(3), "ham_factor(3)");

  auto fixtures = spanning_bieq_fixtures(50, 3, 3, 3, true);
  int within = 0;
  for (const ColoredBiclique& cb : fixtures) {
    ++res.raw_count;
    ++res.checked_count;
    int best = width(cb, 1);
    for (Color c = 2; c <= cb.r; ++c) best = std::min(best, width(cb, c));
    if (best <= threshold(cb.r)) {
      ++within;
    } else {
      res.pass = false;
      if (!res.witness) res.witness = cb;
    }
  }
  detail << "; " << within << "/" << fixtures.size()
         << " enumerated antichain fixtures within threshold"
         << "; no r=5 antichain instances available, singleton check vacuous";
  res.detail = detail.str();
  return res;
}

std::vector<ColoredBiclique> spanning_bieq_fixtures(int limit, int max_r, int max_m, int max_n,
                                                    bool antichain_only) {
  std::vector<ColoredBiclique> out;
  for (int r = 1; r <= max_r && static_cast<int>(out.size()) < limit; ++r)
    for (int m = 1; m <= max_m && static_cast<int>(out.size()) < limit; ++m)
      for (int n = 1; n <= max_n && static_cast<int>(out.size()) < limit; ++n) {
        EnumSpec spec;
        spec.r = r;
        spec.m = m;
        spec.n = n;
        spec.require_spanning = true;
        spec.require_bi_equivalence = true;
        spec.require_antichain = antichain_only;
        spec.canonical = true;
        enumerate_partitions(spec, [&](const ColoredBiclique& cb) {
          out.push_back(cb);
          return static_cast<int>(out.size()) < limit;
        });
      }
  return out;
}

}  // namespace bcl
