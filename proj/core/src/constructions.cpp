#include "bcl/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace bcl {

ColoredBiclique gstar(int r) {
  if (r < 2) throw InputError("r must be at least 2");
  int m = r - 1;
  long long n = 1;
  for (int i = 2; i <= r; ++i) n *= i;
  if (n > 100000) throw GuardError("r! columns exceed the size guard");

  // Full permutations in lexicographic order; the first r-1 entries run
  // through every (r-1)-permutation exactly once, in lexicographic order.
  ColoredBiclique cb(m, static_cast<int>(n), r);
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 1);
  int j = 0;
  do {
    for (int k = 0; k < m; ++k) cb.set(k, j, perm[k]);
    ++j;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cb;
}

ColoredBiclique doubling(int r) {
  if (r < 1) throw InputError("r must be at least 1");
  if (r > 14) throw GuardError("2^(r-1) rows exceed the size guard");
  ColoredBiclique cb(1, 1, 1);
  for (int c = 2; c <= r; ++c) {
    int s = cb.m;
    ColoredBiclique next(2 * s, 2 * s, c);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        Color prev = cb.at(i, j);
        next.set(i, j, prev);
        next.set(s + i, s + j, prev);
        next.set(i, s + j, c);
        next.set(s + i, j, c);
      }
    cb = std::move(next);
  }
  cb.r = r;  // r = 1 keeps the base case
  return cb;
}

HamFactorParams HamFactorParams::for_s(int s) {
  if (s < 3) throw InputError("s must be at least 3");
  return {s, (s - 2) * s, (s - 1) * (s - 2) / 2};
}

namespace {

// Unique perfect matching of a path given as consecutive cycle positions:
// ends must pair inward, so consecutive pairs are forced.
void match_path(std::vector<std::pair<int, int>>& out, int from, int len, int cycle) {
  for (int t = 0; t < len; t += 2) out.emplace_back((from + t) % cycle, (from + t + 1) % cycle);
}

}  // namespace

ColoredBiclique ham_factor(int s) {
  HamFactorParams par = HamFactorParams::for_s(s);
  if (par.p * s > 256) throw GuardError("sp rows exceed the size guard");

  // Red edges of K_{s,s} form the cycle u_0 v_0 u_1 v_1 ...: position 2i is
  // u_i, position 2i+1 is v_i, so the red pairs are (i, i) and (i+1, i).
  std::vector<std::vector<int>> blue(s, std::vector<int>(s, 0));
  int next_color = 1;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (i != j && i != (j + 1) % s) blue[i][j] = next_color++;

  // The 1-factor of color c keeps its blue edge and matches the rest of the
  // cycle; deleting the two endpoints splits the cycle into two even paths,
  // each with a unique matching. Collect, per red edge, the colors whose
  // 1-factor uses it.
  std::map<std::pair<int, int>, std::vector<Color>> red_colors;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (blue[i][j] == 0) continue;
      int a = 2 * i, b = 2 * j + 1, cycle = 2 * s;
      std::vector<std::pair<int, int>> matched;
      match_path(matched, (a + 1) % cycle, (b - a - 1 + cycle) % cycle, cycle);
      match_path(matched, (b + 1) % cycle, (a - b - 1 + cycle) % cycle, cycle);
      for (auto [t1, t2] : matched) {
        int u = (t1 % 2 == 0) ? t1 / 2 : t2 / 2;
        int v = (t1 % 2 == 0) ? t2 / 2 : t1 / 2;
        red_colors[{u, v}].push_back(blue[i][j]);
      }
    }
  for (auto& [edge, colors] : red_colors) {
    std::sort(colors.begin(), colors.end());
    if (static_cast<int>(colors.size()) != par.p)
      throw PreconditionError("red edge multiplicity is off");
  }

  // Blow-up: a blue edge becomes the complete p x p block of its color, a
  // red edge splits into the p cyclic matchings a -> a+k, k-th matching to
  // the k-th smallest of its colors.
  int p = par.p;
  ColoredBiclique cb(s * p, s * p, par.r);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (blue[i][j] != 0) {
        for (int a = 0; a < p; ++a)
          for (int b = 0; b < p; ++b) cb.set(i * p + a, j * p + b, blue[i][j]);
      } else {
        const std::vector<Color>& colors = red_colors.at({i, j});
        for (int k = 0; k < p; ++k)
          for (int a = 0; a < p; ++a) cb.set(i * p + a, j * p + (a + k) % p, colors[k]);
      }
    }
  return cb;
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

using Triple = std::array<int, 3>;

// Normalized homogeneous triples (first nonzero coordinate 1), ascending.
std::vector<Triple> normalized_triples(int q) {
  std::vector<Triple> out;
  out.push_back({0, 0, 1});
  for (int c = 0; c < q; ++c) out.push_back({0, 1, c});
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c) out.push_back({1, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

bool incident(const Triple& line, const Triple& point, int q) {
  return (line[0] * point[0] + line[1] * point[1] + line[2] * point[2]) % q == 0;
}

}  // namespace

PartiteHypergraph truncated_plane(int q) {
  if (!is_prime(q)) throw InputError("q must be prime");

  const Triple removed_point = {0, 0, 1};
  std::vector<Triple> points = normalized_triples(q);
  std::vector<Triple> lines = points;  // plane is self-dual over the same triples

  // Vertex ids are handed out class by class: each removed line (the q+1
  // lines through the removed point, in lexicographic order) contributes its
  // q other points, in lexicographic order.
  std::map<Triple, int> id;
  PartiteHypergraph h;
  for (const Triple& line : lines) {
    if (line[2] != 0) continue;  // keeps the removed point: c = 0 exactly
    std::vector<int> cls;
    for (const Triple& pt : points) {
      if (pt == removed_point || !incident(line, pt, q)) continue;
      id[pt] = static_cast<int>(id.size());
      cls.push_back(id[pt]);
    }
    h.classes.push_back(std::move(cls));
  }

  for (const Triple& line : lines) {
    if (line[2] == 0) continue;
    std::vector<int> edge;
    for (const Triple& pt : points)
      if (pt != removed_point && incident(line, pt, q)) edge.push_back(id.at(pt));
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  h.validate();
  return h;
}

}  // namespace bcl
