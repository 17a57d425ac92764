#include "bcl/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bcl {

ColoredBiclique::ColoredBiclique(int m_, int n_, int r_)
    : m(m_), n(n_), r(r_), cells(static_cast<size_t>(std::max(m_, 0)) * std::max(n_, 0), 1) {
  validate();
}

void ColoredBiclique::validate() const {
  if (m < 1 || n < 1) throw InputError("malformed document: m and n must be positive");
  if (r < 1 || r > 255) throw InputError("malformed document: r must be in 1..255");
  if (cells.size() != static_cast<size_t>(m) * n) throw InputError("ragged matrix");
  for (std::uint8_t c : cells)
    if (c < 1 || c > r) throw InputError("color out of range");
}

bool Component::contains_x(int x) const {
  return std::binary_search(xs.begin(), xs.end(), x);
}

bool Component::contains_y(int y) const {
  return std::binary_search(ys.begin(), ys.end(), y);
}

int Component::min_global_id(int m) const {
  if (!xs.empty()) return xs.front();
  return m + ys.front();
}

bool Cover::covers(const ColoredBiclique& cb) const {
  std::vector<char> hit(cb.vertex_count(), 0);
  for (const Component& p : parts) {
    for (int x : p.xs) hit[x] = 1;
    for (int y : p.ys) hit[cb.m + y] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

void SimpleGraph::validate() const {
  if (nv < 0) throw InputError("negative vertex count");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= nv || v >= nv || u >= v) throw InputError("bad edge");
  if (!std::is_sorted(edges.begin(), edges.end())) throw InputError("edges not sorted");
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InputError("duplicate edge");
}

void BipartiteGraph::validate() const {
  if (p < 0 || q < 0) throw InputError("negative side size");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= p || v >= q) throw InputError("bad edge");
  if (!std::is_sorted(edges.begin(), edges.end())) throw InputError("edges not sorted");
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InputError("duplicate edge");
}

void PartiteHypergraph::validate() const {
  std::set<int> seen;
  for (const auto& cls : classes) {
    if (cls.empty()) throw InputError("empty class");
    for (int v : cls) {
      if (v < 0) throw InputError("negative vertex id");
      if (!seen.insert(v).second) throw InputError("classes are not disjoint");
    }
  }
  for (const auto& e : edges) {
    for (int v : e)
      if (!seen.count(v)) throw InputError("edge vertex outside all classes");
    for (const auto& cls : classes) {
      int inside = 0;
      for (int v : e)
        if (std::find(cls.begin(), cls.end(), v) != cls.end()) ++inside;
      if (inside != 1) throw InputError("edge does not meet every class exactly once");
    }
  }
}

int PartiteHypergraph::vertex_count() const {
  int total = 0;
  for (const auto& cls : classes) total += static_cast<int>(cls.size());
  return total;
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("malformed document: not valid JSON");
  if (!doc.is_object()) throw InputError("malformed document: top level must be an object");
  return doc;
}

void require_keys(const json& doc, const std::vector<std::string>& keys) {
  for (const auto& k : keys)
    if (!doc.contains(k)) throw InputError("malformed document: missing field '" + k + "'");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
      throw InputError("malformed document: unexpected field '" + it.key() + "'");
}

int get_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string("malformed document: ") + what + " must be an integer");
  long long x = v.get<long long>();
  if (x < -(1ll << 31) || x > (1ll << 31)) throw InputError(std::string("malformed document: ") + what + " out of range");
  return static_cast<int>(x);
}

std::vector<std::vector<int>> get_int_matrix(const json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string("malformed document: ") + what + " must be an array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : v) {
    if (!row.is_array()) throw InputError(std::string("malformed document: ") + what + " rows must be arrays");
    std::vector<int> out;
    out.reserve(row.size());
    for (const auto& cell : row) out.push_back(get_int(cell, what));
    rows.push_back(std::move(out));
  }
  return rows;
}

void emit_int_rows(std::ostringstream& os, const std::vector<std::vector<int>>& rows) {
  os << "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (size_t j = 0; j < rows[i].size(); ++j) os << (j ? ", " : "") << rows[i][j];
    os << "]";
  }
  os << (rows.empty() ? "]" : "\n  ]");
}

}  // namespace

ColoredBiclique parse_coloring(const std::string& text) {
  json doc = parse_json(text);
  require_keys(doc, {"m", "n", "r", "matrix"});
  ColoredBiclique cb;
  cb.m = get_int(doc["m"], "m");
  cb.n = get_int(doc["n"], "n");
  cb.r = get_int(doc["r"], "r");
  if (cb.m < 1 || cb.n < 1) throw InputError("malformed document: m and n must be positive");
  if (cb.r < 1 || cb.r > 255) throw InputError("malformed document: r must be in 1..255");
  auto rows = get_int_matrix(doc["matrix"], "matrix");
  if (static_cast<int>(rows.size()) != cb.m) throw InputError("ragged matrix");
  cb.cells.reserve(static_cast<size_t>(cb.m) * cb.n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cb.n) throw InputError("ragged matrix");
    for (int c : row) {
      if (c < 1 || c > cb.r) throw InputError("color out of range");
      cb.cells.push_back(static_cast<std::uint8_t>(c));
    }
  }
  return cb;
}

std::string serialize_coloring(const ColoredBiclique& cb) {
  cb.validate();
  std::ostringstream os;
  os << "{\n  \"m\": " << cb.m << ",\n  \"n\": " << cb.n << ",\n  \"r\": " << cb.r << ",\n  \"matrix\": ";
  std::vector<std::vector<int>> rows(cb.m, std::vector<int>(cb.n));
  for (int i = 0; i < cb.m; ++i)
    for (int j = 0; j < cb.n; ++j) rows[i][j] = cb.at(i, j);
  emit_int_rows(os, rows);
  os << "\n}\n";
  return os.str();
}

PartiteHypergraph parse_hypergraph(const std::string& text) {
  json doc = parse_json(text);
  require_keys(doc, {"classes", "edges"});
  PartiteHypergraph h;
  h.classes = get_int_matrix(doc["classes"], "classes");
  h.edges = get_int_matrix(doc["edges"], "edges");
  h.validate();
  return h;
}

std::string serialize_hypergraph(const PartiteHypergraph& h) {
  h.validate();
  std::ostringstream os;
  os << "{\n  \"classes\": ";
  emit_int_rows(os, h.classes);
  os << ",\n  \"edges\": ";
  emit_int_rows(os, h.edges);
  os << "\n}\n";
  return os.str();
}

DualDocument parse_dual_document(const std::string& text) {
  json doc = parse_json(text);
  require_keys(doc, {"classes", "edges1", "edges2"});
  DualDocument d;
  d.classes = get_int_matrix(doc["classes"], "classes");
  d.edges1 = get_int_matrix(doc["edges1"], "edges1");
  d.edges2 = get_int_matrix(doc["edges2"], "edges2");
  return d;
}

std::string serialize_dual_document(const DualDocument& d) {
  std::ostringstream os;
  os << "{\n  \"classes\": ";
  emit_int_rows(os, d.classes);
  os << ",\n  \"edges1\": ";
  emit_int_rows(os, d.edges1);
  os << ",\n  \"edges2\": ";
  emit_int_rows(os, d.edges2);
  os << "\n}\n";
  return os.str();
}

}  // namespace bcl
