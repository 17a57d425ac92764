// bcl: generators, analyzers, exact cover solvers, dualization, and claim
// verification over edge-colored complete bipartite graphs.
//
// Exit codes: 0 success, 1 verification found a counterexample, 2 usage or
// input error (including guard and precondition failures).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcl/analysis.hpp"
#include "bcl/constructions.hpp"
#include "bcl/covers.hpp"
#include "bcl/dual.hpp"
#include "bcl/model.hpp"
#include "bcl/search.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bcl::InputError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw bcl::InputError("cannot open output file: " + out_path);
  out << text;
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string matrix_inline(const bcl::ColoredBiclique& cb) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < cb.m; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cb.n; ++j) os << (j ? "," : "") << cb.at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

nlohmann::json matrix_json(const bcl::ColoredBiclique& cb) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < cb.m; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < cb.n; ++j) row.push_back(cb.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json part_json(const bcl::Component& part) {
  return {{"color", part.color}, {"xs", part.xs}, {"ys", part.ys}};
}

struct GenArgs {
  int r = 0, s = 0, q = 0;
  std::string out;
};

struct FileArgs {
  std::string file, out;
  bool json = false;
  bool include_isolated = false;
  bool exact = false, double_star = false, structural = false, homogeneous = false;
  int x = 0, y = 0;
};

struct VerifyArgs {
  std::string claim, out;
  int r = 0, max_m = 0, max_n = 0, bound = -1, threads = 1;
  bool json = false, exhaustive = false, sampled = false;
};

int run_analyze(const FileArgs& args) {
  bcl::ColoredBiclique cb = bcl::parse_coloring(read_input(args.file));
  bcl::WidthReport rep = bcl::width_report(cb);
  bcl::SpanningResult sp = bcl::is_spanning(cb);
  bool all_bieq = bcl::all_bi_equivalence(cb);

  std::ostringstream os;
  nlohmann::json doc;
  doc["m"] = cb.m;
  doc["n"] = cb.n;
  doc["r"] = cb.r;
  os << "m: " << cb.m << "\nn: " << cb.n << "\nr: " << cb.r << "\n";

  os << "spanning: " << (sp.ok ? "yes" : "no") << "\n";
  doc["spanning"] = sp.ok;
  if (!sp.ok) {
    os << "spanning.witness: " << (sp.x_side ? "x" : "y") << " " << sp.vertex << " missing "
       << sp.missing << "\n";
    doc["spanning_witness"] = {{"side", sp.x_side ? "x" : "y"},
                               {"vertex", sp.vertex},
                               {"missing", sp.missing}};
  }

  nlohmann::json widths = nlohmann::json::array();
  for (bcl::Color c = 1; c <= cb.r; ++c) {
    const auto& pc = rep.per_color[c - 1];
    int shown = args.include_isolated ? pc.with_isolated() : pc.nontrivial;
    os << "width[" << c << "]: " << shown << "\n";
    os << "width[" << c << "].nontrivial: " << pc.nontrivial << "\n";
    os << "width[" << c << "].isolated: " << pc.isolated << "\n";
    widths.push_back({{"color", c}, {"nontrivial", pc.nontrivial}, {"isolated", pc.isolated}});
  }
  doc["widths"] = std::move(widths);

  nlohmann::json bieq = nlohmann::json::array();
  for (bcl::Color c = 1; c <= cb.r; ++c) {
    bcl::BiEquivalenceResult be = bcl::is_bi_equivalence(cb, c);
    os << "bi_equivalence[" << c << "]: " << (be.ok ? "yes" : "no") << "\n";
    if (!be.ok) os << "bi_equivalence[" << c << "].witness: x " << be.x << " y " << be.y << "\n";
    bieq.push_back({{"color", c}, {"ok", be.ok}});
  }
  doc["bi_equivalence"] = std::move(bieq);
  os << "all_bi_equivalence: " << (all_bieq ? "yes" : "no") << "\n";
  doc["all_bi_equivalence"] = all_bieq;

  if (sp.ok && all_bieq) {
    bcl::AntichainResult ac = bcl::is_antichain(cb);
    os << "antichain: " << (ac.ok ? "yes" : "no") << "\n";
    doc["antichain"] = ac.ok;
    if (!ac.ok) {
      os << "antichain.inner: color " << ac.inner.color << " " << (ac.inner.x_side ? "x" : "y")
         << " " << join_ints(ac.inner.members) << "\n";
      os << "antichain.outer: color " << ac.outer.color << " " << (ac.outer.x_side ? "x" : "y")
         << " " << join_ints(ac.outer.members) << "\n";
      doc["antichain_witness"] = {
          {"inner", {{"color", ac.inner.color}, {"x_side", ac.inner.x_side}, {"members", ac.inner.members}}},
          {"outer", {{"color", ac.outer.color}, {"x_side", ac.outer.x_side}, {"members", ac.outer.members}}}};
    }
  } else {
    os << "antichain: not-applicable\n";
    doc["antichain"] = nullptr;
  }

  if (all_bieq) {
    auto pairs = bcl::equivalent_pairs(cb);
    os << "equivalent_pairs: " << pairs.size() << "\n";
    nlohmann::json jp = nlohmann::json::array();
    for (size_t k = 0; k < pairs.size(); ++k) {
      os << "equivalent_pairs[" << k << "]: " << (pairs[k].x_side ? "x" : "y") << " " << pairs[k].a
         << " " << pairs[k].b << "\n";
      jp.push_back({{"side", pairs[k].x_side ? "x" : "y"}, {"a", pairs[k].a}, {"b", pairs[k].b}});
    }
    doc["equivalent_pairs"] = std::move(jp);
    os << "reduced: " << (pairs.empty() ? "yes" : "no") << "\n";
    doc["reduced"] = pairs.empty();
  } else {
    os << "equivalent_pairs: not-applicable\nreduced: not-applicable\n";
    doc["equivalent_pairs"] = nullptr;
    doc["reduced"] = nullptr;
  }

  auto singles = bcl::singleton_blocks(cb);
  os << "singletons: " << singles.size() << "\n";
  nlohmann::json js = nlohmann::json::array();
  for (size_t k = 0; k < singles.size(); ++k) {
    std::vector<int> colors(singles[k].colors.begin(), singles[k].colors.end());
    os << "singletons[" << k << "]: " << (singles[k].x_side ? "x" : "y") << " "
       << singles[k].vertex << " colors " << join_ints(colors) << "\n";
    js.push_back({{"side", singles[k].x_side ? "x" : "y"},
                  {"vertex", singles[k].vertex},
                  {"colors", colors}});
  }
  doc["singletons"] = std::move(js);

  write_output(args.out, args.json ? doc.dump(2) + "\n" : os.str());
  return 0;
}

int run_cover(const FileArgs& args) {
  bcl::ColoredBiclique cb = bcl::parse_coloring(read_input(args.file));

  if (args.homogeneous) {
    auto [color, count] = bcl::homogeneous_cover_number(cb);
    if (args.json) {
      nlohmann::json doc{{"color", color}, {"count", count}};
      write_output(args.out, doc.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "color: " << color << "\ncount: " << count << "\n";
      write_output(args.out, os.str());
    }
    return 0;
  }

  bcl::CoverCertificate cert;
  if (args.double_star)
    cert = bcl::double_star_cover(cb, args.x, args.y);
  else if (args.structural)
    cert = bcl::structural_cover(cb);
  else
    cert = bcl::min_cover(cb);

  if (args.json) {
    nlohmann::json doc;
    doc["rule"] = bcl::cover_rule_name(cert.rule);
    doc["size"] = cert.size();
    doc["optimal"] = cert.optimal;
    nlohmann::json parts = nlohmann::json::array();
    for (const bcl::Component& part : cert.cover.parts) parts.push_back(part_json(part));
    doc["parts"] = std::move(parts);
    doc["covers"] = cert.cover.covers(cb);
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "rule: " << bcl::cover_rule_name(cert.rule) << "\n";
  os << "size: " << cert.size() << "\n";
  os << "optimal: " << (cert.optimal ? "yes" : "no") << "\n";
  for (int k = 0; k < cert.size(); ++k) {
    const bcl::Component& part = cert.cover.parts[k];
    os << "part[" << k << "]: color " << part.color << " xs " << join_ints(part.xs) << " ys "
       << join_ints(part.ys) << "\n";
  }
  os << "covers: " << (cert.cover.covers(cb) ? "yes" : "no") << "\n";
  write_output(args.out, os.str());
  return 0;
}

int run_dualize(const FileArgs& args) {
  bcl::ColoredBiclique cb = bcl::parse_coloring(read_input(args.file));
  bcl::DualPair dp = bcl::dualize(cb);
  bcl::DualDocument doc;
  doc.classes = dp.h1.classes;
  doc.edges1 = dp.h1.edges;
  doc.edges2 = dp.h2.edges;
  write_output(args.out, bcl::serialize_dual_document(doc));
  return 0;
}

int run_transversal(const FileArgs& args) {
  std::string text = read_input(args.file);
  nlohmann::json probe = nlohmann::json::parse(text, nullptr, false);
  if (probe.is_discarded() || !probe.is_object())
    throw bcl::InputError("malformed document: not valid JSON");

  std::vector<std::vector<int>> edges;
  if (probe.contains("edges1")) {
    bcl::DualDocument d = bcl::parse_dual_document(text);
    edges = d.edges1;
    edges.insert(edges.end(), d.edges2.begin(), d.edges2.end());
  } else {
    edges = bcl::parse_hypergraph(text).edges;
  }
  bcl::Transversal t = bcl::transversal_number(edges);
  if (args.json) {
    nlohmann::json doc{{"tau", t.size}, {"witness", t.witness}};
    write_output(args.out, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "tau: " << t.size << "\nwitness: " << join_ints(t.witness) << "\n";
    write_output(args.out, os.str());
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  bcl::ClaimResult res;
  if (args.claim == "cover") {
    if (args.r < 1) throw bcl::InputError("--r is required for claim cover");
    int bound = args.bound >= 0 ? args.bound : 2 * args.r - 2;
    res = bcl::verify_cover_bound(args.r, args.max_m ? args.max_m : 3,
                                  args.max_n ? args.max_n : 3, bound, args.threads);
  } else if (args.claim == "prop41") {
    res = bcl::verify_prop_two_class(args.max_m ? args.max_m : 4, args.max_n ? args.max_n : 4);
  } else if (args.claim == "prop42") {
    res = bcl::verify_prop_three_class(args.max_m ? args.max_m : 4, args.max_n ? args.max_n : 4);
  } else if (args.claim == "cor43") {
    if (args.r != 2 && args.r != 3) throw bcl::InputError("--r must be 2 or 3 for claim cor43");
    res = bcl::verify_min_width(args.r, args.max_m ? args.max_m : 4, args.max_n ? args.max_n : 4);
  } else if (args.claim == "width") {
    res = bcl::verify_width_sampled();
  } else if (args.claim == "rfact") {
    res = bcl::verify_reduced_bounds(args.max_m ? args.max_m : 4, args.max_n ? args.max_n : 4);
  } else {
    throw bcl::InputError("unknown claim: " + args.claim);
  }

  if (args.exhaustive && !res.exhaustive)
    throw bcl::InputError("claim " + args.claim + " is sampled, not exhaustive");
  if (args.sampled && res.exhaustive)
    throw bcl::InputError("claim " + args.claim + " is exhaustive, not sampled");

  std::string witness_text;
  if (res.witness) witness_text = bcl::serialize_coloring(*res.witness);
  if (res.witness && !args.out.empty()) write_output(args.out, witness_text);

  if (args.json) {
    nlohmann::json doc;
    doc["claim"] = res.claim;
    doc["space"] = res.space;
    doc["raw"] = res.raw_count;
    doc["checked"] = res.checked_count;
    doc["exhaustive"] = res.exhaustive;
    doc["result"] = res.pass ? "PASS" : "FAIL";
    doc["detail"] = res.detail;
    if (res.witness) {
      doc["witness"] = matrix_json(*res.witness);
      if (!args.out.empty()) doc["witness_file"] = args.out;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ostringstream os;
    os << "claim: " << res.claim << "\n";
    os << "space: " << res.space << "\n";
    os << "raw: " << res.raw_count << "\n";
    os << "checked: " << res.checked_count << "\n";
    os << "exhaustive: " << (res.exhaustive ? "yes" : "no") << "\n";
    os << "result: " << (res.pass ? "PASS" : "FAIL") << "\n";
    os << "detail: " << res.detail << "\n";
    if (res.witness) {
      os << "witness: " << matrix_inline(*res.witness) << "\n";
      if (!args.out.empty()) os << "witness_file: " << args.out << "\n";
    }
    std::cout << os.str();
  }
  return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for covers of edge-colored complete bipartite graphs"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a construction as a document");
  gen->require_subcommand(1);
  auto* gen_gstar = gen->add_subcommand("gstar", "permutation-star coloring on (r-1) x r!");
  gen_gstar->add_option("--r", gen_args.r, "number of colors")->required();
  auto* gen_doubling = gen->add_subcommand("doubling", "crosswise doubling coloring");
  gen_doubling->add_option("--r", gen_args.r, "number of colors")->required();
  auto* gen_ham = gen->add_subcommand("hamfactor", "Hamiltonian 1-factor blow-up coloring");
  gen_ham->add_option("--s", gen_args.s, "cycle parameter (r = (s-2)s)")->required();
  auto* gen_trunc = gen->add_subcommand("truncplane", "truncated projective plane hypergraph");
  gen_trunc->add_option("--q", gen_args.q, "prime order")->required();
  for (auto* sub : {gen_gstar, gen_doubling, gen_ham, gen_trunc})
    sub->add_option("--out", gen_args.out, "output path (default stdout)");

  FileArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "widths, predicates, blocks of a coloring");
  analyze->add_option("file", analyze_args.file, "coloring document, - for stdin")->required();
  analyze->add_flag("--include-isolated", analyze_args.include_isolated,
                    "count isolated vertices as width components");
  analyze->add_flag("--json", analyze_args.json, "structured report");
  analyze->add_option("--out", analyze_args.out, "output path (default stdout)");

  FileArgs cover_args;
  auto* cover = app.add_subcommand("cover", "cover a coloring by monochromatic components");
  cover->add_option("file", cover_args.file, "coloring document, - for stdin")->required();
  auto* f_exact = cover->add_flag("--exact", cover_args.exact, "exact minimum cover (default)");
  auto* f_ds = cover->add_flag("--double-star", cover_args.double_star, "double star at (--x, --y)");
  auto* f_st = cover->add_flag("--structural", cover_args.structural, "first applicable reduction");
  auto* f_h = cover->add_flag("--homogeneous", cover_args.homogeneous, "best single spanning class");
  f_exact->excludes(f_ds)->excludes(f_st)->excludes(f_h);
  f_ds->excludes(f_st)->excludes(f_h);
  f_st->excludes(f_h);
  cover->add_option("--x", cover_args.x, "X-side anchor for --double-star (default 0)");
  cover->add_option("--y", cover_args.y, "Y-side anchor for --double-star (default 0)");
  cover->add_flag("--json", cover_args.json, "structured report");
  cover->add_option("--out", cover_args.out, "output path (default stdout)");

  FileArgs dual_args;
  auto* dualize = app.add_subcommand("dualize", "dual hypergraph pair of a spanning coloring");
  dualize->add_option("file", dual_args.file, "coloring document, - for stdin")->required();
  dualize->add_option("--out", dual_args.out, "output path (default stdout)");

  FileArgs trans_args;
  auto* transversal = app.add_subcommand("transversal", "exact transversal number");
  transversal->add_option("file", trans_args.file, "hypergraph or dual document, - for stdin")
      ->required();
  transversal->add_flag("--json", trans_args.json, "structured report");
  transversal->add_option("--out", trans_args.out, "output path (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "sweep a claim over a guarded space");
  verify->add_option("--claim", verify_args.claim, "cover|prop41|prop42|cor43|width|rfact")
      ->required()
      ->check(CLI::IsMember({"cover", "prop41", "prop42", "cor43", "width", "rfact"}));
  verify->add_option("--r", verify_args.r, "number of colors (cover, cor43)");
  verify->add_option("--max-m", verify_args.max_m, "largest X side");
  verify->add_option("--max-n", verify_args.max_n, "largest Y side");
  verify->add_option("--bound", verify_args.bound, "cover bound (default 2r-2)");
  verify->add_option("--threads", verify_args.threads, "worker threads for cover sweeps");
  auto* f_ex = verify->add_flag("--exhaustive", verify_args.exhaustive,
                                "require the sweep to be exhaustive");
  auto* f_sa = verify->add_flag("--sampled", verify_args.sampled,
                                "acknowledge a sampled, non-exhaustive sweep");
  f_ex->excludes(f_sa);
  verify->add_option("--out", verify_args.out, "witness document path on failure");
  verify->add_flag("--json", verify_args.json, "structured report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      if (gen_gstar->parsed())
        write_output(gen_args.out, bcl::serialize_coloring(bcl::gstar(gen_args.r)));
      else if (gen_doubling->parsed())
        write_output(gen_args.out, bcl::serialize_coloring(bcl::doubling(gen_args.r)));
      else if (gen_ham->parsed())
        write_output(gen_args.out, bcl::serialize_coloring(bcl::ham_factor(gen_args.s)));
      else
        write_output(gen_args.out, bcl::serialize_hypergraph(bcl::truncated_plane(gen_args.q)));
      return 0;
    }
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (cover->parsed()) return run_cover(cover_args);
    if (dualize->parsed()) return run_dualize(dual_args);
    if (transversal->parsed()) return run_transversal(trans_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const bcl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
