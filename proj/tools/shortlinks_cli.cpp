// shortlinks: command-line front end for building and analyzing complexes.
//
//   shortlinks build-kp --partition "1|2,3" [-o FILE]
//   shortlinks table --max-dim 4
//   shortlinks analyze FILE [--hypermetric-bound K] [--tsv]
//   shortlinks embed FILE --graph [--scale L --dim N]
//   shortlinks aut FILE
//   shortlinks cox --partition "1|2,3"
//
// Exit codes: 0 success, 2 input error, 3 instance too large.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shortlinks/shortlinks.hpp"

namespace sl = shortlinks;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sl::InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class Range, class Fn>
std::string join(const Range& r, const std::string& sep, Fn&& fmt) {
  std::string out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out += sep;
    out += fmt(x);
    first = false;
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Ordered key/value report, printed as "key: value" or as TSV.
class Report {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void print(std::ostream& os, bool tsv) const {
    for (const auto& [k, v] : rows_) os << k << (tsv ? "\t" : ": ") << v << '\n';
  }
  /// Set when some check was skipped because it exceeded a size guard.
  bool guard_hit = false;

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string skeleton_name(const sl::Graph& g) {
  if (auto h = sl::complete_minus_matching_size(g)) return sl::complete_minus_matching_name(g.vertex_count(), *h);
  return "-";
}

std::string gonal_witness(const sl::Graph& g, const sl::GonalVector& v) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < v.b.size(); ++i)
    if (v.b[i]) parts.push_back(std::to_string(g.label(i)) + ":" + std::to_string(v.b[i]));
  return "b = (" + join(parts, ", ", [](const std::string& s) { return s; }) + "), value " + std::to_string(v.value);
}

const sl::GonalVector& worst(const std::vector<sl::GonalVector>& vs) {
  const sl::GonalVector* best = &vs.front();
  for (const auto& v : vs)
    if (v.value > best->value) best = &v;
  return *best;
}

struct MetricVerdict {
  bool five_gonal = false;
  bool hypermetric = false;
  std::optional<bool> l1;
};

/// 5-gonal, bounded hypermetric, cut cone and partial cube checks on a graph.
MetricVerdict metric_checks(const sl::Graph& g, int bound, Report& r) {
  MetricVerdict mv;
  auto five = sl::kgonal_violations(g, 2);
  mv.five_gonal = five.empty();
  r.add("5-gonal", mv.five_gonal ? "yes" : "no, violated by " + gonal_witness(g, worst(five)));
  if (bound > 2) {
    auto hyp = mv.five_gonal ? sl::kgonal_violations(g, bound) : five;
    mv.hypermetric = hyp.empty();
    r.add("hypermetric up to bound " + std::to_string(bound),
          mv.hypermetric ? "yes" : "no, violated by " + gonal_witness(g, worst(hyp)));
  } else {
    mv.hypermetric = mv.five_gonal;
  }
  try {
    auto verdict = sl::cut_cone_membership(g);
    if (verdict.decomposition) {
      auto emb = sl::embedding_from_cuts(*verdict.decomposition);
      r.add("cut cone", "feasible, " + std::to_string(verdict.decomposition->cuts.size()) + " cuts, scale " +
                            std::to_string(emb.scale) + " embedding in dimension " + std::to_string(emb.dimension));
      mv.l1 = true;
    } else {
      r.add("cut cone", "infeasible, separating inequality on " + std::to_string(verdict.separator->pairs.size()) +
                            " pairs");
      mv.l1 = false;
    }
  } catch (const sl::GuardExceeded& e) {
    r.add("cut cone", std::string("skipped, instance too large: ") + e.what());
    r.guard_hit = true;
  }
  auto pc = sl::partial_cube(g);
  r.add("partial cube", pc ? "yes, dimension " + std::to_string(pc->dimension) : "no");
  return mv;
}

void analyze_complex(const sl::SimplicialComplex& k, int bound, Report& r) {
  const int n = k.dimension();
  r.add("kind", "simplicial");
  r.add("dimension", std::to_string(n));
  r.add("vertices", std::to_string(k.vertices().size()));
  r.add("facets", std::to_string(k.facet_count()));
  auto closure = sl::is_closed_pseudomanifold(k);
  bool closed = closure.closed();
  switch (closure.verdict) {
    case sl::ClosureReport::Verdict::closed:
      r.add("closure", "closed pseudomanifold");
      break;
    case sl::ClosureReport::Verdict::boundary:
      r.add("closure", "has boundary, " + std::to_string(closure.boundary.size()) + " ridges in one facet");
      break;
    case sl::ClosureReport::Verdict::bad:
      r.add("closure", "not a pseudomanifold, ridge " + closure.overfull.front().first.to_string() + " in " +
                           std::to_string(closure.overfull.front().second) + " facets");
      break;
  }
  r.add("euler characteristic", std::to_string(sl::euler_characteristic(k)));

  auto g = sl::skeleton(k);
  r.add("skeleton", std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges, " +
                        skeleton_name(g));

  if (!closed) {
    r.add("type", "unavailable, complex is not closed (partial report)");
    r.add("classification", "unavailable, complex is not closed");
  } else {
    auto type = sl::complex_type(k);
    r.add("type", sl::type_to_string(type));
    if (sl::is_short_link_type(type)) {
      try {
        r.add("classification", "K(" + sl::classify(k).canonical().to_string() + ")");
      } catch (const sl::InputError& e) {
        r.add("classification", std::string("failed: ") + e.what());
      }
    } else {
      r.add("classification", "none, type " + sl::type_to_string(type) + " is not within {3,4}");
    }

    // Long links, and the isometric-cycle obstruction for n >= 3.
    std::vector<std::string> long_links;
    bool obstruction = false;
    for (const auto& link : sl::all_links(k))
      for (const auto& cycle : link.cycles) {
        if (cycle.size() < 5) continue;
        std::vector<std::size_t> idx;
        for (auto v : cycle) idx.push_back(*g.index_of(v));
        bool iso = g.connected() && sl::is_isometric_cycle(g, idx);
        std::string face = link.face.empty() ? "{}" : sl::Face(link.face).to_string();
        long_links.push_back(face + " -> (" + join(cycle, ",", [](int v) { return std::to_string(v); }) +
                             ") length " + std::to_string(cycle.size()) + (iso ? " isometric" : " not isometric"));
        if (iso && n >= 3 && link.cycles.size() == 1) obstruction = true;
      }
    r.add("long links", long_links.empty() ? "none" : join(long_links, "; ", [](const std::string& s) { return s; }));
    if (obstruction)
      r.add("warning", "an (n-2)-face in at least five facets has an isometric link; the skeleton is not embeddable");
  }

  if (!g.connected()) {
    r.add("metric checks", "skipped, skeleton is disconnected");
    return;
  }
  metric_checks(g, bound, r);
}

void analyze_quadrillage(const sl::Quadrillage& q, Report& r) {
  r.add("kind", "quadrillage");
  r.add("vertices", std::to_string(q.vertex_count()));
  r.add("edges", std::to_string(q.edges().size()));
  r.add("faces", std::to_string(q.faces().size()));
  r.add("closed", yes_no(q.closed()));
  if (q.closed()) r.add("type", sl::type_to_string(sl::quadrillage_type(q)));
  auto zs = sl::zones(q);
  r.add("zones", std::to_string(zs.size()));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const auto& z = zs[i];
    bool simple = sl::zone_is_simple(z);
    std::string v = "length " + std::to_string(z.length()) + (z.closed ? ", closed" : ", open") +
                    (simple ? ", simple" : ", not simple");
    if (simple) v += sl::zone_is_convex(q, z) ? ", convex" : ", not convex";
    r.add("zone " + std::to_string(i + 1), v);
  }
  auto crit = sl::embeddable_by_zones(q);
  r.add("embeddable by zones", yes_no(crit.embeddable));
  auto g = q.skeleton();
  if (g.connected()) {
    auto pc = sl::partial_cube(g);
    r.add("partial cube", pc ? "yes, dimension " + std::to_string(pc->dimension) : "no");
  }
  if (!crit.precondition_holds)
    r.add("warning", "not a planar bipartite quadrillage; the zone criterion is not known to decide embeddability here");
}

int cmd_build_kp(const std::string& text, const std::string& out_path) {
  auto p = sl::Partition::parse(text);
  auto k = sl::build_kp(p);
  auto s = sl::kp_summary(p);
  if (k.facet_count() != s.facet_count) throw std::logic_error("facet count disagrees with the product formula");
  std::ostringstream head;
  head << "# K(" << p.to_string() << ")\n"
       << "# facets " << s.facet_count << "\n"
       << "# skeleton " << sl::complete_minus_matching_name(s.skeleton_m, s.skeleton_h) << "\n"
       << "# aut_order " << s.aut_order << "\n"
       << "# vertex_orbits " << s.vertex_orbit_count << "\n"
       << "# cox_order " << s.cox_order << "\n";
  if (out_path.empty()) {
    std::cout << head.str() << sl::serialize(k);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw sl::InputError("cannot write " + out_path);
  out << head.str() << sl::serialize(k);
  std::cout << head.str();
  return 0;
}

int cmd_table(int max_dim) {
  if (max_dim < 2 || max_dim > 6) throw sl::InputError("--max-dim must be between 2 and 6");
  std::cout << "partition\tskeleton\tfacets\taut_order\tvertex_orbits\tcox_order\tverified\n";
  for (int m = 3; m <= max_dim + 1; ++m)
    for (const auto& p : sl::enumerate_partitions(m)) {
      auto s = sl::kp_summary(p);
      auto k = sl::build_kp(p);
      std::vector<std::string> verified;
      if (k.vertices().size() <= sl::kAutomorphismVertexGuard) {
        auto auts = sl::automorphisms(k);
        verified.push_back(auts.size() == s.aut_order ? "aut" : "aut:MISMATCH");
        auto orbit_count = sl::orbits(auts, sl::vertex_faces(k)).size();
        verified.push_back(orbit_count == s.vertex_orbit_count ? "orbits" : "orbits:MISMATCH");
      }
      if (s.cox_order <= sl::kCoxeterOrderGuard)
        verified.push_back(sl::coxeter_order_bruteforce(p) == s.cox_order ? "cox" : "cox:MISMATCH");
      std::cout << p.to_string() << '\t' << sl::complete_minus_matching_name(s.skeleton_m, s.skeleton_h) << '\t'
                << k.facet_count() << '\t' << s.aut_order << '\t' << s.vertex_orbit_count << '\t' << s.cox_order
                << '\t' << (verified.empty() ? "-" : join(verified, ",", [](const std::string& x) { return x; }))
                << '\n';
    }
  return 0;
}

int cmd_analyze(const std::string& path, int bound, bool tsv) {
  if (bound < 2) throw sl::InputError("--hypermetric-bound must be at least 2");
  auto text = read_file(path);
  Report r;
  r.add("file", path);
  switch (sl::detect_kind(text)) {
    case sl::FileKind::simplicial:
      analyze_complex(sl::parse_complex(text), bound, r);
      break;
    case sl::FileKind::quadrillage:
      analyze_quadrillage(sl::parse_quadrillage(text), r);
      break;
    case sl::FileKind::graph: {
      auto g = sl::parse_graph(text);
      g.require_connected("analyze");
      r.add("kind", "graph");
      metric_checks(g, bound, r);
      break;
    }
  }
  r.print(std::cout, tsv);
  return r.guard_hit ? kExitGuard : 0;
}

int cmd_embed(const std::string& path, int bound, int scale, int dim) {
  if (bound < 2) throw sl::InputError("--hypermetric-bound must be at least 2");
  auto text = read_file(path);
  if (sl::detect_kind(text) != sl::FileKind::graph) throw sl::InputError(path + " is not a graph file");
  auto g = sl::parse_graph(text);
  g.require_connected("embed");
  Report r;
  r.add("graph", std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
  auto mv = metric_checks(g, bound, r);
  std::string hyp = "hypermetric up to bound " + std::to_string(bound);
  if (!mv.five_gonal)
    r.add("verdict", "not 5-gonal; NOT L1-embeddable");
  else if (!mv.hypermetric)
    r.add("verdict", "not " + hyp + "; NOT L1-embeddable");
  else if (mv.l1)
    r.add("verdict", *mv.l1 ? hyp + "; L1-embeddable" : hyp + "; NOT L1-embeddable");
  r.print(std::cout, false);
  if (r.guard_hit) {
    std::cerr << "instance too large for the cut cone test\n";
    return kExitGuard;
  }

  if (scale > 0 || dim > 0) {
    if (scale <= 0 || dim <= 0) throw sl::InputError("--scale and --dim must be given together");
    auto words = sl::find_scaled_embedding(g, scale, static_cast<std::size_t>(dim));
    if (!words) {
      std::cout << "no scale " << scale << " embedding in dimension " << dim << "\n";
      return 0;
    }
    std::cout << "scale " << scale << " embedding in dimension " << dim << ":\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::cout << "  " << g.label(v) << ' ';
      for (bool b : (*words)[v]) std::cout << (b ? '1' : '0');
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_aut(const std::string& path) {
  auto text = read_file(path);
  if (sl::detect_kind(text) != sl::FileKind::simplicial) throw sl::InputError(path + " is not a simplicial file");
  auto k = sl::parse_complex(text);
  auto auts = sl::automorphisms(k);
  auto vo = sl::orbits(auts, sl::vertex_faces(k));
  std::cout << "automorphisms: " << auts.size() << "\n";
  std::cout << "vertex orbits: " << vo.size() << "\n";
  for (const auto& orbit : vo)
    std::cout << "  {" << join(orbit, ",", [](const sl::Face& f) { return std::to_string(f.vertices().front()); })
              << "}\n";
  std::cout << "facet orbits: " << sl::orbits(auts, k.facets()).size() << "\n";
  return 0;
}

int cmd_cox(const std::string& text) {
  auto p = sl::Partition::parse(text);
  auto c = sl::coxeter_presentation(p);
  std::cout << "coxeter matrix:\n";
  for (const auto& row : c.matrix)
    std::cout << "  " << join(row, " ", [](int x) { return std::to_string(x); }) << "\n";
  std::cout << "order (formula): " << sl::kp_summary(p).cox_order << "\n";
  std::cout << "order (closure): " << sl::coxeter_order_bruteforce(p) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and analyze closed simplicial complexes with short links"};
  app.require_subcommand(1);

  std::string partition, out_path, file;
  int max_dim = 0, bound = 3, scale = 0, dim = 0;
  bool tsv = false, graph_flag = false;

  auto* build = app.add_subcommand("build-kp", "Build K(P) for a partition such as \"1|2,3\"");
  build->add_option("--partition", partition, "Parts separated by |, elements by ,")->required();
  build->add_option("-o", out_path, "Write the complex to FILE");

  auto* table = app.add_subcommand("table", "Invariants of K(P) for every partition up to a dimension");
  table->add_option("--max-dim", max_dim, "Largest dimension, 2 to 6")->required();

  auto* analyze = app.add_subcommand("analyze", "Report on a simplicial, quadrillage or graph file");
  analyze->add_option("file", file)->required();
  analyze->add_option("--hypermetric-bound", bound, "Check b with sum |b_i| <= 2K+1");
  analyze->add_flag("--tsv", tsv, "Tab-separated output");

  auto* embed = app.add_subcommand("embed", "Hypercube and L1 embeddability of a graph file");
  embed->add_option("file", file)->required();
  embed->add_flag("--graph", graph_flag, "Input is a graph file")->required();
  embed->add_option("--hypermetric-bound", bound, "Check b with sum |b_i| <= 2K+1");
  embed->add_option("--scale", scale, "Search a scale-L embedding");
  embed->add_option("--dim", dim, "Hypercube dimension for --scale");

  auto* aut = app.add_subcommand("aut", "Automorphism group order and orbits of a complex");
  aut->add_option("file", file)->required();

  auto* cox = app.add_subcommand("cox", "Coxeter group of K(P)");
  cox->add_option("--partition", partition, "Parts separated by |, elements by ,")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (build->parsed()) return cmd_build_kp(partition, out_path);
    if (table->parsed()) return cmd_table(max_dim);
    if (analyze->parsed()) return cmd_analyze(file, bound, tsv);
    if (embed->parsed()) return cmd_embed(file, bound, scale, dim);
    if (aut->parsed()) return cmd_aut(file);
    if (cox->parsed()) return cmd_cox(partition);
  } catch (const sl::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const sl::GuardExceeded& e) {
    std::cerr << "instance too large: " << e.what() << "\n";
    return kExitGuard;
  }
  return 0;
}
