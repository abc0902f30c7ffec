// Command-line front end: enumeration, graphs, components, closure posets,
// induction fibers, and verification sweeps, as JSON / DOT / text.
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbitgraph/closure_poset.hpp"
#include "orbitgraph/graph_induction.hpp"
#include "orbitgraph/matrix_oracle.hpp"
#include "orbitgraph/orbit_graph.hpp"
#include "orbitgraph/series.hpp"

using json = nlohmann::ordered_json;
using namespace orbitgraph;

namespace {

constexpr int kExitOk = 0, kExitMismatch = 1, kExitUsage = 2;

struct Options {
  std::string type = "AIII";
  std::string shape;
  std::string from_shape;
  std::string sig;
  std::string format = "json";
  int max_n = 8;
  int h = 1;
};

PairType type_of(const std::string& s) {
  if (auto t = parse_pair_type(s)) return *t;
  throw std::invalid_argument("unknown pair type: " + s);
}

std::pair<int, int> parse_sig(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--sig expects p,q");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

json shape_json(const Partition& lam) { return json(lam.parts()); }

std::string pi_string(const PiVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

json header(PairType t, const Partition& lam, int p, int q) {
  json j;
  j["schema"] = 1;
  j["type"] = to_string(t);
  j["shape"] = shape_json(lam);
  j["signature"] = {p, q};
  return j;
}

int cmd_enumerate(const Options& o) {
  const PairType t = type_of(o.type);
  const Partition lam = Partition::parse(o.shape);
  auto [p, q] = parse_sig(o.sig);
  const auto ds = enumerate_syd(t, lam, p, q);
  if (o.format == "text") {
    for (const auto& d : ds) std::cout << d.to_string() << "\n";
    return kExitOk;
  }
  json j = header(t, lam, p, q);
  j["diagrams"] = json::array();
  for (const auto& d : ds) j["diagrams"].push_back(d.to_string());
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_graph(const Options& o) {
  const PairType t = type_of(o.type);
  const Partition lam = Partition::parse(o.shape);
  auto [p, q] = parse_sig(o.sig);
  const OrbitGraph g = build_graph(t, lam, p, q);
  const ComponentLabel cl = components_bfs(g);
  if (o.format == "dot") {
    std::cout << "// type=" << to_string(t) << " shape=" << lam.to_string()
              << " sig=" << p << "," << q << "\n";
    std::cout << "graph orbit_graph {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      const SignedDiagram d = from_pi(t, lam, p, q, g.vertices[i]);
      std::cout << "  v" << i << " [label=\"" << pi_string(g.vertices[i])
                << "\\n" << d.to_string() << "\" colorscheme=set312 color="
                << cl.label[i] % 12 + 1 << "];\n";
    }
    for (auto [i, j] : g.edges)
      std::cout << "  v" << i << " -- v" << j << ";\n";
    std::cout << "}\n";
    return kExitOk;
  }
  if (o.format == "text") {
    std::cout << g.vertices.size() << " vertices, " << g.edges.size()
              << " edges, " << cl.count << " components\n";
    return kExitOk;
  }
  json j = header(t, lam, p, q);
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  j["components"] = cl.label;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_components(const Options& o) {
  const PairType t = type_of(o.type);
  const Partition lam = Partition::parse(o.shape);
  auto [p, q] = parse_sig(o.sig);
  const long long formula = component_count_formula(t, lam, p, q);
  const int search = components_bfs(build_graph(t, lam, p, q)).count;
  if (o.format == "text") {
    std::cout << "components: " << search << " (formula " << formula << ")\n";
  } else {
    json j = header(t, lam, p, q);
    j["components"] = search;
    j["formula"] = formula;
    std::cout << j.dump(2) << "\n";
  }
  return formula == search ? kExitOk : kExitMismatch;
}

int cmd_classify(const Options& o) {
  const PairType t = type_of(o.type);
  const Partition lam = Partition::parse(o.shape);
  auto [p, q] = parse_sig(o.sig);
  const Classification c = classify(t, lam, p, q);
  if (o.format == "text") {
    std::cout << "single_vertex=" << c.single_vertex
              << " edgeless=" << c.edgeless << " connected=" << c.connected
              << " disconnected=" << c.disconnected << "\n";
  } else {
    json j = header(t, lam, p, q);
    j["single_vertex"] = c.single_vertex;
    j["edgeless"] = c.edgeless;
    j["connected"] = c.connected;
    j["disconnected"] = c.disconnected;
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_closure(const Options& o) {
  const PairType t = type_of(o.type);
  auto [p, q] = parse_sig(o.sig);
  const ClosurePoset ps = closure_diagram(t, p, q);
  if (o.format == "dot") {
    std::cout << "// type=" << to_string(t) << " sig=" << p << "," << q
              << "\n";
    std::cout << "digraph closure {\n  rankdir=BT;\n";
    std::set<long long> dims;
    for (const auto& nd : ps.nodes)
      dims.insert(orbit_dimension(nd.shape(), t).dim_k);
    for (long long d : dims) {
      std::cout << "  { rank=same;";
      for (size_t i = 0; i < ps.nodes.size(); ++i)
        if (orbit_dimension(ps.nodes[i].shape(), t).dim_k == d)
          std::cout << " n" << i << ";";
      std::cout << " }\n";
    }
    for (size_t i = 0; i < ps.nodes.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << ps.nodes[i].to_string()
                << "\"];\n";
    for (const auto& c : ps.covers)
      std::cout << "  n" << c.lower << " -> n" << c.upper << ";\n";
    std::cout << "}\n";
    return kExitOk;
  }
  if (o.format == "text") {
    std::cout << ps.nodes.size() << " nodes, " << ps.covers.size()
              << " covers\n";
    return kExitOk;
  }
  json j;
  j["schema"] = 1;
  j["type"] = to_string(t);
  j["signature"] = {p, q};
  j["nodes"] = json::array();
  for (const auto& nd : ps.nodes) j["nodes"].push_back(nd.to_string());
  j["covers"] = json::array();
  for (const auto& c : ps.covers)
    j["covers"].push_back({c.lower, c.upper, c.case_label, c.codim});
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_induce(const Options& o) {
  const PairType t = type_of(o.type);
  const Partition lam = Partition::parse(o.shape);
  const Partition from = Partition::parse(o.from_shape);
  auto [p, q] = parse_sig(o.sig);
  if ((lam.n() - from.n()) % 2 != 0 || lam.n() <= from.n())
    throw std::invalid_argument(
        "--from-shape must be the given shape minus one column pair");
  const int h = (lam.n() - from.n()) / 2;
  json j = header(t, lam, p, q);
  j["from_shape"] = shape_json(from);
  j["fibers"] = json::array();
  for (const auto& small : enumerate_syd(t, from, p - h, q - h)) {
    json f;
    f["small"] = small.to_string();
    f["big"] = json::array();
    for (const auto& big : ind_set(t, small, lam))
      f["big"].push_back(big.to_string());
    j["fibers"].push_back(f);
  }
  const BijectionReport r = verify_component_bijection(t, lam, h, p, q);
  j["components_small"] = r.components_small;
  j["components_big"] = r.components_big;
  j["bijection"] = r.ok;
  std::cout << j.dump(2) << "\n";
  return r.ok ? kExitOk : kExitMismatch;
}

int cmd_genfunc_check(const Options& o) {
  const PairType t = type_of(o.type);
  const TruncatedSeries s = genfunc(t, o.max_n);
  long long cases = 0, bad = 0;
  for (int n = 1; n <= o.max_n; ++n)
    for (const auto& lam : partitions_of(n))
      for (int p = 0; p <= n; ++p) {
        if (!signature_ok(t, p, n - p)) continue;
        ++cases;
        if (s.coefficient(lam, p, n - p) !=
            static_cast<long long>(enumerate_syd(t, lam, p, n - p).size()))
          ++bad;
      }
  json j;
  j["schema"] = 1;
  j["type"] = to_string(t);
  j["max_n"] = o.max_n;
  j["cases"] = cases;
  j["mismatches"] = bad;
  std::cout << j.dump(2) << "\n";
  return bad == 0 ? kExitOk : kExitMismatch;
}

int cmd_appendix_check(const Options& o) {
  const Partition lam = Partition::parse(o.shape);
  const InductionReport r = verify_induction(lam, o.h);
  json j;
  j["schema"] = 1;
  j["shape"] = shape_json(lam);
  j["h"] = o.h;
  j["outcomes"] = json::array();
  for (const auto& oc : r.outcomes) {
    json e;
    e["rows"] = oc.rows;
    e["jordan"] = oc.jordan.parts();
    e["expected"] = oc.expected.parts();
    e["match"] = oc.match;
    j["outcomes"].push_back(e);
  }
  j["expected_max"] = r.expected_max.parts();
  j["ok"] = r.ok && r.max_ok;
  std::cout << j.dump(2) << "\n";
  return (r.ok && r.max_ok) ? kExitOk : kExitMismatch;
}

int cmd_sweep(const Options& o) {
  int max_n = o.max_n;
  if (const char* cap = std::getenv("ORBITGRAPH_MAX_N"))
    max_n = std::min(max_n, std::atoi(cap));
  long long cases = 0, bad = 0;
  for (PairType t : kAllTypes) {
    const TruncatedSeries s = genfunc(t, max_n);
    for (int n = 1; n <= max_n; ++n)
      for (const auto& lam : partitions_of(n))
        for (int p = 0; p <= n; ++p) {
          const int q = n - p;
          if (!signature_ok(t, p, q)) continue;
          ++cases;
          const auto ds = enumerate_syd(t, lam, p, q);
          const OrbitGraph g = build_graph(t, lam, p, q);
          const ComponentLabel cl = components_bfs(g);
          const Classification c = classify(t, lam, p, q);
          bool ok = s.coefficient(lam, p, q) ==
                        static_cast<long long>(ds.size()) &&
                    g.vertices.size() == ds.size() &&
                    component_count_formula(t, lam, p, q) == cl.count;
          if (ok && !g.vertices.empty()) {
            ok = c.single_vertex == (g.vertices.size() == 1) &&
                 c.edgeless == g.edges.empty() &&
                 c.connected == (cl.count == 1);
          }
          // pattern adjacency against the built edges
          if (ok) {
            std::set<std::pair<int, int>> edges(g.edges.begin(),
                                                g.edges.end());
            for (size_t i = 0; ok && i < ds.size(); ++i)
              for (size_t k = i + 1; ok && k < ds.size(); ++k) {
                const int a = g.vertex_index(pi_vector(ds[i]));
                const int b = g.vertex_index(pi_vector(ds[k]));
                ok = adjacency_by_pattern(t, ds[i], ds[k]) ==
                     edges.count({std::min(a, b), std::max(a, b)});
              }
          }
          if (ok && yd_membership(lam, t)) {
            for (int h : removable_column_heights(lam)) {
              if ((t == PairType::CII || t == PairType::DIII) && h % 2 != 0)
                continue;
              const BijectionReport r =
                  verify_component_bijection(t, lam, h, p, q);
              if (!r.ok || r.components_small != r.components_big) ok = false;
            }
          }
          if (!ok) {
            ++bad;
            std::cerr << "mismatch: " << to_string(t) << " "
                      << lam.to_string() << " sig " << p << "," << q << "\n";
          }
        }
  }
  json j;
  j["schema"] = 1;
  j["max_n"] = max_n;
  j["cases"] = cases;
  j["mismatches"] = bad;
  std::cout << j.dump(2) << "\n";
  return bad == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed Young diagram orbit graph toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool shape, bool sig) {
    sub->add_option("--type", o.type, "pair type: AIII BDI CI CII DIII");
    if (shape) sub->add_option("--shape", o.shape, "partition, e.g. 6,4,4,2,2")
        ->required();
    if (sig) sub->add_option("--sig", o.sig, "signature p,q")->required();
    sub->add_option("--format", o.format, "json|dot|text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };

  add_common(app.add_subcommand("enumerate", "list signed diagrams"), true,
             true);
  add_common(app.add_subcommand("graph", "orbit graph"), true, true);
  add_common(app.add_subcommand("components", "connected components"), true,
             true);
  add_common(app.add_subcommand("classify", "closed-form graph flags"), true,
             true);
  add_common(app.add_subcommand("closure", "closure poset"), false, true);
  auto* induce = app.add_subcommand("induce", "column-removal fibers");
  add_common(induce, true, true);
  induce->add_option("--from-shape", o.from_shape, "smaller partition")
      ->required();
  auto* gfc = app.add_subcommand("genfunc-check",
                                 "generating function vs enumeration");
  gfc->add_option("--type", o.type);
  gfc->add_option("--max-n", o.max_n);
  auto* apx = app.add_subcommand("appendix-check",
                                 "exact-matrix induced Jordan types");
  apx->add_option("--shape", o.shape)->required();
  apx->add_option("--height", o.h, "number of added column-pair rows");
  auto* sweep = app.add_subcommand("sweep", "run all cross-checks");
  sweep->add_option("--max-n", o.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("enumerate")) return cmd_enumerate(o);
    if (app.got_subcommand("graph")) return cmd_graph(o);
    if (app.got_subcommand("components")) return cmd_components(o);
    if (app.got_subcommand("classify")) return cmd_classify(o);
    if (app.got_subcommand("closure")) return cmd_closure(o);
    if (app.got_subcommand("induce")) return cmd_induce(o);
    if (app.got_subcommand("genfunc-check")) return cmd_genfunc_check(o);
    if (app.got_subcommand("appendix-check")) return cmd_appendix_check(o);
    if (app.got_subcommand("sweep")) return cmd_sweep(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
