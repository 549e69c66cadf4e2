// ordsearch: run graph searches, check traversal predicates, enumerate
// traversals, verify search properties, build witness graphs and evaluate zeta.
//
// Exit codes: 0 success (all verdicts PASS), 1 some verdict FAIL, 2 usage or
// input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "ordsearch/acceptance.hpp"
#include "ordsearch/ordsearch.hpp"

namespace {

using namespace ordsearch;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrderedGraph load_graph(const std::string& path) {
  if (path == "-") return deserialize(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return deserialize(in);
}

Vertex checked_vertex(const OrderedGraph& g, std::uint64_t v) {
  if (v >= g.vertex_count()) throw UsageError("start vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

Traversal checked_order(const OrderedGraph& g, const std::vector<std::uint64_t>& seq) {
  Traversal t;
  for (auto v : seq) t.order.push_back(static_cast<Vertex>(v));
  if (!is_permutation_of(t, g.vertex_count())) throw UsageError("--order is not a permutation of the vertices");
  return t;
}

int print_verdicts(const std::vector<Verdict>& vs) {
  for (const auto& v : vs) std::cout << v.line() << '\n';
  return all_pass(vs) ? 0 : 1;
}

std::string prefix_set(const Traversal& t, std::size_t len) {
  std::string s = "prefix {";
  for (std::size_t i = 0; i < len; ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "} is disconnected";
}

Verdict check_order(const OrderedGraph& g, const Traversal& t, const std::string& kind) {
  const std::string name = kind == "traversal" ? "traversal" : kind == "bfs" ? "breadth-first" : "depth-first";
  if (auto len = first_disconnected_prefix(g, t)) return fail_verdict(name, prefix_set(t, *len));
  if (kind == "traversal") return pass_verdict(name);
  const bool ok = kind == "bfs" ? is_breadth_first(g, t) : is_depth_first(g, t);
  return ok ? pass_verdict(name) : fail_verdict(name, "triple condition violated");
}

std::vector<Verdict> identities_suite(const OrderedGraph& g) {
  std::vector<Verdict> out;
  const std::size_t n = g.vertex_count();
  const Traversal id = identity_order(n);
  const Traversal tau = algorithmic_traversal(g);
  const Traversal beta = bfs_traversal(g);
  auto law = [&](const char* name, const Traversal& got, const Traversal& want) {
    out.push_back(got == want ? pass_verdict(name) : fail_verdict(name, to_string(got)));
  };
  if (is_traversal(g, id)) law("search-fixes-traversals", tau, id);
  law("idempotence", algorithmic_traversal(relabel(g, tau)), id);
  law("beta-equals-tau-after-beta", algorithmic_traversal(relabel(g, beta)), id);
  law("search-tree-retraversal", algorithmic_traversal(traversal_tree(g, tau)), tau);
  law("bfs-tree-retraversal", bfs_traversal(traversal_tree(g, beta)), beta);
  out.push_back(is_breadth_first(g, beta) ? pass_verdict("bfs-is-breadth-first")
                                          : fail_verdict("bfs-is-breadth-first", to_string(beta)));
  return out;
}

std::vector<Verdict> stability_suite(const OrderedGraph& g, std::uint64_t seed, std::size_t samples) {
  std::vector<Verdict> out;
  auto sets = closure_samples(g, seed, samples);
  Verdict subset = pass_verdict("subset-stability", std::to_string(sets.size()) + " closed sets");
  for (const auto& w : sets)
    if (auto v = verify_subset_stability(g, w); !v) {
      subset = v;
      break;
    }
  out.push_back(subset);
  std::vector<std::vector<Vertex>> singletons;
  for (Vertex v = 0; v < g.vertex_count(); ++v) singletons.push_back({v});
  auto q1 = verify_quotient_stability(g, singletons);
  q1.check = "quotient-stability-singletons";
  out.push_back(q1);
  auto q2 = verify_quotient_stability(g, {identity_order(g.vertex_count()).order});
  q2.check = "quotient-stability-whole";
  out.push_back(q2);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic graph search, breadth-first search and zeta order types"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t start = 0;
  bool trace = false, dot = false, stats = false;

  auto* search = app.add_subcommand("search", "Algorithmic traversal (least frontier vertex first)");
  search->add_option("file", file, "Graph file, or - for standard input")->required();
  search->add_option("--start", start, "Start vertex");
  search->add_flag("--trace", trace, "Print one line per stage");
  search->add_flag("--dot", dot, "Print DOT annotated with traversal positions");

  auto* bfs = app.add_subcommand("bfs", "Algorithmic breadth-first traversal");
  bfs->add_option("file", file, "Graph file, or - for standard input")->required();
  bfs->add_option("--start", start, "Start vertex");
  bfs->add_flag("--trace", trace, "Print one line per stage");
  bfs->add_flag("--dot", dot, "Print DOT annotated with traversal positions");

  auto* alt = app.add_subcommand("alt", "Traversal by recursive splitting at the greatest vertex");
  alt->add_option("file", file, "Graph file, or - for standard input")->required();
  alt->add_option("--start", start, "Start vertex");
  alt->add_flag("--stats", stats, "Print operation counts as a comment line");

  bool tree_traversal = false, tree_bfs = false;
  auto* tree = app.add_subcommand("tree", "Search tree of the algorithmic (or BFS) traversal");
  tree->add_option("file", file, "Graph file, or - for standard input")->required();
  auto* tt = tree->add_flag("--traversal", tree_traversal, "Tree of the algorithmic traversal");
  auto* tb = tree->add_flag("--bfs", tree_bfs, "Tree of the breadth-first traversal");
  tt->excludes(tb);
  tree->add_flag("--dot", dot, "Print DOT instead of the graph format");

  std::vector<std::uint64_t> order;
  std::string kind;
  auto* check = app.add_subcommand("check", "Check whether an order is a traversal / breadth-first / depth-first");
  check->add_option("file", file, "Graph file, or - for standard input")->required();
  check->add_option("--order", order, "Vertex sequence")->required()->expected(1, -1);
  check->add_option("--kind", kind, "traversal | bfs | dfs")
      ->required()
      ->check(CLI::IsMember({"traversal", "bfs", "dfs"}));

  std::optional<std::uint64_t> enum_start;
  auto* enumerate = app.add_subcommand("enumerate", "List every traversal of the given kind");
  enumerate->add_option("file", file, "Graph file, or - for standard input")->required();
  enumerate->add_option("--kind", kind, "all | bfs | dfs")->required()->check(CLI::IsMember({"all", "bfs", "dfs"}));
  enumerate->add_option("--start", enum_start, "Fix the first vertex");

  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  auto* verify = app.add_subcommand("verify", "Check search properties on a graph");
  verify->add_option("file", file, "Graph file, or - for standard input")->required();
  verify->add_option("--suite", suite, "lexmin | colexmax | stability | identities")
      ->required()
      ->check(CLI::IsMember({"lexmin", "colexmax", "stability", "identities"}));
  verify->add_option("--seed", seed, "Seed for sampled sets (stability)");
  verify->add_option("--samples", samples, "Number of sampled sets (stability)");

  std::uint32_t wm = 0, wn = 0, wk = 1;
  bool wverify = false;
  auto* witness = app.add_subcommand("witness", "Truncated witness graph for zeta(w*m + n)");
  witness->add_option("--m", wm, "Multiple of w")->required();
  witness->add_option("--n", wn, "Finite part")->required();
  witness->add_option("--k", wk, "Truncation depth (w replaced by k)")->required();
  witness->add_flag("--verify", wverify, "Append verdict lines");

  std::string ordinal_text;
  auto* zeta_cmd = app.add_subcommand("zeta", "Order-type bound zeta of an ordinal (e.g. w^2*3+w+4)");
  zeta_cmd->add_option("ordinal", ordinal_text, "Ordinal in Cantor normal form")->required();

  std::size_t rn = 1;
  double density = 0.5;
  auto* random = app.add_subcommand("random", "Seeded random connected graph in graph format");
  random->add_option("--n", rn, "Vertex count")->required();
  random->add_option("--density", density, "Extra-edge probability in (0, 1]")->required();
  random->add_option("--seed", seed, "Seed");

  std::size_t count = 1000;
  auto* idsearch = app.add_subcommand("identity-search",
                                      "Look for random graphs where BFS after search differs from BFS");
  idsearch->add_option("--n", rn, "Vertex count")->required();
  idsearch->add_option("--density", density, "Extra-edge probability in (0, 1]")->required();
  idsearch->add_option("--seed", seed, "First seed");
  idsearch->add_option("--count", count, "Graphs to try");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*search || *bfs) {
      const OrderedGraph g = load_graph(file);
      const Vertex s = checked_vertex(g, start);
      Traversal t;
      if (*search) {
        auto tr = deterministic_search(g, s, trace);
        if (trace) std::cout << format_trace(tr);
        t = tr.visit_order;
      } else {
        auto tr = bfs_search(g, s);
        if (trace) std::cout << format_trace(tr);
        t = tr.visit_order;
      }
      std::cout << (dot ? dot_export(g, t) : to_string(t) + "\n");
      return 0;
    }
    if (*alt) {
      const OrderedGraph g = load_graph(file);
      AltSearchStats st;
      std::cout << to_string(alt_search(g, checked_vertex(g, start), &st)) << '\n';
      if (stats) std::cout << "# splits=" << st.splits << " edges_scanned=" << st.edges_scanned << '\n';
      return 0;
    }
    if (*tree) {
      if (!tree_traversal && !tree_bfs) throw UsageError("tree needs --traversal or --bfs");
      const OrderedGraph g = load_graph(file);
      const Traversal t = tree_bfs ? bfs_traversal(g) : algorithmic_traversal(g);
      const OrderedGraph tr = traversal_tree(g, t);
      std::cout << (dot ? dot_export(tr, t) : serialize(tr));
      return 0;
    }
    if (*check) {
      const OrderedGraph g = load_graph(file);
      return print_verdicts({check_order(g, checked_order(g, order), kind)});
    }
    if (*enumerate) {
      const OrderedGraph g = load_graph(file);
      const TraversalKind k = kind == "all"   ? TraversalKind::all
                              : kind == "bfs" ? TraversalKind::breadth_first
                                              : TraversalKind::depth_first;
      std::optional<Vertex> fixed;
      if (enum_start) fixed = checked_vertex(g, *enum_start);
      for (const auto& t : enumerate_traversals(g, k, fixed).orders) std::cout << to_string(t) << '\n';
      return 0;
    }
    if (*verify) {
      const OrderedGraph g = load_graph(file);
      if (suite == "lexmin") return print_verdicts({verify_lex_min(g)});
      if (suite == "colexmax") return print_verdicts({verify_colex_max(g)});
      if (suite == "stability") return print_verdicts(stability_suite(g, seed, samples));
      return print_verdicts(identities_suite(g));
    }
    if (*witness) {
      WitnessBuild b = build_zeta_witness(wm, wn, wk);
      std::cout << witness_manifest(b);
      return wverify ? print_verdicts(verify_witness(b)) : 0;
    }
    if (*zeta_cmd) {
      std::cout << to_string(zeta(parse_ordinal(ordinal_text))) << '\n';
      return 0;
    }
    if (*random) {
      std::cout << serialize(random_connected_graph(rn, density, seed));
      return 0;
    }
    if (*idsearch) {
      for (std::size_t i = 0; i < count; ++i) {
        const OrderedGraph g = random_connected_graph(rn, density, seed + i);
        const Traversal beta = bfs_traversal(g);
        const Traversal tau = algorithmic_traversal(g);
        const Traversal beta_tau = map_back(bfs_traversal(relabel(g, tau)), tau);
        if (beta != beta_tau) {
          std::cout << "# seed " << seed + i << ": bfs (" << to_string(beta) << ") vs bfs after search ("
                    << to_string(beta_tau) << ")\n"
                    << serialize(g);
          return 0;
        }
      }
      std::cout << "# no graph found where bfs after search differs from bfs\n";
      return 0;
    }
    if (*selftest) {
      auto results = acceptance::run_all(&std::cout);
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GraphFormatError& e) {
    std::cerr << "error: " << file << ": " << e.what() << '\n';
    return 2;
  } catch (const OrdinalParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
