#pragma once

// Finite graphs whose input order is the numeric order of vertex indices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordsearch {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

using Edge = std::pair<Vertex, Vertex>;

class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A sequence listing vertices; a traversal when it is a permutation of
// [0, n) whose prefixes induce connected subgraphs.
struct Traversal {
  std::vector<Vertex> order;

  std::size_t size() const { return order.size(); }
  Vertex operator[](std::size_t i) const { return order[i]; }
  auto begin() const { return order.begin(); }
  auto end() const { return order.end(); }

  friend bool operator==(const Traversal&, const Traversal&) = default;
  friend auto operator<=>(const Traversal&, const Traversal&) = default;
};

inline Traversal identity_order(std::size_t n) {
  Traversal t;
  t.order.resize(n);
  std::iota(t.order.begin(), t.order.end(), Vertex{0});
  return t;
}

inline bool is_permutation_of(const Traversal& t, std::size_t n) {
  if (t.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : t) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline void require_permutation(const Traversal& t, std::size_t n) {
  if (!is_permutation_of(t, n))
    throw std::invalid_argument("order is not a permutation of the " + std::to_string(n) +
                                " vertices");
}

// positions[v] = index of v in t.
inline std::vector<std::size_t> positions_of(const Traversal& t) {
  std::vector<std::size_t> pos(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) pos[t[i]] = i;
  return pos;
}

inline Traversal inverse(const Traversal& t) {
  Traversal inv;
  inv.order.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) inv.order[t[i]] = static_cast<Vertex>(i);
  return inv;
}

inline std::string to_string(const Traversal& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t[i]);
  }
  return out;
}

class OrderedGraph {
 public:
  OrderedGraph() = default;
  explicit OrderedGraph(std::size_t vertex_count) : adj_(vertex_count) {}

  OrderedGraph(std::size_t vertex_count, const std::vector<Edge>& edges) : adj_(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Neighbors ascending by input order.
  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Throws on self-loops, duplicates and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++edge_count_;
  }

  // Sorted by (min endpoint, max endpoint).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(Vertex v) const {
    if (v >= adj_.size())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                              std::to_string(adj_.size()) + ")");
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline const std::vector<Vertex>& neighbors(const OrderedGraph& g, Vertex v) {
  return g.neighbors(v);
}

// Vertices reachable from `from` avoiding `removed` (pass kNoVertex to keep all),
// ascending.
inline std::vector<Vertex> reachable_set(const OrderedGraph& g, Vertex from,
                                         Vertex removed = kNoVertex) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{from}, out;
  seen[from] = true;
  if (removed != kNoVertex) seen[removed] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_connected(const OrderedGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  return reachable_set(g, 0).size() == g.vertex_count();
}

// Some vertex not reachable from `start`, if any.
inline std::optional<Vertex> unreachable_vertex(const OrderedGraph& g, Vertex start) {
  g.neighbors(start);
  auto reach = reachable_set(g, start);
  if (reach.size() == g.vertex_count()) return std::nullopt;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!std::binary_search(reach.begin(), reach.end(), v)) return v;
  return std::nullopt;
}

inline void require_connected(const OrderedGraph& g, Vertex start = 0) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  if (auto v = unreachable_vertex(g, start))
    throw std::invalid_argument("graph is disconnected: vertex " + std::to_string(*v) +
                                " is unreachable from " + std::to_string(start));
}

inline bool is_acyclic(const OrderedGraph& g) {
  // A forest has exactly n - c edges.
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t components = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    ++components;
    for (Vertex w : reachable_set(g, v)) seen[w] = true;
  }
  return g.edge_count() + components == g.vertex_count();
}

struct InducedSubgraph {
  OrderedGraph graph;
  // to_parent[i] is the original vertex for subgraph vertex i (ascending).
  std::vector<Vertex> to_parent;
  // Subgraph index of an original vertex, or kNoVertex when outside the set.
  std::vector<Vertex> from_parent;
};

inline InducedSubgraph induced_subgraph(const OrderedGraph& g, std::vector<Vertex> w) {
  if (w.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  InducedSubgraph out;
  out.from_parent.assign(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < w.size(); ++i) {
    g.neighbors(w[i]);  // range check
    out.from_parent[w[i]] = static_cast<Vertex>(i);
  }
  out.to_parent = w;
  out.graph = OrderedGraph(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (Vertex x : g.neighbors(w[i]))
      if (x > w[i] && out.from_parent[x] != kNoVertex)
        out.graph.add_edge(static_cast<Vertex>(i), out.from_parent[x]);
  return out;
}

// The component of v in g with `removed` deleted, ascending.
inline std::vector<Vertex> component_excluding(const OrderedGraph& g, Vertex v, Vertex removed) {
  g.neighbors(v);
  g.neighbors(removed);
  if (v == removed) throw std::invalid_argument("start vertex equals the removed vertex");
  return reachable_set(g, v, removed);
}

// Vertex t[i] of g becomes vertex i of the result.
inline OrderedGraph relabel(const OrderedGraph& g, const Traversal& t) {
  require_permutation(t, g.vertex_count());
  auto pos = positions_of(t);
  OrderedGraph out(g.vertex_count());
  for (auto [u, v] : g.edges())
    out.add_edge(static_cast<Vertex>(pos[u]), static_cast<Vertex>(pos[v]));
  return out;
}

// Maps an order expressed in relabeled indices back to the original labels.
inline Traversal map_back(const Traversal& relabeled_order, const Traversal& relabeling) {
  Traversal out;
  out.order.reserve(relabeled_order.size());
  for (Vertex v : relabeled_order) out.order.push_back(relabeling[v]);
  return out;
}

// ---------------------------------------------------------------------------
// Seeded generation. SplitMix64 gives the same stream on every platform.

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

// A uniformly random labeled spanning tree (decoded from a random Pruefer
// sequence), plus every other pair independently with probability `density`.
inline OrderedGraph random_connected_graph(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random graph needs at least one vertex");
  if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");
  SplitMix64 rng(seed);
  OrderedGraph g(n);
  if (n >= 2) {
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    // Linear-time Pruefer decoding.
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = static_cast<Vertex>(ptr);
    for (Vertex c : code) {
      g.add_edge(leaf, c);
      if (--degree[c] == 1 && c < ptr) {
        leaf = c;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = static_cast<Vertex>(ptr);
      }
    }
    g.add_edge(leaf, static_cast<Vertex>(n - 1));
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && (density >= 1.0 || rng.unit() < density)) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Line format:
//   n <count>
//   e <u> <v>        (zero or more, u != v)
// '#' starts a comment line; blank lines are ignored.

inline std::string serialize(const OrderedGraph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

inline OrderedGraph deserialize(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<OrderedGraph> g;
  auto read_index = [&](std::istringstream& ls, const char* what) -> std::uint64_t {
    std::string tok;
    if (!(ls >> tok)) throw GraphFormatError(std::string("missing ") + what, lineno);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw GraphFormatError(std::string("malformed ") + what + " '" + tok + "'", lineno);
    try {
      return std::stoull(tok);
    } catch (const std::exception&) {
      throw GraphFormatError(std::string(what) + " out of range '" + tok + "'", lineno);
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "n") {
      if (g) throw GraphFormatError("duplicate 'n' line", lineno);
      auto count = read_index(ls, "vertex count");
      if (count >= kNoVertex) throw GraphFormatError("vertex count too large", lineno);
      g.emplace(static_cast<std::size_t>(count));
    } else if (kind == "e") {
      if (!g) throw GraphFormatError("edge before 'n' line", lineno);
      auto u = read_index(ls, "endpoint");
      auto v = read_index(ls, "endpoint");
      if (u >= g->vertex_count() || v >= g->vertex_count())
        throw GraphFormatError("endpoint out of range", lineno);
      if (u == v) throw GraphFormatError("self-loop", lineno);
      if (g->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        throw GraphFormatError("duplicate edge", lineno);
      g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw GraphFormatError("unknown record '" + kind + "'", lineno);
    }
    std::string extra;
    if (ls >> extra) throw GraphFormatError("trailing token '" + extra + "'", lineno);
  }
  if (!g) throw GraphFormatError("missing 'n' line", lineno + 1);
  return std::move(*g);
}

inline OrderedGraph deserialize(const std::string& text) {
  std::istringstream in(text);
  return deserialize(in);
}

// DOT export; with a traversal each node is labeled "<v> @<position>".
inline std::string dot_export(const OrderedGraph& g, const std::optional<Traversal>& order = {}) {
  std::vector<std::size_t> pos;
  if (order) {
    require_permutation(*order, g.vertex_count());
    pos = positions_of(*order);
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (order) os << " [label=\"" << v << " @" << pos[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ordsearch
