#pragma once

// Order predicates, lexicographic comparators, traversal enumeration and
// checks of the extremality and stability properties of deterministic search.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordsearch/graph.hpp"
#include "ordsearch/search.hpp"
#include "ordsearch/verdict.hpp"

namespace ordsearch {

// Every vertex after the first has a neighbor placed before it.
inline bool has_decreasing_neighbors(const OrderedGraph& g, const Traversal& order) {
  require_permutation(order, g.vertex_count());
  auto pos = positions_of(order);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& nb = g.neighbors(order[i]);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return pos[w] < i; })) return false;
  }
  return true;
}

namespace detail {

inline void require_traversal(const OrderedGraph& g, const Traversal& order) {
  if (!is_traversal(g, order)) throw std::invalid_argument("order is not a traversal of the graph");
}

// Scans triples u < v < w (positions) with (u,w) in E and (u,v) not in E and
// asks `ok(u_pos, v)` for each; returns false on the first rejected triple.
template <class Accept>
bool scan_triples(const OrderedGraph& g, const Traversal& order,
                  const std::vector<std::size_t>& pos, Accept ok) {
  const std::size_t n = order.size();
  std::vector<std::size_t> mark(n, n);  // mark[x] == i iff x is adjacent to order[i]
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex u = order[i];
    std::size_t last = i;
    for (Vertex w : g.neighbors(u)) {
      mark[w] = i;
      last = std::max(last, pos[w]);
    }
    for (std::size_t j = i + 1; j < last; ++j) {
      const Vertex v = order[j];
      if (mark[v] == i) continue;
      if (!ok(i, v)) return false;
    }
  }
  return true;
}

}  // namespace detail

// For all u < v < w with (u,w) in E and (u,v) not in E, some x < u has (x,v) in E.
inline bool is_breadth_first(const OrderedGraph& g, const Traversal& order) {
  detail::require_traversal(g, order);
  auto pos = positions_of(order);
  return detail::scan_triples(g, order, pos, [&](std::size_t upos, Vertex v) {
    const auto& nb = g.neighbors(v);
    return std::any_of(nb.begin(), nb.end(), [&](Vertex x) { return pos[x] < upos; });
  });
}

// The least-neighbor map is weakly monotone in position.
inline bool has_monotone_parents(const OrderedGraph& g, const Traversal& order) {
  detail::require_traversal(g, order);
  auto pos = positions_of(order);
  auto map = least_neighbor_map(g, order);
  std::size_t prev = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::size_t p = pos[map.parent[order[i]]];
    if (p < prev) return false;
    prev = p;
  }
  return true;
}

// For all u < v < w with (u,w) in E and (u,v) not in E, some x with u < x < v has (x,v) in E.
inline bool is_depth_first(const OrderedGraph& g, const Traversal& order) {
  detail::require_traversal(g, order);
  auto pos = positions_of(order);
  return detail::scan_triples(g, order, pos, [&](std::size_t upos, Vertex v) {
    const auto& nb = g.neighbors(v);
    return std::any_of(nb.begin(), nb.end(),
                       [&](Vertex x) { return pos[x] > upos && pos[x] < pos[v]; });
  });
}

inline std::strong_ordering lex_compare(const Traversal& a, const Traversal& b) {
  if (a.size() != b.size()) throw std::invalid_argument("traversals differ in length");
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// Compares inverse permutations from the last index down to 0.
inline std::strong_ordering colex_compare_inverse(const Traversal& a, const Traversal& b) {
  if (a.size() != b.size()) throw std::invalid_argument("traversals differ in length");
  require_permutation(a, a.size());
  require_permutation(b, b.size());
  auto ia = inverse(a), ib = inverse(b);
  for (std::size_t i = a.size(); i-- > 0;)
    if (auto c = ia[i] <=> ib[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class TraversalKind { all, breadth_first, depth_first };

inline const char* to_string(TraversalKind k) {
  switch (k) {
    case TraversalKind::all: return "all";
    case TraversalKind::breadth_first: return "breadth_first";
    case TraversalKind::depth_first: return "depth_first";
  }
  return "?";
}

struct TraversalSet {
  TraversalKind kind = TraversalKind::all;
  std::vector<Traversal> orders;  // lexicographically ascending, distinct

  std::size_t size() const { return orders.size(); }
  bool contains(const Traversal& t) const {
    return std::binary_search(orders.begin(), orders.end(), t);
  }
};

inline bool satisfies(const OrderedGraph& g, const Traversal& t, TraversalKind kind) {
  if (!is_traversal(g, t)) return false;
  switch (kind) {
    case TraversalKind::all: return true;
    case TraversalKind::breadth_first: return is_breadth_first(g, t);
    case TraversalKind::depth_first: return is_depth_first(g, t);
  }
  return false;
}

namespace detail {

class TraversalEnumerator {
 public:
  TraversalEnumerator(const OrderedGraph& g, TraversalKind kind)
      : g_(g), kind_(kind), pos_(g.vertex_count(), kUnplaced), adjacent_count_(g.vertex_count(), 0) {}

  void run_from(Vertex start, std::vector<Traversal>& out) {
    out_ = &out;
    place(start);
    extend();
    unplace(start);
  }

 private:
  static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

  const OrderedGraph& g_;
  TraversalKind kind_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> adjacent_count_;  // placed neighbors per vertex
  std::vector<Vertex> prefix_;
  std::vector<Traversal>* out_ = nullptr;

  void place(Vertex v) {
    pos_[v] = prefix_.size();
    prefix_.push_back(v);
    for (Vertex w : g_.neighbors(v)) ++adjacent_count_[w];
  }

  void unplace(Vertex v) {
    for (Vertex w : g_.neighbors(v)) --adjacent_count_[w];
    prefix_.pop_back();
    pos_[v] = kUnplaced;
  }

  // Triples whose greatest element is the newly placed w.
  bool closes_valid_triples(Vertex w) const {
    if (kind_ == TraversalKind::all) return true;
    const std::size_t wpos = pos_[w];
    for (Vertex u : g_.neighbors(w)) {
      const std::size_t upos = pos_[u];
      if (upos == kUnplaced || upos > wpos) continue;
      for (std::size_t j = upos + 1; j < wpos; ++j) {
        const Vertex v = prefix_[j];
        if (g_.has_edge(u, v)) continue;
        const auto& nb = g_.neighbors(v);
        bool ok;
        if (kind_ == TraversalKind::breadth_first) {
          ok = std::any_of(nb.begin(), nb.end(),
                           [&](Vertex x) { return pos_[x] != kUnplaced && pos_[x] < upos; });
        } else {
          ok = std::any_of(nb.begin(), nb.end(), [&](Vertex x) {
            return pos_[x] != kUnplaced && pos_[x] > upos && pos_[x] < j;
          });
        }
        if (!ok) return false;
      }
    }
    return true;
  }

  void extend() {
    const std::size_t n = g_.vertex_count();
    if (prefix_.size() == n) {
      out_->push_back(Traversal{prefix_});
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (pos_[v] != kUnplaced || adjacent_count_[v] == 0) continue;
      place(v);
      if (closes_valid_triples(v)) extend();
      unplace(v);
    }
  }
};

}  // namespace detail

// Expands the tree of nondeterministic search choices (add any unvisited
// vertex adjacent to the visited set), pruning prefixes that already violate
// the kind's condition. Output is lexicographically sorted.
inline TraversalSet enumerate_traversals(const OrderedGraph& g, TraversalKind kind,
                                         std::optional<Vertex> fixed_start = std::nullopt) {
  require_connected(g);
  TraversalSet set;
  set.kind = kind;
  detail::TraversalEnumerator e(g, kind);
  if (fixed_start) {
    g.neighbors(*fixed_start);
    e.run_from(*fixed_start, set.orders);
  } else {
    for (Vertex s = 0; s < g.vertex_count(); ++s) e.run_from(s, set.orders);
  }
  return set;
}

// Reference enumeration: every permutation, filtered by the predicate.
inline TraversalSet enumerate_by_permutation_filter(const OrderedGraph& g, TraversalKind kind,
                                                    std::optional<Vertex> fixed_start = std::nullopt) {
  TraversalSet set;
  set.kind = kind;
  Traversal t = identity_order(g.vertex_count());
  do {
    if (fixed_start && t[0] != *fixed_start) continue;
    if (satisfies(g, t, kind)) set.orders.push_back(t);
  } while (std::next_permutation(t.order.begin(), t.order.end()));
  return set;
}

// ---------------------------------------------------------------------------
// Extremality

// The algorithmic traversal is the lex-least traversal from vertex 0, and the
// algorithmic breadth-first traversal is the lex-least breadth-first one.
inline Verdict verify_lex_min(const OrderedGraph& g) {
  require_connected(g);
  const Traversal tau = algorithmic_traversal(g);
  const Traversal beta = bfs_traversal(g);
  auto all = enumerate_traversals(g, TraversalKind::all, Vertex{0});
  auto bf = enumerate_traversals(g, TraversalKind::breadth_first, Vertex{0});
  if (all.orders.empty() || all.orders.front() != tau)
    return fail_verdict("lexmin-search", all.orders.empty() ? "no traversal"
                                                            : to_string(all.orders.front()));
  if (bf.orders.empty() || bf.orders.front() != beta)
    return fail_verdict("lexmin-bfs", bf.orders.empty() ? "no breadth-first traversal"
                                                        : to_string(bf.orders.front()));
  return pass_verdict("lexmin", "search=(" + to_string(tau) + ") bfs=(" + to_string(beta) + ")");
}

// The inverse of the algorithmic traversal is the unique colex-greatest
// inverse among traversals starting at vertex 0.
inline Verdict verify_colex_max(const OrderedGraph& g) {
  require_connected(g);
  const Traversal tau = algorithmic_traversal(g);
  auto all = enumerate_traversals(g, TraversalKind::all, Vertex{0});
  for (const auto& t : all.orders) {
    if (t == tau) continue;
    if (colex_compare_inverse(t, tau) >= 0) return fail_verdict("colexmax", to_string(t));
  }
  if (!all.contains(tau)) return fail_verdict("colexmax", "search output not enumerated");
  return pass_verdict("colexmax", to_string(tau));
}

// ---------------------------------------------------------------------------
// Stability under subsets and quotients

// Closure of `seeds` under the traversal least-neighbor map, ascending.
inline std::vector<Vertex> p_star_closure(const OrderedGraph& g, const std::vector<Vertex>& seeds) {
  auto pstar = least_neighbor_map(g, algorithmic_traversal(g));
  std::vector<bool> in(g.vertex_count(), false);
  std::vector<Vertex> out;
  for (Vertex s : seeds) {
    g.neighbors(s);
    for (Vertex v = s; v != kNoVertex && !in[v]; v = pstar.parent[v]) {
      in[v] = true;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random sets closed under p* except at their first element: half are full
// upward closures of random seeds, half stop at a random common ancestor.
inline std::vector<std::vector<Vertex>> closure_samples(const OrderedGraph& g, std::uint64_t seed,
                                                        std::size_t count) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  auto pstar = least_neighbor_map(g, algorithmic_traversal(g));
  SplitMix64 rng(seed);
  std::set<std::vector<Vertex>> found;
  for (std::size_t draw = 0; draw < count; ++draw) {
    std::vector<bool> in(n, false);
    std::vector<Vertex> set;
    const std::size_t seeds = 1 + rng.below(std::min<std::size_t>(n, 4));
    if (rng.below(2) == 0) {
      for (std::size_t s = 0; s < seeds; ++s)
        for (Vertex v = static_cast<Vertex>(rng.below(n)); v != kNoVertex && !in[v];
             v = pstar.parent[v]) {
          in[v] = true;
          set.push_back(v);
        }
    } else {
      const Vertex root = static_cast<Vertex>(rng.below(n));
      in[root] = true;
      set.push_back(root);
      for (std::size_t s = 0; s < 2 * seeds; ++s) {
        std::vector<Vertex> chain;
        Vertex v = static_cast<Vertex>(rng.below(n));
        while (v != kNoVertex && v != root && !in[v]) {
          chain.push_back(v);
          v = pstar.parent[v];
        }
        if (v == kNoVertex) continue;  // root is not an ancestor
        for (Vertex c : chain) {
          in[c] = true;
          set.push_back(c);
        }
      }
    }
    std::sort(set.begin(), set.end());
    found.insert(std::move(set));
  }
  return {found.begin(), found.end()};
}

namespace detail {

// The first element of `w` in `order`, given positions.
inline Vertex first_in_order(const std::vector<Vertex>& w, const std::vector<std::size_t>& pos) {
  return *std::min_element(w.begin(), w.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

}  // namespace detail

// For W closed under p* except at its first vertex w0: searching the induced
// subgraph from w0 lists W in the same relative order as the full search.
inline Verdict verify_subset_stability(const OrderedGraph& g, std::vector<Vertex> w) {
  require_connected(g);
  if (w.empty()) throw std::invalid_argument("empty vertex set");
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  const Traversal tau = algorithmic_traversal(g);
  auto pos = positions_of(tau);
  auto pstar = least_neighbor_map(g, tau);
  const Vertex w0 = detail::first_in_order(w, pos);
  for (Vertex v : w)
    if (v != w0 && !std::binary_search(w.begin(), w.end(), pstar.parent[v]))
      throw std::invalid_argument("set is not closed under p*: p*(" + std::to_string(v) +
                                  ") = " + std::to_string(pstar.parent[v]) + " is outside");
  auto sub = induced_subgraph(g, w);
  if (!is_connected(sub.graph))
    return fail_verdict("subset-stability", "induced subgraph is disconnected");
  const Traversal local = map_back(algorithmic_traversal(sub.graph, sub.from_parent[w0]),
                                   Traversal{sub.to_parent});
  Traversal restricted;
  for (Vertex v : tau)
    if (std::binary_search(w.begin(), w.end(), v)) restricted.order.push_back(v);
  if (local != restricted)
    return fail_verdict("subset-stability", "induced (" + to_string(local) + ") vs restricted (" +
                                                to_string(restricted) + ")");
  return pass_verdict("subset-stability");
}

// For a partition of the algorithmic traversal into intervals, each connected
// and closed under p* except at its first element: the algorithmic traversal
// of the quotient (parts ordered by their first elements' input order) lists
// the parts in the order their first elements appear.
inline Verdict verify_quotient_stability(const OrderedGraph& g,
                                         const std::vector<std::vector<Vertex>>& parts) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  const Traversal tau = algorithmic_traversal(g);
  auto pos = positions_of(tau);
  auto pstar = least_neighbor_map(g, tau);
  std::vector<std::size_t> part_of(n, parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("partition: part " + std::to_string(i) + " is empty");
    for (Vertex v : parts[i]) {
      g.neighbors(v);
      if (part_of[v] != parts.size())
        throw std::invalid_argument("partition: vertex " + std::to_string(v) + " appears twice");
      part_of[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (part_of[v] == parts.size())
      throw std::invalid_argument("partition: vertex " + std::to_string(v) + " is not covered");

  std::vector<Vertex> heads(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    std::size_t lo = n, hi = 0;
    for (Vertex v : p) {
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    if (hi - lo + 1 != p.size())
      throw std::invalid_argument("interval: part " + std::to_string(i) +
                                  " is not an interval of the traversal");
    heads[i] = tau[lo];
    if (!is_connected(induced_subgraph(g, p).graph))
      throw std::invalid_argument("connected: part " + std::to_string(i) +
                                  " does not induce a connected subgraph");
    for (Vertex v : p)
      if (v != heads[i] && part_of[pstar.parent[v]] != i)
        throw std::invalid_argument("closed: part " + std::to_string(i) + " has p*(" +
                                    std::to_string(v) + ") outside");
  }

  // Quotient vertices are parts ranked by the input order of their heads.
  std::vector<std::size_t> rank(parts.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return heads[a] < heads[b]; });
  std::vector<Vertex> quotient_index(parts.size());
  for (std::size_t r = 0; r < rank.size(); ++r) quotient_index[rank[r]] = static_cast<Vertex>(r);
  OrderedGraph quotient(parts.size());
  for (auto [u, v] : g.edges()) {
    Vertex a = quotient_index[part_of[u]], b = quotient_index[part_of[v]];
    if (a != b && !quotient.has_edge(a, b)) quotient.add_edge(a, b);
  }
  const Traversal qt = algorithmic_traversal(quotient);
  std::vector<std::size_t> expected(parts.size());
  std::iota(expected.begin(), expected.end(), std::size_t{0});
  std::sort(expected.begin(), expected.end(),
            [&](std::size_t a, std::size_t b) { return pos[heads[a]] < pos[heads[b]]; });
  for (std::size_t r = 0; r < qt.size(); ++r) {
    const std::size_t got = rank[qt[r]];
    if (got != expected[r])
      return fail_verdict("quotient-stability", "position " + std::to_string(r) + ": part with head " +
                                                    std::to_string(heads[got]) + " vs " +
                                                    std::to_string(heads[expected[r]]));
  }
  return pass_verdict("quotient-stability");
}

// ---------------------------------------------------------------------------
// Level structure of breadth-first traversals

struct LevelDecomposition {
  std::vector<std::vector<Vertex>> levels;  // levels[d] = vertices at distance d, in traversal order
  bool acyclic = false;
  // Only evaluated for acyclic graphs.
  std::optional<bool> levels_are_intervals;
  std::optional<bool> levels_in_order;
  std::optional<bool> parent_maps_down;

  bool all_checks_pass() const {
    return levels_are_intervals.value_or(false) && levels_in_order.value_or(false) &&
           parent_maps_down.value_or(false);
  }
};

inline LevelDecomposition level_decomposition(const OrderedGraph& g, const Traversal& order,
                                              Vertex root) {
  require_connected(g);
  if (order.size() == 0 || order[0] != root)
    throw std::invalid_argument("order does not start at the root");
  if (!is_traversal(g, order) || !has_monotone_parents(g, order))
    throw std::invalid_argument("order is not breadth-first");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, n);
  std::vector<Vertex> queue{root};
  dist[root] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex w : g.neighbors(queue[i]))
      if (dist[w] == n) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
  LevelDecomposition out;
  for (Vertex v : order) {
    if (dist[v] >= out.levels.size()) out.levels.resize(dist[v] + 1);
    out.levels[dist[v]].push_back(v);
  }
  out.acyclic = is_acyclic(g);
  if (!out.acyclic) return out;

  auto pos = positions_of(order);
  bool intervals = true, ordered = true, maps_down = true;
  std::size_t prev_hi = 0;
  for (std::size_t d = 0; d < out.levels.size(); ++d) {
    std::size_t lo = n, hi = 0;
    for (Vertex v : out.levels[d]) {
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    if (hi - lo + 1 != out.levels[d].size()) intervals = false;
    if (d > 0 && lo <= prev_hi) ordered = false;
    prev_hi = hi;
  }
  auto map = least_neighbor_map(g, order);
  for (Vertex v = 0; v < n; ++v)
    if (v != root && dist[map.parent[v]] + 1 != dist[v]) maps_down = false;
  out.levels_are_intervals = intervals;
  out.levels_in_order = ordered;
  out.parent_maps_down = maps_down;
  return out;
}

}  // namespace ordsearch
