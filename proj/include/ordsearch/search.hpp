#pragma once

// Deterministic graph search, deterministic breadth-first search, the
// split-on-greatest-vertex recursion, least-neighbor maps and search trees.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <numeric>
#include <limits>
#include <optional>
#include <set>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordsearch/graph.hpp"

namespace ordsearch {

struct FrontierStage {
  Vertex picked = kNoVertex;
  std::vector<Vertex> frontier;  // ascending, includes `picked`
};

struct SearchTrace {
  Traversal visit_order;
  // Empty when stages were not recorded.
  std::vector<FrontierStage> stages;
};

// B_i is the prefix of length i of the queue, Q_i is the prefix of length
// queue_length[i] of `queue`, and q_i = queue[i].
struct BfsTrace {
  Traversal visit_order;
  std::vector<Vertex> queue;
  std::vector<std::size_t> queue_length;

  std::size_t stage_count() const { return queue_length.size(); }
};

namespace detail {

inline void check_start(const OrderedGraph& g, Vertex start) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  if (start >= g.vertex_count())
    throw std::out_of_range("start vertex " + std::to_string(start) + " out of range");
  require_connected(g, start);
}

}  // namespace detail

// Repeatedly adds the input-least vertex adjacent to the visited set.
inline SearchTrace deterministic_search(const OrderedGraph& g, Vertex start = 0,
                                        bool record_stages = true) {
  detail::check_start(g, start);
  const std::size_t n = g.vertex_count();
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> frontier;
  std::vector<bool> queued(n, false);
  SearchTrace trace;
  trace.visit_order.order.reserve(n);
  frontier.push(start);
  queued[start] = true;
  std::vector<Vertex> pending{start};  // frontier contents, only in recording mode
  while (!frontier.empty()) {
    Vertex v = frontier.top();
    frontier.pop();
    if (record_stages) {
      std::sort(pending.begin(), pending.end());
      trace.stages.push_back(FrontierStage{v, pending});
      pending.erase(std::find(pending.begin(), pending.end(), v));
    }
    trace.visit_order.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (queued[w]) continue;
      queued[w] = true;
      frontier.push(w);
      if (record_stages) pending.push_back(w);
    }
  }
  return trace;
}

inline Traversal algorithmic_traversal(const OrderedGraph& g, Vertex start = 0) {
  return deterministic_search(g, start, false).visit_order;
}

// Pops the queue head and appends its unseen neighbors in input order.
inline BfsTrace bfs_search(const OrderedGraph& g, Vertex start = 0) {
  detail::check_start(g, start);
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_queue(n, false);
  BfsTrace trace;
  trace.queue.reserve(n);
  trace.queue.push_back(start);
  in_queue[start] = true;
  for (std::size_t head = 0; head < trace.queue.size(); ++head) {
    trace.queue_length.push_back(trace.queue.size());
    for (Vertex w : g.neighbors(trace.queue[head])) {
      if (in_queue[w]) continue;
      in_queue[w] = true;
      trace.queue.push_back(w);
    }
  }
  trace.visit_order.order = trace.queue;
  return trace;
}

inline Traversal bfs_traversal(const OrderedGraph& g, Vertex start = 0) {
  return bfs_search(g, start).visit_order;
}

struct AltSearchStats {
  std::size_t splits = 0;          // recursion nodes with more than one vertex
  std::size_t edges_scanned = 0;   // adjacency entries inspected
};

// Splits off the greatest vertex w other than the start v: X is the component
// of v once w is deleted, Y the rest; the result is alt(X from v) ++ alt(Y from w).
//
// Runs on an explicit stack. Each split explores G - w in round-robin from v
// and from every neighbor of w, merging explorations that meet, and stops as
// soon as either v's component or all the other components are complete; only
// the side found that way is moved out of the task's vertex set.
inline Traversal alt_search(const OrderedGraph& g, Vertex start = 0,
                            AltSearchStats* stats = nullptr) {
  detail::check_start(g, start);
  const std::size_t n = g.vertex_count();
  struct Task {
    std::set<Vertex> members;
    Vertex start;
    std::size_t id;
  };
  std::vector<Task> stack;
  std::vector<std::size_t> owner(n, 0);  // task id holding each vertex
  std::size_t next_id = 1;
  {
    Task all;
    for (Vertex v = 0; v < n; ++v) all.members.insert(all.members.end(), v);
    all.start = start;
    all.id = 0;
    stack.push_back(std::move(all));
  }
  std::vector<std::size_t> claim(n, 0), claim_epoch(n, 0);
  std::size_t epoch = 0;
  Traversal out;
  out.order.reserve(n);
  AltSearchStats local;

  struct Explorer {
    std::vector<Vertex> queue;
    std::size_t head = 0;
  };
  std::vector<Explorer> ex;
  std::vector<std::size_t> parent, active;  // union-find over explorers; active count per root
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    if (task.members.size() == 1) {
      out.order.push_back(task.start);
      continue;
    }
    ++local.splits;
    auto last = task.members.rbegin();
    const Vertex w = *last != task.start ? *last : *std::next(last);
    ++epoch;
    ex.clear();
    parent.clear();
    active.clear();
    auto add_explorer = [&](Vertex seed) {
      const std::size_t e = ex.size();
      ex.push_back(Explorer{{seed}, 0});
      parent.push_back(e);
      active.push_back(1);
      claim[seed] = e;
      claim_epoch[seed] = epoch;
    };
    add_explorer(task.start);
    claim_epoch[w] = epoch;
    claim[w] = std::numeric_limits<std::size_t>::max();
    for (Vertex u : g.neighbors(w)) {
      ++local.edges_scanned;
      if (owner[u] == task.id && claim_epoch[u] != epoch) add_explorer(u);
    }
    std::size_t active_other = ex.size() - 1;  // active explorers outside v's group

    bool x_known = false;
    while (!x_known && active_other > 0) {
      for (std::size_t e = 0; e < ex.size() && !x_known && active_other > 0; ++e) {
        Explorer& cur = ex[e];
        if (cur.head == cur.queue.size()) continue;
        const Vertex x = cur.queue[cur.head++];
        for (Vertex y : g.neighbors(x)) {
          ++local.edges_scanned;
          if (owner[y] != task.id) continue;
          if (claim_epoch[y] != epoch) {
            claim_epoch[y] = epoch;
            claim[y] = e;
            cur.queue.push_back(y);
          } else if (y != w) {
            std::size_t a = find(e), b = find(claim[y]);
            if (a == b) continue;
            const std::size_t root_v = find(0);
            if (a == root_v || b == root_v) {
              active_other -= (a == root_v ? active[b] : active[a]);
              if (b == root_v) std::swap(a, b);
            }
            parent[b] = a;  // a is v's root whenever either side was
            active[a] += active[b];
          }
        }
        if (cur.head == cur.queue.size()) {
          const std::size_t r = find(e);
          --active[r];
          if (r != find(0)) --active_other;
          else if (active[r] == 0) x_known = true;
        }
      }
    }

    // Collect the side that is now complete.
    const std::size_t root_v = find(0);
    std::set<Vertex> moved;
    for (std::size_t e = 0; e < ex.size(); ++e)
      if ((find(e) == root_v) == x_known)
        for (Vertex v : ex[e].queue) moved.insert(v);
    if (!x_known) moved.insert(w);
    for (Vertex v : moved) task.members.erase(v);
    const std::size_t id = next_id++;
    for (Vertex v : moved) owner[v] = id;
    if (x_known) {
      // moved = X, task keeps Y
      stack.push_back(Task{std::move(task.members), w, task.id});
      stack.push_back(Task{std::move(moved), task.start, id});
    } else {
      Task y{std::move(moved), w, id};
      stack.push_back(std::move(y));
      stack.push_back(Task{std::move(task.members), task.start, task.id});
    }
  }
  if (stats) *stats = local;
  return out;
}

struct LeastNeighborMap {
  Vertex root = kNoVertex;       // the order's first vertex; parent undefined
  std::vector<Vertex> parent;    // kNoVertex at the root

  std::size_t size() const { return parent.size(); }
  Vertex operator[](Vertex v) const { return parent.at(v); }
};

// parent(v) is the neighbor of v that comes first in `order`.
inline LeastNeighborMap least_neighbor_map(const OrderedGraph& g, const Traversal& order) {
  require_permutation(order, g.vertex_count());
  LeastNeighborMap map;
  map.parent.assign(g.vertex_count(), kNoVertex);
  if (order.size() == 0) return map;
  map.root = order[0];
  auto pos = positions_of(order);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == map.root) continue;
    const auto& nb = g.neighbors(v);
    if (nb.empty())
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no neighbor");
    map.parent[v] = *std::min_element(nb.begin(), nb.end(),
                                      [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  }
  return map;
}

// Length of the shortest prefix that induces a disconnected subgraph, if any.
// Each new vertex is merged into the components of the prefix before it.
inline std::optional<std::size_t> first_disconnected_prefix(const OrderedGraph& g,
                                                            const Traversal& order) {
  require_permutation(order, g.vertex_count());
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> uf(n);
  std::iota(uf.begin(), uf.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<bool> placed(n, false);
  std::size_t components = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    placed[v] = true;
    ++components;
    for (Vertex w : g.neighbors(v)) {
      if (!placed[w]) continue;
      Vertex a = find(v), b = find(w);
      if (a != b) {
        uf[a] = b;
        --components;
      }
    }
    if (components != 1) return i + 1;
  }
  return std::nullopt;
}

// Every prefix induces a connected subgraph.
inline bool is_traversal(const OrderedGraph& g, const Traversal& order) {
  return !first_disconnected_prefix(g, order).has_value();
}

// Spanning tree made of the edges {v, parent(v)}.
inline OrderedGraph traversal_tree(const OrderedGraph& g, const Traversal& order) {
  if (!is_traversal(g, order)) throw std::invalid_argument("order is not a traversal of the graph");
  auto map = least_neighbor_map(g, order);
  OrderedGraph tree(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (map.parent[v] != kNoVertex) tree.add_edge(v, map.parent[v]);
  return tree;
}

// ---------------------------------------------------------------------------
// Trace printing, one stage per line.

inline std::string format_trace(const SearchTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    os << "stage " << i << ": pick " << trace.stages[i].picked << " from {";
    const auto& f = trace.stages[i].frontier;
    for (std::size_t j = 0; j < f.size(); ++j) os << (j ? "," : "") << f[j];
    os << "}\n";
  }
  return os.str();
}

inline std::string format_trace(const BfsTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.stage_count(); ++i) {
    os << "stage " << i << ": B=" << i << " Q=(";
    for (std::size_t j = 0; j < trace.queue_length[i]; ++j) os << (j ? " " : "") << trace.queue[j];
    os << ") q=" << trace.queue[i] << '\n';
  }
  return os.str();
}

}  // namespace ordsearch
