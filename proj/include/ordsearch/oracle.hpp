#pragma once

// Slow reference implementations used to cross-check the library: searches
// simulated stage by stage straight from their definitions, exhaustive graph
// enumeration and random nondeterministic search.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ordsearch/graph.hpp"

namespace ordsearch::oracle {

// Each stage rescans every vertex for the least one outside S adjacent to S.
inline Traversal stagewise_search(const OrderedGraph& g, Vertex start = 0) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_s(n, false);
  Traversal out;
  in_s[start] = true;
  out.order.push_back(start);
  for (;;) {
    Vertex pick = kNoVertex;
    for (Vertex v = 0; v < n && pick == kNoVertex; ++v) {
      if (in_s[v]) continue;
      for (Vertex w : g.neighbors(v))
        if (in_s[w]) {
          pick = v;
          break;
        }
    }
    if (pick == kNoVertex) break;
    in_s[pick] = true;
    out.order.push_back(pick);
  }
  if (out.size() != n) throw std::invalid_argument("graph is disconnected");
  return out;
}

// B and Q kept as explicit sets: q is the first element of Q outside B, and
// the neighbors of q not yet in Q are appended in input order.
inline Traversal stagewise_bfs(const OrderedGraph& g, Vertex start = 0) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> q{start};
  std::vector<bool> in_b(n, false);
  Traversal out;
  for (;;) {
    Vertex next = kNoVertex;
    for (Vertex v : q)
      if (!in_b[v]) {
        next = v;
        break;
      }
    if (next == kNoVertex) break;
    in_b[next] = true;
    out.order.push_back(next);
    for (Vertex v = 0; v < n; ++v) {
      if (!g.has_edge(next, v)) continue;
      bool present = false;
      for (Vertex x : q) present = present || x == v;
      if (!present) q.push_back(v);
    }
  }
  if (out.size() != n) throw std::invalid_argument("graph is disconnected");
  return out;
}

// Calls fn(g) for every connected labeled graph on n vertices.
template <class Fn>
void for_each_connected_graph(std::size_t n, Fn&& fn) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t masks = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    OrderedGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (is_connected(g)) fn(g);
  }
}

// Uniform over connected labeled graphs on n vertices, by rejection.
inline OrderedGraph random_labeled_connected_graph(std::size_t n, SplitMix64& rng) {
  for (;;) {
    OrderedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.next() >> 63) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

// One trace of nondeterministic search: any unvisited vertex adjacent to the
// visited set, chosen uniformly.
inline Traversal random_traversal(const OrderedGraph& g, SplitMix64& rng, Vertex start) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> visited(n, false), listed(n, false);
  std::vector<Vertex> frontier{start};
  listed[start] = true;
  Traversal out;
  while (!frontier.empty()) {
    std::size_t i = rng.below(frontier.size());
    Vertex v = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    visited[v] = true;
    out.order.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!listed[w]) {
        listed[w] = true;
        frontier.push_back(w);
      }
  }
  return out;
}

// Queue-based search that appends each vertex's newly found neighbors in a
// random order; always breadth-first.
inline Traversal random_bfs_traversal(const OrderedGraph& g, SplitMix64& rng, Vertex start) {
  std::vector<bool> listed(g.vertex_count(), false);
  Traversal out;
  out.order.push_back(start);
  listed[start] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    std::vector<Vertex> fresh;
    for (Vertex w : g.neighbors(out[head]))
      if (!listed[w]) {
        listed[w] = true;
        fresh.push_back(w);
      }
    rng.shuffle(fresh);
    out.order.insert(out.order.end(), fresh.begin(), fresh.end());
  }
  return out;
}

inline Traversal random_permutation(std::size_t n, SplitMix64& rng) {
  Traversal t = identity_order(n);
  rng.shuffle(t.order);
  return t;
}

}  // namespace ordsearch::oracle
