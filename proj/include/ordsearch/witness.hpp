#pragma once

// Finite truncations of graphs whose algorithmic traversal realizes
// zeta(w*m + n), with a traversal predicted from the block structure alone.
//
// A build of (m, n, k) has r = n+1 blocks when n > 0 or m = 0, and r = k
// blocks (w cut off at k) otherwise. Block i is an anchor t_i followed by a
// piece S_i, a relabeled copy of the build for the inner parameters
// ((m, 0) when n > 0, (m-1, 0) when n = 0), whose input-least vertex is
// joined to t_i. Anchors are vertex 0 plus the r-1 input-greatest vertices
// and carry a path in input order. The remaining vertices are dealt to the
// pieces by residue: the j-th of them (ascending) is vertex j / r of piece
// j % r.

#include <array>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordsearch/graph.hpp"
#include "ordsearch/ordinal.hpp"
#include "ordsearch/predicates.hpp"
#include "ordsearch/search.hpp"
#include "ordsearch/verdict.hpp"

namespace ordsearch {

struct WitnessParams {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 1;

  friend bool operator==(const WitnessParams&, const WitnessParams&) = default;
};

inline constexpr std::uint32_t kWitnessMaxM = 3;
inline constexpr std::uint32_t kWitnessMaxN = 6;
inline constexpr std::uint32_t kWitnessMaxK = 64;

// An interval of the predicted order: the anchor, then the rest. Children
// partition members minus the anchor (empty at the innermost level).
struct WitnessBlock {
  Vertex anchor = kNoVertex;
  std::vector<Vertex> members;  // predicted order, anchor first
  std::vector<WitnessBlock> children;
};

struct WitnessBuild {
  WitnessParams params;
  OrderedGraph graph;
  Traversal predicted;
  std::vector<WitnessBlock> blocks;
};

// Input order type of the untruncated graph: w*m + n, or n+1 for the m = 0 path.
inline Ordinal witness_order_type(const WitnessParams& p) {
  if (p.m == 0) return Ordinal{std::uint64_t{p.n} + 1};
  return add(mul(Ordinal::omega(), Ordinal{std::uint64_t{p.m}}), Ordinal{std::uint64_t{p.n}});
}

namespace detail {

struct LocalBuild {
  std::size_t size = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> predicted;
  std::vector<WitnessBlock> blocks;
};

inline WitnessBlock remap_block(const WitnessBlock& b, const std::vector<Vertex>& to_global) {
  WitnessBlock out;
  out.anchor = to_global[b.anchor];
  out.members.reserve(b.members.size());
  for (Vertex v : b.members) out.members.push_back(to_global[v]);
  for (const auto& c : b.children) out.children.push_back(remap_block(c, to_global));
  return out;
}

inline LocalBuild build_local(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  LocalBuild out;
  if (m == 0 && n == 0) return out;
  const std::size_t r = (n > 0 || m == 0) ? n + 1 : k;
  const LocalBuild piece = (n > 0) ? build_local(m, 0, k) : build_local(m - 1, 0, k);
  const std::size_t p = piece.size;
  const std::size_t total = r * (1 + p);
  out.size = total;

  std::vector<Vertex> anchor(r);
  anchor[0] = 0;
  for (std::size_t i = 1; i < r; ++i) anchor[i] = static_cast<Vertex>(total - r + i);
  for (std::size_t i = 1; i < r; ++i) out.edges.emplace_back(anchor[i - 1], anchor[i]);

  std::vector<Vertex> to_global(p);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = 0; l < p; ++l) to_global[l] = static_cast<Vertex>(1 + l * r + i);
    if (p > 0) out.edges.emplace_back(anchor[i], to_global[0]);
    for (auto [a, b] : piece.edges) out.edges.emplace_back(to_global[a], to_global[b]);

    WitnessBlock block;
    block.anchor = anchor[i];
    block.members.push_back(anchor[i]);
    for (Vertex v : piece.predicted) block.members.push_back(to_global[v]);
    for (const auto& c : piece.blocks) block.children.push_back(remap_block(c, to_global));
    out.predicted.insert(out.predicted.end(), block.members.begin(), block.members.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace detail

inline void require_witness_envelope(const WitnessParams& p) {
  if (p.m + p.n < 1) throw std::invalid_argument("witness needs m + n >= 1");
  if (p.k < 1) throw std::invalid_argument("witness needs k >= 1");
  if (p.m > kWitnessMaxM || p.n > kWitnessMaxN || p.k > kWitnessMaxK)
    throw std::invalid_argument("witness parameters outside the supported envelope (m <= 3, n <= 6, k <= 64)");
}

inline WitnessBuild build_zeta_witness(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  WitnessParams params{m, n, k};
  require_witness_envelope(params);
  auto local = detail::build_local(m, n, k);
  WitnessBuild b;
  b.params = params;
  b.graph = OrderedGraph(local.size, local.edges);
  b.predicted.order = std::move(local.predicted);
  b.blocks = std::move(local.blocks);
  return b;
}

// Block counts along the first block at each nesting level.
inline std::vector<std::size_t> witness_profile(const WitnessBuild& b) {
  std::vector<std::size_t> out;
  const std::vector<WitnessBlock>* level = &b.blocks;
  while (!level->empty()) {
    out.push_back(level->size());
    level = &level->front().children;
  }
  return out;
}

// Shape predicted by zeta = w^e * c: a level of c blocks unless c = 1 (and
// e > 0), then e levels of k blocks.
inline std::vector<std::size_t> expected_witness_profile(const WitnessParams& p) {
  const Ordinal z = zeta(witness_order_type(p));
  const auto& lead = z.terms().front();
  const auto e = static_cast<std::size_t>(lead.exponent.to_natural());
  const auto c = static_cast<std::size_t>(lead.coefficient);
  std::vector<std::size_t> out;
  if (c > 1 || e == 0) out.push_back(c);
  out.insert(out.end(), e, p.k);
  return out;
}

// Index path of block positions from the outermost level down to the block
// the vertex anchors; one entry per level.
inline std::vector<std::vector<std::uint32_t>> witness_addresses(const WitnessBuild& b) {
  std::vector<std::vector<std::uint32_t>> out(b.graph.vertex_count());
  std::vector<std::uint32_t> path;
  auto walk = [&](auto&& self, const std::vector<WitnessBlock>& level) -> void {
    for (std::uint32_t i = 0; i < level.size(); ++i) {
      path.push_back(i);
      out[level[i].anchor] = path;
      self(self, level[i].children);
      path.pop_back();
    }
  };
  walk(walk, b.blocks);
  return out;
}

namespace detail {

inline bool blocks_are_intervals(const std::vector<WitnessBlock>& level,
                                 const std::vector<std::size_t>& pos, std::string& why) {
  for (const auto& blk : level) {
    std::size_t lo = pos.size(), hi = 0;
    for (Vertex v : blk.members) {
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    if (hi - lo + 1 != blk.members.size()) {
      why = "block anchored at " + std::to_string(blk.anchor) + " is not an interval";
      return false;
    }
    if (pos[blk.anchor] != lo) {
      why = "anchor " + std::to_string(blk.anchor) + " is not first in its block";
      return false;
    }
    std::size_t child_total = 0;
    for (const auto& c : blk.children) child_total += c.members.size();
    if (!blk.children.empty() && child_total + 1 != blk.members.size()) {
      why = "children of block " + std::to_string(blk.anchor) + " do not partition it";
      return false;
    }
    if (!blocks_are_intervals(blk.children, pos, why)) return false;
  }
  return true;
}

}  // namespace detail

inline std::vector<Verdict> verify_witness(const WitnessBuild& b) {
  std::vector<Verdict> out;
  const Traversal computed = algorithmic_traversal(b.graph);
  if (computed == b.predicted) {
    out.push_back(pass_verdict("witness-search"));
  } else {
    std::size_t i = 0;
    while (i < computed.size() && i < b.predicted.size() && computed[i] == b.predicted[i]) ++i;
    out.push_back(fail_verdict("witness-search", "first disagreement at position " + std::to_string(i)));
  }

  auto pos = positions_of(computed);
  std::string why;
  std::size_t covered = 0;
  for (const auto& blk : b.blocks) covered += blk.members.size();
  if (covered != b.graph.vertex_count()) why = "blocks do not cover the graph";
  if (why.empty() && detail::blocks_are_intervals(b.blocks, pos, why))
    out.push_back(pass_verdict("witness-blocks"));
  else
    out.push_back(fail_verdict("witness-blocks", why));

  std::vector<std::vector<Vertex>> parts;
  for (const auto& blk : b.blocks) parts.push_back(blk.members);
  try {
    auto v = verify_quotient_stability(b.graph, parts);
    v.check = "witness-quotient";
    out.push_back(v);
  } catch (const std::exception& e) {
    out.push_back(fail_verdict("witness-quotient", e.what()));
  }

  auto profile = witness_profile(b);
  auto expected = expected_witness_profile(b.params);
  auto show = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + ")";
  };
  std::string w = "profile " + show(profile) + " zeta " + to_string(zeta(witness_order_type(b.params)));
  out.push_back(profile == expected ? pass_verdict("witness-profile", w)
                                    : fail_verdict("witness-profile", w + " expected " + show(expected)));
  return out;
}

inline std::string witness_manifest(const WitnessBuild& b) {
  std::ostringstream os;
  const Ordinal alpha = witness_order_type(b.params);
  os << "witness m=" << b.params.m << " n=" << b.params.n << " k=" << b.params.k
     << " alpha=" << to_string(alpha) << " zeta=" << to_string(zeta(alpha)) << '\n';
  os << "# evidence: finite truncation with omega replaced by k; not a proof\n";
  os << serialize(b.graph);
  os << "predicted: " << to_string(b.predicted) << '\n';
  for (const auto& blk : b.blocks)
    os << "block: anchor=" << blk.anchor << " members=" << to_string(Traversal{blk.members}) << '\n';
  return os.str();
}

// g plus `extra` new input-greatest vertices, each joined only to vertex 0.
inline OrderedGraph build_padded_graph(const OrderedGraph& g, std::size_t extra) {
  require_connected(g);
  OrderedGraph out(g.vertex_count() + extra, g.edges());
  for (std::size_t i = 0; i < extra; ++i) out.add_edge(0, static_cast<Vertex>(g.vertex_count() + i));
  return out;
}

// Complete b-ary tree of depth d in level order: the children of v are b*v+1 .. b*v+b.
inline OrderedGraph build_bfs_tree_witness(std::uint32_t b, std::uint32_t d) {
  if (b < 2) throw std::invalid_argument("branching must be at least 2");
  if (d < 1) throw std::invalid_argument("depth must be at least 1");
  std::uint64_t width = 1, total = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    width *= b;
    if (width > 1'000'000) throw std::invalid_argument("tree exceeds the size envelope (b^d <= 10^6)");
    total += width;
  }
  OrderedGraph g(total);
  for (std::uint64_t v = 1; v < total; ++v)
    g.add_edge(static_cast<Vertex>((v - 1) / b), static_cast<Vertex>(v));
  return g;
}

}  // namespace ordsearch
