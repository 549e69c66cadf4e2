#include <gtest/gtest.h>

#include "ordsearch/oracle.hpp"
#include "ordsearch/predicates.hpp"
#include "ordsearch/witness.hpp"

using namespace ordsearch;

namespace {

OrderedGraph pendant6() { return OrderedGraph(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 0}, {3, 5}}); }
OrderedGraph path(std::size_t n) {
  OrderedGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}
OrderedGraph triangle() { return OrderedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
OrderedGraph star(std::size_t leaves) {
  OrderedGraph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}
Traversal T(std::initializer_list<Vertex> xs) { return Traversal{xs}; }
std::vector<Traversal> Ts(std::initializer_list<std::initializer_list<Vertex>> xs) {
  std::vector<Traversal> out;
  for (auto x : xs) out.push_back(T(x));
  return out;
}

}  // namespace

TEST(Predicates, TraversalAndDecreasingNeighbors) {
  EXPECT_TRUE(has_decreasing_neighbors(path(3), T({0, 1, 2})));
  EXPECT_FALSE(has_decreasing_neighbors(path(3), T({0, 2, 1})));
  EXPECT_THROW(has_decreasing_neighbors(path(3), T({0, 1})), std::invalid_argument);
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_connected_graph(n, [](const OrderedGraph& g) {
      Traversal t = identity_order(g.vertex_count());
      do ASSERT_EQ(is_traversal(g, t), has_decreasing_neighbors(g, t));
      while (std::next_permutation(t.order.begin(), t.order.end()));
    });
}

TEST(Predicates, BreadthFirst) {
  EXPECT_TRUE(is_breadth_first(pendant6(), T({0, 1, 5, 2, 3, 4})));
  EXPECT_FALSE(is_breadth_first(pendant6(), T({0, 1, 2, 4, 5, 3})));
  EXPECT_FALSE(has_monotone_parents(pendant6(), T({0, 1, 2, 4, 5, 3})));
  EXPECT_TRUE(is_breadth_first(star(3), T({0, 2, 3, 1})));
  EXPECT_THROW(is_breadth_first(path(3), T({0, 2, 1})), std::invalid_argument);
}

TEST(Predicates, DepthFirst) {
  EXPECT_TRUE(is_depth_first(path(3), T({0, 1, 2})));
  EXPECT_TRUE(is_depth_first(star(3), T({0, 1, 2, 3})));
  EXPECT_FALSE(is_depth_first(pendant6(), T({0, 1, 5, 2, 3, 4})));
  EXPECT_TRUE(is_depth_first(pendant6(), T({0, 1, 2, 4, 5, 3})));
  EXPECT_THROW(is_depth_first(path(3), T({0, 2, 1})), std::invalid_argument);
}

TEST(Predicates, BreadthFirstFormsAgree) {
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_connected_graph(n, [](const OrderedGraph& g) {
      for (const auto& t : enumerate_traversals(g, TraversalKind::all).orders)
        ASSERT_EQ(is_breadth_first(g, t), has_monotone_parents(g, t)) << serialize(g) << to_string(t);
    });
}

TEST(Predicates, Comparators) {
  EXPECT_EQ(lex_compare(T({0, 1, 2}), T({0, 2, 1})), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(T({2, 0, 1}), T({2, 0, 1})), std::strong_ordering::equal);
  EXPECT_EQ(lex_compare(T({0, 1, 5, 2, 3, 4}), T({0, 1, 5, 2, 4, 3})), std::strong_ordering::less);
  EXPECT_THROW(lex_compare(T({0}), T({0, 1})), std::invalid_argument);

  EXPECT_EQ(colex_compare_inverse(T({0, 1, 2}), T({1, 0, 2})), std::strong_ordering::greater);
  EXPECT_EQ(colex_compare_inverse(T({1, 0, 2}), T({1, 0, 2})), std::strong_ordering::equal);
  EXPECT_EQ(colex_compare_inverse(T({1, 2, 0}), T({2, 1, 0})), std::strong_ordering::greater);
  EXPECT_THROW(colex_compare_inverse(T({0, 1}), T({0, 1, 2})), std::invalid_argument);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_traversals(triangle(), TraversalKind::all, Vertex{0}).orders, Ts({{0, 1, 2}, {0, 2, 1}}));
  EXPECT_EQ(enumerate_traversals(path(3), TraversalKind::all).orders,
            Ts({{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}}));
  EXPECT_EQ(enumerate_traversals(triangle(), TraversalKind::all).size(), 6u);
  EXPECT_THROW(enumerate_traversals(OrderedGraph(2), TraversalKind::all), std::invalid_argument);
}

TEST(Enumerate, MatchesPermutationFilter) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t graphs = 0;
    oracle::for_each_connected_graph(n, [&](const OrderedGraph& g) {
      // every graph for n <= 5, every 7th for n = 6
      if (n == 6 && graphs++ % 7 != 0) return;
      for (auto kind : {TraversalKind::all, TraversalKind::breadth_first, TraversalKind::depth_first}) {
        auto tree = enumerate_traversals(g, kind);
        auto filter = enumerate_by_permutation_filter(g, kind);
        ASSERT_EQ(tree.orders, filter.orders) << serialize(g) << to_string(kind);
        for (const auto& t : tree.orders) ASSERT_TRUE(satisfies(g, t, kind));
        if (kind == TraversalKind::all) {
          ASSERT_FALSE(tree.orders.empty());
        }
      }
    });
  }
}

TEST(Enumerate, SmallSevenVertexGraphsMatchFilter) {
  SplitMix64 rng(7);
  for (int i = 0; i < 15; ++i) {
    const OrderedGraph g = oracle::random_labeled_connected_graph(7, rng);
    for (auto kind : {TraversalKind::all, TraversalKind::breadth_first, TraversalKind::depth_first})
      ASSERT_EQ(enumerate_traversals(g, kind, Vertex{0}).orders,
                enumerate_by_permutation_filter(g, kind, Vertex{0}).orders);
  }
}

TEST(Extremality, Examples) {
  auto k3 = verify_lex_min(triangle());
  EXPECT_TRUE(k3.pass);
  EXPECT_NE(k3.witness.find("0 1 2"), std::string::npos);
  EXPECT_TRUE(verify_lex_min(pendant6()).pass);
  EXPECT_TRUE(verify_colex_max(path(3)).pass);
  EXPECT_TRUE(verify_colex_max(pendant6()).pass);

  // over every traversal of the path, not just those from 0
  const Traversal tau = algorithmic_traversal(path(3));
  for (const auto& t : enumerate_traversals(path(3), TraversalKind::all).orders)
    if (t != tau) {
      EXPECT_EQ(colex_compare_inverse(tau, t), std::strong_ordering::greater);
    }
}

TEST(Extremality, ExhaustiveFiveVertices) {
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_connected_graph(n, [](const OrderedGraph& g) {
      ASSERT_TRUE(verify_lex_min(g).pass) << serialize(g);
      ASSERT_TRUE(verify_colex_max(g).pass) << serialize(g);
    });
}

TEST(Extremality, VerdictLine) {
  EXPECT_EQ(pass_verdict("lexmin").line(), "lexmin: PASS");
  EXPECT_EQ(fail_verdict("traversal", "prefix {0,2} is disconnected").line(),
            "traversal: FAIL [witness: prefix {0,2} is disconnected]");
}

TEST(Stability, Closures) {
  using W = std::vector<Vertex>;
  EXPECT_EQ(p_star_closure(pendant6(), {0}), W({0}));
  EXPECT_EQ(p_star_closure(pendant6(), {4}), W({0, 1, 2, 4}));
  EXPECT_EQ(p_star_closure(pendant6(), {0, 1, 2, 3, 4, 5}), W({0, 1, 2, 3, 4, 5}));
}

TEST(Stability, SubsetExamples) {
  EXPECT_TRUE(verify_subset_stability(pendant6(), {0, 1, 2, 3, 4, 5}).pass);
  EXPECT_TRUE(verify_subset_stability(pendant6(), {0, 1, 2, 4}).pass);
  EXPECT_TRUE(verify_subset_stability(pendant6(), {5, 3}).pass);  // closed except at 5
  try {
    verify_subset_stability(pendant6(), {0, 4});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("p*(4)"), std::string::npos);
  }
}

TEST(Stability, SampledSubsets) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const OrderedGraph g = random_connected_graph(1 + seed % 12, 0.1 + (seed % 4) / 10.0, seed);
    for (const auto& w : closure_samples(g, seed, 16)) ASSERT_TRUE(verify_subset_stability(g, w).pass);
  }
}

TEST(Stability, QuotientExamples) {
  std::vector<std::vector<Vertex>> singletons;
  for (Vertex v = 0; v < 6; ++v) singletons.push_back({v});
  EXPECT_TRUE(verify_quotient_stability(pendant6(), singletons).pass);
  EXPECT_TRUE(verify_quotient_stability(pendant6(), {{0, 1, 2, 3, 4, 5}}).pass);
  EXPECT_TRUE(verify_quotient_stability(pendant6(), {{0, 1, 2, 4}, {5, 3}}).pass);

  auto clause = [](const std::vector<std::vector<Vertex>>& parts) {
    try {
      verify_quotient_stability(pendant6(), parts);
    } catch (const std::invalid_argument& e) {
      std::string s = e.what();
      return s.substr(0, s.find(':'));
    }
    return std::string("none");
  };
  EXPECT_EQ(clause({{0, 1, 2}, {4, 5}}), "partition");
  EXPECT_EQ(clause({{0, 2, 1, 3}, {4, 5}}), "interval");
  EXPECT_EQ(clause({{0, 1}, {2, 4, 5}, {3}}), "closed");
  EXPECT_EQ(clause({{0}, {1, 2, 4, 5, 3}}), "closed");
}

TEST(Stability, QuotientOnWitnessBlocks) {
  for (std::uint32_t m = 0; m <= 2; ++m)
    for (std::uint32_t n = 0; n <= 3; ++n)
      for (std::uint32_t k = 1; k <= 5; ++k) {
        if (m + n == 0) continue;
        auto b = build_zeta_witness(m, n, k);
        std::vector<std::vector<Vertex>> parts;
        for (const auto& blk : b.blocks) parts.push_back(blk.members);
        ASSERT_TRUE(verify_quotient_stability(b.graph, parts).pass);
      }
}

TEST(Levels, Examples) {
  const OrderedGraph t = build_bfs_tree_witness(2, 2);
  auto d = level_decomposition(t, bfs_traversal(t), 0);
  ASSERT_EQ(d.levels.size(), 3u);
  EXPECT_EQ(d.levels[0].size(), 1u);
  EXPECT_EQ(d.levels[1].size(), 2u);
  EXPECT_EQ(d.levels[2].size(), 4u);
  EXPECT_TRUE(d.acyclic);
  EXPECT_TRUE(d.all_checks_pass());

  auto one = level_decomposition(OrderedGraph(1), identity_order(1), 0);
  ASSERT_EQ(one.levels.size(), 1u);
  EXPECT_EQ(one.levels[0], std::vector<Vertex>{0});

  auto p = level_decomposition(path(4), T({3, 2, 1, 0}), 3);
  ASSERT_EQ(p.levels.size(), 4u);
  for (Vertex i = 0; i < 4; ++i) EXPECT_EQ(p.levels[i], std::vector<Vertex>{3 - i});
  EXPECT_TRUE(p.all_checks_pass());

  auto cyc = level_decomposition(pendant6(), bfs_traversal(pendant6()), 0);
  EXPECT_FALSE(cyc.acyclic);
  EXPECT_FALSE(cyc.levels_are_intervals.has_value());

  EXPECT_THROW(level_decomposition(pendant6(), T({0, 1, 2, 4, 5, 3}), 0), std::invalid_argument);
  EXPECT_THROW(level_decomposition(path(3), T({0, 1, 2}), 1), std::invalid_argument);
}
