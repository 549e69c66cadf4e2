#include <gtest/gtest.h>

#include "ordsearch/oracle.hpp"
#include "ordsearch/predicates.hpp"
#include "ordsearch/search.hpp"

using namespace ordsearch;

namespace {

OrderedGraph pendant6() { return OrderedGraph(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 0}, {3, 5}}); }
OrderedGraph path(std::size_t n) {
  OrderedGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}
OrderedGraph triangle() { return OrderedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Traversal T(std::initializer_list<Vertex> xs) { return Traversal{xs}; }

}  // namespace

TEST(Search, DeterministicExamples) {
  EXPECT_EQ(deterministic_search(path(3)).visit_order, T({0, 1, 2}));
  EXPECT_EQ(deterministic_search(pendant6()).visit_order, T({0, 1, 2, 4, 5, 3}));
  EXPECT_EQ(oracle::stagewise_search(pendant6()), T({0, 1, 2, 4, 5, 3}));
  const OrderedGraph g(4, {{0, 3}, {3, 1}, {1, 2}});
  EXPECT_EQ(deterministic_search(g).visit_order, T({0, 3, 1, 2}));
  EXPECT_EQ(oracle::stagewise_search(g), T({0, 3, 1, 2}));
}

TEST(Search, DisconnectedInputRejected) {
  const OrderedGraph g(3, {{0, 1}});
  try {
    deterministic_search(g);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
  EXPECT_THROW(bfs_search(g), std::invalid_argument);
  EXPECT_THROW(alt_search(g), std::invalid_argument);
  EXPECT_THROW(deterministic_search(path(3), 3), std::out_of_range);
}

TEST(Search, BfsExamples) {
  EXPECT_EQ(bfs_search(pendant6()).visit_order, T({0, 1, 5, 2, 3, 4}));
  EXPECT_EQ(oracle::stagewise_bfs(pendant6()), T({0, 1, 5, 2, 3, 4}));
  const Traversal tau{{0, 1, 2, 4, 5, 3}};
  EXPECT_EQ(map_back(bfs_traversal(relabel(pendant6(), tau)), tau), T({0, 1, 5, 2, 4, 3}));
  EXPECT_EQ(bfs_traversal(path(3)), T({0, 1, 2}));
}

TEST(Search, TraceFormats) {
  const std::string s = format_trace(deterministic_search(pendant6()));
  EXPECT_EQ(s,
            "stage 0: pick 0 from {0}\n"
            "stage 1: pick 1 from {1,5}\n"
            "stage 2: pick 2 from {2,5}\n"
            "stage 3: pick 4 from {4,5}\n"
            "stage 4: pick 5 from {5}\n"
            "stage 5: pick 3 from {3}\n");
  const std::string b = format_trace(bfs_search(pendant6()));
  EXPECT_EQ(b,
            "stage 0: B=0 Q=(0) q=0\n"
            "stage 1: B=1 Q=(0 1 5) q=1\n"
            "stage 2: B=2 Q=(0 1 5 2) q=5\n"
            "stage 3: B=3 Q=(0 1 5 2 3 4) q=2\n"
            "stage 4: B=4 Q=(0 1 5 2 3 4) q=3\n"
            "stage 5: B=5 Q=(0 1 5 2 3 4) q=4\n");
  EXPECT_TRUE(deterministic_search(pendant6(), 0, false).stages.empty());
}

TEST(Search, TraceInvariants) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const OrderedGraph g = random_connected_graph(1 + seed % 15, 0.3, seed);
    const auto st = deterministic_search(g);
    ASSERT_EQ(st.stages.size(), g.vertex_count());
    for (std::size_t i = 0; i < st.stages.size(); ++i) {
      ASSERT_EQ(st.stages[i].picked, st.visit_order[i]);
      ASSERT_EQ(st.stages[i].frontier.front(), st.stages[i].picked);
    }
    const auto bt = bfs_search(g);
    ASSERT_EQ(bt.stage_count(), g.vertex_count());
    for (std::size_t i = 0; i < bt.stage_count(); ++i) {
      ASSERT_GT(bt.queue_length[i], i);  // B_i is a proper prefix of Q_i
      if (i > 0) {
        ASSERT_GE(bt.queue_length[i], bt.queue_length[i - 1]);
      }
    }
    ASSERT_EQ(Traversal{bt.queue}, bt.visit_order);
  }
}

TEST(Search, AltSearchExamples) {
  EXPECT_EQ(alt_search(pendant6()), T({0, 1, 2, 4, 5, 3}));
  EXPECT_EQ(alt_search(path(3)), T({0, 1, 2}));
  EXPECT_EQ(alt_search(triangle()), T({0, 1, 2}));
  EXPECT_EQ(alt_search(OrderedGraph(1)), T({0}));
  AltSearchStats st;
  alt_search(pendant6(), 0, &st);
  EXPECT_GT(st.splits, 0u);
  EXPECT_GT(st.edges_scanned, 0u);
}

TEST(Search, AltSearchLongPathUsesNoRecursion) {
  // From the top end every split peels one vertex off a chain n-1 levels deep.
  const std::size_t n = 100000;
  OrderedGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  const Traversal back = alt_search(g, static_cast<Vertex>(n - 1));
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(back[i], n - 1 - i);

  // From vertex 0 each split explores the whole remaining path, so keep it smaller.
  OrderedGraph h(4000);
  for (Vertex v = 1; v < 4000; ++v) h.add_edge(v - 1, v);
  EXPECT_EQ(alt_search(h, 0), identity_order(4000));
}

TEST(Search, AltSearchMatchesDeterministicAllStarts) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const OrderedGraph g = random_connected_graph(1 + seed % 14, 0.1 + (seed % 5) / 10.0, seed);
    for (Vertex s = 0; s < g.vertex_count(); ++s)
      ASSERT_EQ(alt_search(g, s), algorithmic_traversal(g, s)) << serialize(g) << "start " << s;
  }
}

TEST(Search, MatchesStagewiseOracles) {
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_connected_graph(n, [](const OrderedGraph& g) {
      for (Vertex s = 0; s < g.vertex_count(); ++s) {
        ASSERT_EQ(algorithmic_traversal(g, s), oracle::stagewise_search(g, s));
        ASSERT_EQ(bfs_traversal(g, s), oracle::stagewise_bfs(g, s));
      }
    });
}

TEST(Search, LeastNeighborMap) {
  auto p = least_neighbor_map(pendant6(), T({0, 1, 2, 4, 5, 3}));
  EXPECT_EQ(p.root, 0u);
  EXPECT_EQ(p[0], kNoVertex);
  EXPECT_EQ(p[1], 0u);
  EXPECT_EQ(p[2], 1u);
  EXPECT_EQ(p[4], 2u);
  EXPECT_EQ(p[5], 0u);
  EXPECT_EQ(p[3], 5u);
  auto q = least_neighbor_map(path(5), identity_order(5));
  for (Vertex v = 1; v < 5; ++v) EXPECT_EQ(q[v], v - 1);
  auto r = least_neighbor_map(triangle(), identity_order(3));
  EXPECT_EQ(r[1], 0u);
  EXPECT_EQ(r[2], 0u);
  EXPECT_THROW(least_neighbor_map(OrderedGraph(2), identity_order(2)), std::invalid_argument);
}

TEST(Search, TraversalTree) {
  EXPECT_EQ(traversal_tree(pendant6(), T({0, 1, 2, 4, 5, 3})),
            OrderedGraph(6, {{0, 1}, {1, 2}, {2, 4}, {0, 5}, {5, 3}}));
  EXPECT_EQ(traversal_tree(path(4), identity_order(4)), path(4));
  EXPECT_EQ(traversal_tree(triangle(), identity_order(3)), OrderedGraph(3, {{0, 1}, {0, 2}}));
  EXPECT_THROW(traversal_tree(path(3), T({0, 2, 1})), std::invalid_argument);
}

TEST(Search, Laws) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const OrderedGraph g = random_connected_graph(1 + seed % 20, 0.05 + (seed % 6) / 10.0, seed);
    const std::size_t n = g.vertex_count();
    const Traversal tau = algorithmic_traversal(g), beta = bfs_traversal(g);
    if (is_traversal(g, identity_order(n))) {
      ASSERT_EQ(tau, identity_order(n));
    }
    ASSERT_EQ(algorithmic_traversal(relabel(g, tau)), identity_order(n));
    ASSERT_EQ(algorithmic_traversal(relabel(g, beta)), identity_order(n));
    const OrderedGraph tt = traversal_tree(g, tau);
    ASSERT_EQ(tt.edge_count(), n - 1);
    ASSERT_TRUE(is_connected(tt));
    ASSERT_TRUE(is_acyclic(tt));
    for (auto [u, v] : tt.edges()) ASSERT_TRUE(g.has_edge(u, v));
    ASSERT_EQ(algorithmic_traversal(tt), tau);
    ASSERT_EQ(bfs_traversal(traversal_tree(g, beta)), beta);

    // least-neighbor maps of runs point strictly backwards
    for (const Traversal* t : {&tau, &beta}) {
      ASSERT_TRUE(is_traversal(g, *t));
      auto p = least_neighbor_map(g, *t);
      auto pos = positions_of(*t);
      for (Vertex v = 0; v < n; ++v)
        if (v != p.root) {
          ASSERT_LT(pos[p[v]], pos[v]);
        }
    }
  }
}

TEST(Search, FirstDisconnectedPrefix) {
  EXPECT_EQ(first_disconnected_prefix(path(3), T({0, 2, 1})), std::optional<std::size_t>{2});
  EXPECT_EQ(first_disconnected_prefix(path(3), T({1, 0, 2})), std::nullopt);
  EXPECT_TRUE(is_traversal(pendant6(), T({0, 1, 5, 2, 3, 4})));
  EXPECT_FALSE(is_traversal(path(3), T({0, 2, 1})));
  EXPECT_THROW(is_traversal(path(3), T({0, 0, 1})), std::invalid_argument);
}
