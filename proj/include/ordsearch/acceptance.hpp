#pragma once

// The acceptance criteria as runnable checks. Shared by the acceptance test
// binary and `ordsearch selftest`.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ordsearch/graph.hpp"
#include "ordsearch/ordinal.hpp"
#include "ordsearch/oracle.hpp"
#include "ordsearch/predicates.hpp"
#include "ordsearch/search.hpp"
#include "ordsearch/verdict.hpp"
#include "ordsearch/witness.hpp"

namespace ordsearch::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  std::string line() const {
    std::ostringstream os;
    os << "criterion " << id << " " << name << ": " << (pass ? "PASS" : "FAIL") << " ("
       << std::fixed << std::setprecision(3) << seconds << " s of " << limit_seconds << " s)";
    if (!detail.empty()) os << " [witness: " << detail << "]";
    return os.str();
  }
};

// Six-vertex graph: the 5-cycle 0-1-2-4-5-0 with vertex 3 hanging off 5.
inline OrderedGraph pendant_cycle_graph() {
  return OrderedGraph(6, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 0}, {3, 5}});
}

namespace detail {

// Body returns an empty string on success, otherwise a failure witness.
inline CriterionResult timed(int id, std::string name, double limit,
                             const std::function<std::string()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit_seconds = limit;
  const auto t0 = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = failure.empty() && r.seconds < limit;
  r.detail = failure.empty() && r.seconds >= limit ? "time limit exceeded" : failure;
  return r;
}

// Below w^4: w^3*a + w^2*b + w*c + d with small coefficients, zero often.
inline Ordinal sample_below_omega4(SplitMix64& rng, std::uint64_t max_coef = 6) {
  std::vector<OrdinalTerm> terms;
  for (std::uint64_t e = 4; e-- > 0;) {
    std::uint64_t c = rng.below(3) == 0 ? 0 : rng.below(max_coef + 1);
    if (c) terms.push_back(OrdinalTerm{Ordinal{e}, Natural{c}});
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace detail

inline CriterionResult golden_triple() {
  return detail::timed(1, "golden-triple", 1.0, []() -> std::string {
    const OrderedGraph g = pendant_cycle_graph();
    const Traversal beta = bfs_traversal(g);
    const Traversal tau = algorithmic_traversal(g);
    const Traversal beta_tau = map_back(bfs_traversal(relabel(g, tau)), tau);
    if (beta != Traversal{{0, 1, 5, 2, 3, 4}}) return "bfs = " + to_string(beta);
    if (tau != Traversal{{0, 1, 2, 4, 5, 3}}) return "search = " + to_string(tau);
    if (beta_tau != Traversal{{0, 1, 5, 2, 4, 3}}) return "bfs after search = " + to_string(beta_tau);
    return {};
  });
}

inline CriterionResult zeta_formula() {
  return detail::timed(2, "zeta-formula", 10.0, []() -> std::string {
    SplitMix64 rng(0x2e7a);
    const Ordinal one{1};
    for (int i = 0; i < 10000; ++i) {
      const Ordinal a = detail::sample_below_omega4(rng);
      // Closed form from the coefficients: a = w*beta + n with
      // beta = w^2*c3 + w*c2 + c1 and n = c0, so zeta = w^beta * (n+1).
      std::vector<Natural> c(4, 0);
      for (const auto& t : a.terms()) c[static_cast<std::size_t>(t.exponent.to_natural())] = t.coefficient;
      Ordinal expected;
      if (a.is_finite()) {
        expected = a;
      } else {
        std::vector<OrdinalTerm> beta;
        if (c[3] != 0) beta.push_back(OrdinalTerm{Ordinal{2}, c[3]});
        if (c[2] != 0) beta.push_back(OrdinalTerm{Ordinal{1}, c[2]});
        if (c[1] != 0) beta.push_back(OrdinalTerm{Ordinal{}, c[1]});
        expected = Ordinal::from_terms(
            {OrdinalTerm{Ordinal::from_terms(std::move(beta)), Natural{c[0] + 1}}});
      }
      if (zeta(a) != expected) return "zeta(" + to_string(a) + ") = " + to_string(zeta(a));

      const Ordinal b = detail::sample_below_omega4(rng);
      if (a <= b && !(zeta(a) <= zeta(b)))
        return "monotonicity at " + to_string(a) + ", " + to_string(b);
      // the bound needs a nonempty first summand (zeta(0) = 0)
      if (!a.is_zero() && !(zeta(a + b) <= zeta(a) * zeta(one + b)))
        return "sum bound at " + to_string(a) + ", " + to_string(b);
      if (a.is_limit() && zeta(a + b) != zeta(a) * zeta(one + b))
        return "product identity at " + to_string(a) + ", " + to_string(b);

      if (a.is_limit()) {
        const Ordinal za = zeta(a);
        Ordinal prev;
        for (std::uint64_t j = 0; j < 12; ++j) {
          const Ordinal zj = zeta(fundamental_sequence(a, j));
          if (j > 0 && !(prev < zj)) return "continuity: not increasing at " + to_string(a);
          if (!(zj < za)) return "continuity: not below zeta at " + to_string(a);
          prev = zj;
          const Ordinal target = fundamental_sequence(za, j);
          bool reached = false;
          for (std::uint64_t k = 0; k <= j + 8 && !reached; ++k)
            reached = target <= zeta(fundamental_sequence(a, k));
          if (!reached) return "continuity: interleaving fails at " + to_string(a);
        }
      }
    }
    return {};
  });
}

inline CriterionResult lex_colex_extremality() {
  return detail::timed(3, "lex-colex-extremality", 180.0, []() -> std::string {
    std::string failure;
    std::size_t six = 0;
    for (std::size_t n = 1; n <= 6 && failure.empty(); ++n) {
      oracle::for_each_connected_graph(n, [&](const OrderedGraph& g) {
        if (!failure.empty()) return;
        if (n == 6) ++six;
        const Traversal tau = algorithmic_traversal(g);
        const Traversal beta = bfs_traversal(g);
        auto all = enumerate_by_permutation_filter(g, TraversalKind::all, Vertex{0});
        auto bf = enumerate_by_permutation_filter(g, TraversalKind::breadth_first, Vertex{0});
        if (all.orders.empty() || all.orders.front() != tau) {
          failure = "lex-least differs on " + serialize(g);
          return;
        }
        if (all.orders.size() > 1 && all.orders[1] == tau) failure = "lex-least not unique";
        for (std::size_t i = 0; i < all.orders.size() && failure.empty(); ++i)
          if (all.orders[i] != tau && colex_compare_inverse(all.orders[i], tau) >= 0)
            failure = "colex-greatest fails: " + to_string(all.orders[i]);
        if (bf.orders.empty() || bf.orders.front() != beta) failure = "bfs lex-least differs";
      });
    }
    if (failure.empty() && six != 26704) failure = "counted " + std::to_string(six) + " graphs on 6 vertices";
    return failure;
  });
}

inline CriterionResult algorithm_equivalence() {
  return detail::timed(4, "alt-search-equivalence", 120.0, []() -> std::string {
    std::string failure;
    auto check = [&](const OrderedGraph& g) {
      for (Vertex s = 0; s < g.vertex_count() && failure.empty(); ++s)
        if (alt_search(g, s) != algorithmic_traversal(g, s))
          failure = "start " + std::to_string(s) + " on " + serialize(g);
    };
    for (std::size_t n = 1; n <= 6 && failure.empty(); ++n)
      oracle::for_each_connected_graph(n, [&](const OrderedGraph& g) {
        if (failure.empty()) check(g);
      });
    SplitMix64 rng(0xa17);
    for (int i = 0; i < 20000 && failure.empty(); ++i) check(oracle::random_labeled_connected_graph(7, rng));
    for (int i = 0; i < 1000 && failure.empty(); ++i) {
      const std::size_t n = 1 + rng.below(14);
      const double density = 0.05 + 0.9 * rng.unit();
      check(random_connected_graph(n, density, rng.next()));
    }
    return failure;
  });
}

inline CriterionResult fixed_point_laws() {
  return detail::timed(5, "fixed-point-laws", 60.0, []() -> std::string {
    SplitMix64 rng(0xf1c5);
    for (int i = 0; i < 5000; ++i) {
      const std::size_t n = 1 + rng.below(20);
      const OrderedGraph g = random_connected_graph(n, 0.05 + 0.6 * rng.unit(), rng.next());
      const Traversal id = identity_order(n);
      // A graph whose input order is already a traversal.
      const Traversal t = oracle::random_traversal(g, rng, static_cast<Vertex>(rng.below(n)));
      if (algorithmic_traversal(relabel(g, t)) != id) return "search fixes traversals: " + serialize(g);
      const Traversal tau = algorithmic_traversal(g);
      if (algorithmic_traversal(relabel(g, tau)) != id) return "idempotence: " + serialize(g);
      const Traversal beta = bfs_traversal(g);
      if (algorithmic_traversal(relabel(g, beta)) != id) return "beta = tau o beta: " + serialize(g);
      if (algorithmic_traversal(traversal_tree(g, tau)) != tau) return "search tree: " + serialize(g);
      if (bfs_traversal(traversal_tree(g, beta)) != beta) return "bfs tree: " + serialize(g);
    }
    return {};
  });
}

inline std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> witness_parameter_grid() {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t m = 0; m <= 2; ++m)
    for (std::uint32_t n = 0; n <= 3; ++n)
      for (std::uint32_t k = 1; k <= 20; ++k)
        if (m + n >= 1) out.emplace_back(m, n, k);
  for (std::uint32_t n = 0; n <= 1; ++n)
    for (std::uint32_t k = 1; k <= 8; ++k) out.emplace_back(3, n, k);
  return out;
}

inline CriterionResult stability_theorems() {
  return detail::timed(6, "stability-theorems", 60.0, []() -> std::string {
    SplitMix64 rng(0x57ab);
    std::size_t checked = 0;
    while (checked < 10000) {
      const std::size_t n = 1 + rng.below(12);
      const OrderedGraph g = random_connected_graph(n, 0.05 + 0.5 * rng.unit(), rng.next());
      for (const auto& w : closure_samples(g, rng.next(), 16)) {
        auto v = verify_subset_stability(g, w);
        if (!v) return v.line();
        ++checked;
      }
    }
    for (auto [m, n, k] : witness_parameter_grid()) {
      const WitnessBuild b = build_zeta_witness(m, n, k);
      std::vector<std::vector<Vertex>> parts;
      for (const auto& blk : b.blocks) parts.push_back(blk.members);
      auto v = verify_quotient_stability(b.graph, parts);
      if (!v) return v.line();
    }
    return {};
  });
}

inline CriterionResult witness_suite() {
  return detail::timed(7, "witness-suite", 60.0, []() -> std::string {
    for (auto [m, n, k] : witness_parameter_grid()) {
      const WitnessBuild b = build_zeta_witness(m, n, k);
      for (const auto& v : verify_witness(b))
        if (!v)
          return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ") " + v.line();
    }
    return {};
  });
}

inline CriterionResult bfs_level_structure() {
  return detail::timed(8, "bfs-level-structure", 30.0, []() -> std::string {
    SplitMix64 rng(0xb4f5);
    for (std::uint32_t b = 2; b <= 4; ++b)
      for (std::uint32_t d = 1; d <= 6; ++d) {
        const OrderedGraph tree = build_bfs_tree_witness(b, d);
        for (int trial = 0; trial < 50; ++trial) {
          const Traversal relabeling = oracle::random_permutation(tree.vertex_count(), rng);
          const OrderedGraph g = relabel(tree, relabeling);
          const Vertex root = static_cast<Vertex>(positions_of(relabeling)[0]);
          const std::string where = "b=" + std::to_string(b) + " d=" + std::to_string(d);
          for (const Traversal& order : {bfs_traversal(g, root), oracle::random_bfs_traversal(g, rng, root)}) {
            if (!is_breadth_first(g, order)) return "not breadth-first at " + where;
            const auto ld = level_decomposition(g, order, root);
            if (!ld.all_checks_pass()) return "level checks fail at " + where;
            if (ld.levels.size() != d + 1) return "level count at " + where;
            std::size_t width = 1;
            for (const auto& level : ld.levels) {
              if (level.size() != width) return "level size at " + where;
              width *= b;
            }
          }
        }
      }
    return {};
  });
}

inline CriterionResult predicate_equivalences() {
  return detail::timed(9, "predicate-equivalences", 30.0, []() -> std::string {
    std::string failure;
    for (std::size_t n = 1; n <= 5 && failure.empty(); ++n)
      oracle::for_each_connected_graph(n, [&](const OrderedGraph& g) {
        if (!failure.empty()) return;
        Traversal t = identity_order(n);
        do {
          const bool trav = is_traversal(g, t);
          if (trav != has_decreasing_neighbors(g, t)) {
            failure = "traversal vs decreasing at " + to_string(t);
            return;
          }
          if (trav && is_breadth_first(g, t) != has_monotone_parents(g, t)) {
            failure = "triple vs monotone at " + to_string(t);
            return;
          }
        } while (std::next_permutation(t.order.begin(), t.order.end()));
      });
    return failure;
  });
}

inline std::vector<CriterionResult> run_all(std::ostream* progress = nullptr) {
  std::vector<CriterionResult> out;
  for (auto* fn : {&golden_triple, &zeta_formula, &lex_colex_extremality, &algorithm_equivalence,
                   &fixed_point_laws, &stability_theorems, &witness_suite, &bfs_level_structure,
                   &predicate_equivalences}) {
    out.push_back(fn());
    if (progress) *progress << out.back().line() << std::endl;
  }
  return out;
}

}  // namespace ordsearch::acceptance
