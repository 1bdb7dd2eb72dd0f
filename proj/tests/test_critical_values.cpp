#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropspec/critical_values.hpp"

#include "tropspec/asymptotics.hpp"
#include "tropspec/tropical_core.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace tropspec;
using fixtures::fin;
using fixtures::from_rows;
using fixtures::inf;

TEST_CASE("four-node decomposition") {
  CriticalDecomposition dec = critical_sequence(fixtures::ex_critic_exponents());
  REQUIRE(dec.k == 3);
  CHECK(dec.alphas == std::vector<TropScalar>{fin(0), fin(2), fin(4)});
  CHECK(dec.classes[0] == std::vector<int>{0, 1});
  CHECK(dec.classes[1] == std::vector<int>{2});
  CHECK(dec.classes[2] == std::vector<int>{3});
  CHECK(dec.schur_matrices[1] == from_rows({{fin(2), fin(2)}, {fin(4), fin(5)}}));
  CHECK(dec.schur_labels[1] == std::vector<int>{2, 3});
  CHECK(dec.schur_matrices[2] == from_rows({{fin(4)}}));
  CHECK(dec.beta == RootSequence{fin(0), fin(0), fin(2), fin(4)});

  CHECK(dec.diag_exponents[1] ==
        TropVector{fin(0), fin(0), fin(2), fin(2)});
  CHECK(dec.diag_exponents[2] ==
        TropVector{fin(0), fin(0), fin(2), fin(4)});
  CHECK(dec.normalized[1] == from_rows({{inf(), fin(0), inf(), inf()},
                                        {fin(0), inf(), fin(1), inf()},
                                        {fin(-1), inf(), inf(), fin(0)},
                                        {inf(), inf(), fin(2), fin(3)}}));
  CHECK(dec.normalized[2] == from_rows({{inf(), fin(0), inf(), inf()},
                                        {fin(0), inf(), fin(1), inf()},
                                        {fin(-1), inf(), inf(), fin(0)},
                                        {inf(), inf(), fin(0), fin(1)}}));

  SUBCASE("order-l critical graphs grow by one circuit per level") {
    Digraph g1 = critical_graph_order(dec, 1);
    CHECK(g1 == critical_graph(fixtures::ex_critic_exponents()));

    Digraph g2 = critical_graph_order(dec, 2);
    Digraph expect2 = g1;
    expect2.add_arc(1, 2);
    expect2.add_arc(2, 0);
    CHECK(g2 == expect2);

    Digraph g3 = critical_graph_order(dec, 3);
    Digraph expect3 = expect2;
    expect3.add_arc(2, 3);
    expect3.add_arc(3, 2);
    CHECK(g3 == expect3);

    CHECK_THROWS_AS(critical_graph_order(dec, 0), DimensionError);
    CHECK_THROWS_AS(critical_graph_order(dec, 4), DimensionError);
  }
}

TEST_CASE("canonical three-node decomposition") {
  CriticalDecomposition dec =
      critical_sequence(fixtures::ex_canonical_exponents());
  REQUIRE(dec.k == 2);
  CHECK(dec.alphas == std::vector<TropScalar>{fin(0), fin(2)});
  CHECK(dec.classes[0] == std::vector<int>{0});
  CHECK(dec.classes[1] == std::vector<int>{1, 2});
  CHECK(dec.schur_matrices[1] == from_rows({{fin(2), fin(4)}, {fin(4), fin(2)}}));
}

TEST_CASE("reducible input is rejected") {
  TropMatrix a = from_rows({{fin(0), fin(1)}, {inf(), fin(0)}});
  CHECK_THROWS_AS(critical_sequence(a), ReducibleMatrixError);
}

TEST_CASE("Jordan-structure exponent matrices decompose by block size") {
  SUBCASE("two blocks, generic") {
    NilSpec spec{{1, 1}, {3, 2}};
    CriticalDecomposition dec = critical_sequence(anil_exponents(spec));
    REQUIRE(dec.k == 2);
    CHECK(dec.alphas == std::vector<TropScalar>{fin(1, 3), fin(1, 2)});
    CHECK(dec.classes[0] == std::vector<int>{0, 1, 2});
    CHECK(dec.classes[1] == std::vector<int>{3, 4});
  }
  SUBCASE("degenerate five-node variant merges into one class") {
    TropMatrix a = anil_exponents(NilSpec{{1, 1}, {3, 2}});
    a.at(2, 0) = inf();  // the classical pivot entry vanishes
    CriticalDecomposition dec = critical_sequence(a);
    REQUIRE(dec.k == 1);
    CHECK(dec.alphas == std::vector<TropScalar>{fin(2, 5)});
    CHECK(dec.classes[0] == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("random specs follow the block recursion") {
    oracles::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      NilSpec spec;
      int qmax = rng.uniform(1, 4);
      for (int q = qmax; q >= 1; --q)
        if (q == qmax || rng.uniform(0, 1)) {
          spec.q.push_back(q);
          spec.m.push_back(rng.uniform(1, 2));
        }
      if (spec.size() > 12) continue;
      CriticalDecomposition dec = critical_sequence(anil_exponents(spec));
      REQUIRE(dec.k == static_cast<int>(spec.q.size()));
      int offset = 0;
      for (int ell = 0; ell < dec.k; ++ell) {
        CHECK(dec.alphas[ell] == TropScalar(Rational(1, spec.q[ell])));
        int block = spec.m[ell] * spec.q[ell];
        std::vector<int> expect(block);
        std::iota(expect.begin(), expect.end(), offset);
        CHECK(dec.classes[ell] == expect);
        offset += block;
      }
    }
  }
}

TEST_CASE("disjoint circuit covers") {
  SUBCASE("hamiltonian cycle") {
    Digraph g({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(disjoint_circuit_cover(g));
  }
  SUBCASE("isolated node") {
    Digraph g({0, 1}, {{0, 0}});
    CHECK_FALSE(disjoint_circuit_cover(g));
  }
  SUBCASE("empty graph counts as covered") {
    CHECK(disjoint_circuit_cover(Digraph{}));
  }
  SUBCASE("matching agrees with permutation enumeration") {
    oracles::Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
      int n = rng.uniform(1, 7);
      std::vector<int> nodes(n);
      std::iota(nodes.begin(), nodes.end(), 0);
      std::vector<std::pair<int, int>> arcs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rng.uniform(0, 99) < 30) arcs.emplace_back(i, j);
      Digraph g(nodes, arcs);
      CHECK(disjoint_circuit_cover(g) == oracles::brute_circuit_cover(g));
    }
  }
}

TEST_CASE("per-level root comparison on the four-node fixture") {
  GammaBetaReport report =
      gamma_equals_beta_blocks(fixtures::ex_critic_exponents());
  CHECK(report.gamma_equals_beta);
  CHECK(report.gamma == RootSequence{fin(0), fin(0), fin(2), fin(4)});
  REQUIRE(report.levels.size() == 3);
  for (const GammaBetaLevel& lvl : report.levels) {
    CHECK(lvl.covers);
    CHECK(lvl.block_equal);
  }
}

TEST_CASE("trivial one-by-one comparison") {
  GammaBetaReport report = gamma_equals_beta_blocks(from_rows({{fin(3)}}));
  CHECK(report.gamma_equals_beta);
  REQUIRE(report.levels.size() == 1);
  CHECK(report.levels[0].covers);
}

TEST_CASE("properties on random irreducible matrices") {
  oracles::Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform(2, 7);
    TropMatrix a = oracles::random_irreducible(rng, n, 5, 2);
    CriticalDecomposition dec = critical_sequence(a);

    SUBCASE("") {}  // keep doctest from collapsing the loop body

    // classes partition the node set
    std::vector<int> all = dec.cumulative(dec.k);
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(all == expect);

    // strictly increasing critical values
    for (int ell = 1; ell < dec.k; ++ell)
      CHECK(dec.alphas[ell - 1] < dec.alphas[ell]);

    // nested critical graphs with node sets C^ell
    for (int ell = 1; ell <= dec.k; ++ell) {
      const Digraph& g = dec.crit_graphs[ell - 1];
      CHECK(g.nodes() == dec.cumulative(ell));
      if (ell > 1) CHECK(g.contains(dec.crit_graphs[ell - 2]));
    }

    // gamma weakly majorized by beta, and the level report is coherent
    RootSequence gamma = trop_roots(char_poly_brute(a));
    CHECK(weak_majorization(gamma, dec.beta));
    GammaBetaReport report = gamma_equals_beta_blocks(a);
    CHECK(report.gamma == gamma);

    // the components of G^c_ell match those of the final critical graph
    // restricted to C^ell
    const Digraph& last = dec.crit_graphs[dec.k - 1];
    for (int ell = 1; ell <= dec.k; ++ell) {
      std::vector<int> cum = dec.cumulative(ell);
      Digraph restricted;
      for (int v : cum) restricted.add_node(v);
      for (const auto& [u, v] : last.arcs())
        if (std::binary_search(cum.begin(), cum.end(), u) &&
            std::binary_search(cum.begin(), cum.end(), v))
          restricted.add_arc(u, v);
      CHECK(sccs(dec.crit_graphs[ell - 1]) == sccs(restricted));
    }
  }
}

TEST_CASE("critical values match the generalized circuit-mean formula") {
  oracles::Rng rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform(2, 6);
    TropMatrix a = oracles::random_irreducible(rng, n, 5, 1);
    CriticalDecomposition dec = critical_sequence(a);
    auto circuits = oracles::elementary_circuits(a);

    for (int ell = 1; ell <= dec.k; ++ell) {
      std::vector<int> prev = dec.cumulative(ell - 1);
      std::optional<Rational> best;
      for (const auto& c : circuits) {
        int length = static_cast<int>(c.nodes.size());
        // count arcs whose initial node lies in each earlier class
        Rational charge(0);
        int outside = length;
        for (int idx = 0; idx < length; ++idx) {
          int node = c.nodes[idx];
          for (int m = 0; m < ell - 1; ++m)
            if (std::binary_search(dec.classes[m].begin(),
                                   dec.classes[m].end(), node)) {
              charge += dec.alphas[m].value();
              --outside;
              break;
            }
        }
        if (outside == 0) continue;  // circuit inside C^{ell-1}
        Rational value =
            (oracles::circuit_weight(a, c).value() - charge) / Rational(outside);
        if (!best || value < *best) best = value;
      }
      REQUIRE(best.has_value());
      CHECK(dec.alphas[ell - 1] == TropScalar(*best));
    }
  }
}
