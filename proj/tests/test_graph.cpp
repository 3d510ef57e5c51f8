#include <algorithm>
#include <random>

#include "doctest.h"
#include "halin_book/errors.hpp"
#include "halin_book/graph.hpp"
#include "oracles.hpp"

using namespace halin_book;

namespace {

VertexId V(std::uint32_t i) { return VertexId{i}; }

Graph random_graph(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    vs.push_back(V(i));
    for (std::uint32_t j = 0; j < i; ++j)
      if (coin(rng)) es.emplace_back(V(j), V(i));
  }
  return Graph(vs, es);
}

Graph triangular_prism_graph() {
  return Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("edges are stored smaller label first") {
  Edge e(V(5), V(2));
  CHECK(e.first() == V(2));
  CHECK(e.second() == V(5));
  CHECK(e == Edge(V(2), V(5)));
  CHECK_THROWS_AS(Edge(V(1), V(1)), ContractViolation);
}

TEST_CASE("graph rejects parallel edges and dangling endpoints") {
  CHECK_THROWS_AS(Graph::from_pairs(3, {{0, 1}, {1, 0}}), ContractViolation);
  CHECK_THROWS_AS(Graph::from_pairs(2, {{0, 2}}), ContractViolation);
}

TEST_CASE("interleaves") {
  const VertexId a{0}, b{1}, c{2}, d{3};
  const CircularOrder abcd({a, b, c, d});
  CHECK(interleaves(abcd, Edge(a, c), Edge(b, d)));
  CHECK_FALSE(interleaves(abcd, Edge(a, b), Edge(c, d)));

  // (v1, u, v2, v3): the spoke to v3 against the rim edge v1v2.
  const VertexId u{0}, v1{1}, v2{2}, v3{3};
  const CircularOrder k4({v1, u, v2, v3});
  CHECK(interleaves(k4, Edge(u, v3), Edge(v1, v2)));
  CHECK(oracle::chords_cross(k4.sequence(), Edge(u, v3), Edge(v1, v2)));

  CHECK_THROWS_AS(interleaves(abcd, Edge(a, b), Edge(b, c)), ContractViolation);
  CHECK_THROWS_AS(interleaves(abcd, Edge(a, b), Edge(c, VertexId{9})), ContractViolation);
}

TEST_CASE("rotate and reflect") {
  const auto abc = make_order({0, 1, 2});
  CHECK(rotate(abc, 1) == make_order({1, 2, 0}));
  CHECK(rotate(abc, 0) == abc);
  CHECK(rotate(abc, 3) == abc);
  CHECK(rotate(abc, -1) == make_order({2, 0, 1}));
  CHECK(reflect(make_order({0, 1, 2, 3})) == make_order({3, 2, 1, 0}));
  CHECK(reflect(make_order({7})) == make_order({7}));
  CHECK(reflect(reflect(abc)) == abc);
  CHECK(make_order({2, 0, 1}).canonical_cut() == abc);
}

TEST_CASE("interleaves agrees with the walk oracle and is rotation/reflection invariant") {
  for (std::uint32_t n = 4; n <= 6; ++n) {
    std::vector<VertexId> seq;
    for (std::uint32_t i = 0; i < n; ++i) seq.push_back(V(i));
    const auto edges = complete_graph(n).edges();
    do {
      const CircularOrder order(seq);
      for (const auto& e1 : edges) {
        for (const auto& e2 : edges) {
          if (e1.shares_vertex(e2)) continue;
          const bool base = interleaves(order, e1, e2);
          REQUIRE(base == oracle::chords_cross(seq, e1, e2));
          REQUIRE(base == interleaves(order, e2, e1));
          REQUIRE(base == interleaves(reflect(order), e1, e2));
          for (long long s = 1; s < n; ++s) REQUIRE(base == interleaves(rotate(order, s), e1, e2));
        }
      }
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST_CASE("max_degree") {
  CHECK(max_degree(complete_graph(4)) == 3);
  CHECK(max_degree(cycle_graph(5)) == 2);
  // W_7: hub joined to a 6-cycle.
  auto w7 = Graph::from_pairs(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                  {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
  CHECK(max_degree(w7) == 6);
  CHECK_THROWS_AS(max_degree(Graph{}), ContractViolation);
}

TEST_CASE("chromatic_index") {
  CHECK(chromatic_index(cycle_graph(4)) == 2);
  CHECK(chromatic_index(cycle_graph(5)) == 3);
  REQUIRE(oracle::brute_chromatic_index(complete_graph(4)) == 3);
  CHECK(chromatic_index(complete_graph(4)) == 3);
  CHECK(chromatic_index(complete_graph(5)) == 5);
  CHECK(chromatic_index(Graph::from_pairs(3, {})) == 0);
  CHECK_THROWS_AS(chromatic_index(complete_graph(10)), GuardExceeded);
  CHECK(chromatic_index(complete_graph(10), 45) == 9);
}

TEST_CASE("chromatic_index matches brute force and stays in the Vizing envelope") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(5 + trial % 3, 0.45, rng);
    if (g.edge_count() == 0 || g.edge_count() > 9) continue;
    const auto chi = chromatic_index(g);
    CHECK(chi == oracle::brute_chromatic_index(g));
    const auto delta = max_degree(g);
    CHECK(delta <= chi);
    CHECK(chi <= delta + 1);
  }
}

TEST_CASE("is_bipartite") {
  CHECK(is_bipartite(cycle_graph(4)));
  CHECK_FALSE(is_bipartite(cycle_graph(3)));
  CHECK_FALSE(is_bipartite(triangular_prism_graph()));
  CHECK(is_bipartite(star_graph(5)));
  CHECK(is_regular(triangular_prism_graph()));
  CHECK_FALSE(is_regular(star_graph(3)));
}
