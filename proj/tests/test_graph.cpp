#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

#include "deg2/graph.hpp"
#include "test_helpers.hpp"

using namespace deg2;
using deg2::testing::error_kind;

TEST_CASE("builders produce canonical edge lists") {
  CHECK(complete_graph(3).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(path_graph(3).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(cycle_graph(4).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(complete_bipartite(2, 2).edges() ==
        std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(edgeless_graph(3).edge_count() == 0);
  CHECK(edgeless_graph(3).vertex_count() == 3);
  CHECK(cycle_graph(3) == complete_graph(3));
}

TEST_CASE("simple graph construction rejects bad input") {
  CHECK(error_kind([] { SimpleGraph(3, {{0, 5}}); }) == "invalid-input");
  CHECK(error_kind([] { SimpleGraph(3, {{1, 1}}); }) == "invalid-input");
  CHECK(error_kind([] { SimpleGraph(3, {{0, 1}, {1, 0}}); }) == "invalid-input");
  CHECK(error_kind([] { SimpleGraph(-1, {}); }) == "invalid-input");
  // Unordered input is canonicalized, not rejected.
  CHECK(SimpleGraph(3, {{2, 0}, {1, 0}}).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("adjacency queries") {
  auto g = path_graph(4);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 9));
  CHECK(g.edge_index(1, 0) == 0);
  CHECK(g.edge_index(3, 2) == 2);
  CHECK(g.edge_index(0, 2) == -1);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);
  CHECK_FALSE(g.has_isolated_vertex());
  CHECK(edgeless_graph(2).has_isolated_vertex());
}

TEST_CASE("connectivity") {
  CHECK(path_graph(5).is_connected());
  CHECK(SimpleGraph(1, {}).is_connected());
  CHECK_FALSE(edgeless_graph(3).is_connected());
  CHECK_FALSE(SimpleGraph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("matching and independence numbers") {
  auto check_inv = [](SimpleGraph const& g, int nu, int alpha) {
    auto inv = graph_invariants(g);
    CHECK(inv.nu == nu);
    CHECK(inv.alpha == alpha);
  };
  check_inv(complete_graph(3), 1, 1);
  check_inv(cycle_graph(4), 2, 2);
  check_inv(complete_bipartite(2, 2), 2, 2);
  check_inv(path_graph(3), 1, 2);
  check_inv(cycle_graph(5), 2, 2);
  check_inv(edgeless_graph(3), 0, 3);
  CHECK(graph_invariants(path_graph(3)).components.size() == 1);
  CHECK(graph_invariants(edgeless_graph(3)).components.size() == 3);
}

TEST_CASE("automorphism groups of small graphs") {
  CHECK(automorphisms(complete_graph(3)).size() == 6);
  CHECK(automorphisms(complete_graph(4)).size() == 24);
  CHECK(automorphisms(cycle_graph(4)).size() == 8);
  CHECK(automorphisms(complete_bipartite(2, 2)).size() == 8);
  CHECK(automorphisms(path_graph(3)).size() == 2);
  CHECK(automorphisms(path_graph(4)).size() == 2);
  CHECK(automorphisms(edgeless_graph(3)).size() == 6);
  // Every listed permutation really is an automorphism.
  auto g = cycle_graph(5);
  for (auto const& p : automorphisms(g)) {
    for (auto const& [u, v] : g.edges()) {
      CHECK(g.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]));
    }
  }
}

TEST_CASE("graph isomorphism") {
  CHECK(are_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
  CHECK(are_isomorphic(cycle_graph(5), SimpleGraph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
  CHECK_FALSE(are_isomorphic(path_graph(4), complete_graph(3)));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), SimpleGraph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4},
                                                             {3, 5}, {4, 5}})));
  CHECK_FALSE(are_isomorphic(complete_graph(3), complete_graph(4)));
}

TEST_CASE("line graphs") {
  CHECK(are_isomorphic(line_graph(complete_graph(3)), complete_graph(3)));
  CHECK(line_graph(path_graph(3)) == SimpleGraph(2, {{0, 1}}));
  CHECK(are_isomorphic(line_graph(cycle_graph(4)), cycle_graph(4)));
  // Star on 3 leaves: all edges meet at the hub.
  CHECK(are_isomorphic(line_graph(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}})),
                       complete_graph(3)));
}

TEST_CASE("simplify flattens multigraphs") {
  Multigraph m(3, {{0, 1}, {1, 0}, {2, 2}, {1, 2}, {0, 1}});
  CHECK(simplify(m) == SimpleGraph(3, {{0, 1}, {1, 2}}));
  CHECK(simplify(Multigraph(cycle_graph(4))) == cycle_graph(4));
}

TEST_CASE("matching and anticlique predicates") {
  auto g = cycle_graph(4);
  CHECK(is_matching(g, {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_matching(g, {{0, 1}, {1, 2}}));
  CHECK(is_matching(g, {}));
  CHECK(error_kind([&] { is_matching(g, {{0, 2}}); }) == "invalid-input");
  CHECK(is_anticlique(g, {0, 2}));
  CHECK(is_anticlique(g, {}));
  CHECK_FALSE(is_anticlique(g, {0, 1}));
}

TEST_CASE("exhaustive matchings and anticliques") {
  CHECK(all_matchings(complete_graph(3)).size() == 4);
  CHECK(all_matchings(cycle_graph(4)).size() == 7);
  CHECK(all_anticliques(cycle_graph(4)).size() == 7);
  CHECK(all_anticliques(complete_bipartite(2, 2)).size() == 7);
  CHECK(all_anticliques(path_graph(3)).size() == 5);
  CHECK(all_anticliques(edgeless_graph(3)).size() == 8);
  // Everything listed passes the predicate; first entry is empty.
  auto g = cycle_graph(5);
  auto ac = all_anticliques(g);
  CHECK(ac.front().empty());
  for (auto const& a : ac) {
    CHECK(is_anticlique(g, a));
  }
  std::set<std::vector<int>> dedup(ac.begin(), ac.end());
  CHECK(dedup.size() == ac.size());
}

TEST_CASE("incidence and simplicial matrices") {
  CHECK(incidence_matrix(complete_graph(3)) ==
        Mat01{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(simplicial_matrix(complete_graph(2)) == Mat01{{1, 1, 0}, {1, 0, 1}});
  CHECK(error_kind([] { incidence_matrix(edgeless_graph(2)); }) == "degenerate-input");
  // Simplicial matrix of a graph with an isolated vertex still works: the
  // identity block keeps every row nonzero.
  auto sm = simplicial_matrix(SimpleGraph(3, {{0, 1}}));
  CHECK(sm.size() == 3);
  CHECK(sm[2] == std::vector<int>{0, 0, 0, 1});
}
