#include <random>
#include <vector>

#include "doctest.h"

#include "deg2/gain.hpp"
#include "deg2/graph.hpp"
#include "deg2/rees.hpp"
#include "deg2/semigroup.hpp"
#include "test_helpers.hpp"

using namespace deg2;
using deg2::testing::error_kind;

namespace {

int const Z = ReesMatrixSemigroup::kZeroEntry;

ReesMatrixSemigroup two_by_two() {
  return ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0}, {0, 1}});
}

GainGraph c4_twist() {
  return GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2), {0, 0, 0, 1});
}

}  // namespace

TEST_CASE("gain graph construction") {
  CHECK(error_kind([] {
          GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2), {0, 0, 0});
        }) == "invalid-input");
  CHECK(error_kind([] {
          GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2), {0, 0, 0, 7});
        }) == "invalid-input");
  auto g = GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2));
  CHECK(g.labels == std::vector<int>(4, 0));
}

TEST_CASE("derived graph of an identity-labeled gain graph is disjoint copies") {
  auto gg = GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2));
  auto d = derived_graph(gg);
  CHECK(d.graph.vertex_count() == 8);
  CHECK(d.graph.edge_count() == 8);
  SimpleGraph two_squares(8, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {4, 5}, {4, 7}, {5, 6}, {6, 7}});
  CHECK(simplify(d.graph) == two_squares);
}

TEST_CASE("derived graph of the twisted 4-cycle is an 8-cycle") {
  auto d = derived_graph(c4_twist());
  CHECK(d.graph.vertex_count() == 8);
  CHECK(are_isomorphic(simplify(d.graph), cycle_graph(8)));
  // The free action swaps the two sheets.
  CHECK_NOTHROW(validate_free_action(d.graph, d.action));
  CHECK(d.action.vertex_perm[1] == std::vector<int>{4, 5, 6, 7, 0, 1, 2, 3});
}

TEST_CASE("free action validation rejects broken data") {
  auto d = derived_graph(c4_twist());
  auto broken = d.action;
  broken.vertex_perm[1][0] = 1;  // not a permutation
  CHECK(error_kind([&] { validate_free_action(d.graph, broken); }) == "invalid-input");

  // A trivial action of Z2 is not free.
  FreeAction lazy{FiniteGroup::cyclic(2),
                  {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}},
                  {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}}};
  CHECK(error_kind([&] { validate_free_action(d.graph, lazy); }) == "invalid-input");
}

TEST_CASE("quotient of a hand-built free action") {
  // Two disjoint edges swapped by Z2.
  Multigraph m(4, {{0, 1}, {2, 3}});
  FreeAction swap{FiniteGroup::cyclic(2), {{0, 1, 2, 3}, {2, 3, 0, 1}}, {{0, 1}, {1, 0}}};
  auto q = quotient(m, swap);
  CHECK(q.base.vertex_count() == 2);
  CHECK(q.base.edge_count() == 1);
  CHECK(q.labels == std::vector<int>{0});
  CHECK(q.group == FiniteGroup::cyclic(2));
}

TEST_CASE("round trips through the derived graph") {
  for (auto const& gg :
       {c4_twist(), GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2)),
        rlm_cover_gain(two_by_two()), graham_houghton(two_by_two())}) {
    auto d = derived_graph(gg);
    auto q = quotient(d.graph, d.action);
    CHECK(q == gg);
    CHECK(derived_graph(q).graph == d.graph);
  }
}

TEST_CASE("switching preserves the cohomology class") {
  auto gg = c4_twist();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> d(4);
    for (auto& x : d) {
      x = static_cast<int>(rng() % 2);
    }
    auto switched = switch_labels(gg, d);
    CHECK(is_cohomologous(gg, switched));
    CHECK(is_cohomologous(switched, gg));
  }
  CHECK_FALSE(is_cohomologous(gg, GainGraph(gg.base, gg.group)));
  CHECK(error_kind([&] {
          is_cohomologous(gg, GainGraph(Multigraph(path_graph(2)), FiniteGroup::cyclic(2)));
        }) == "invalid-input");
}

TEST_CASE("g-acyclicity is the balanced-cycle condition") {
  CHECK(is_g_acyclic(GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2))));
  CHECK_FALSE(is_g_acyclic(c4_twist()));
  // Two -1 labels cancel around the cycle.
  CHECK(is_g_acyclic(
      GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2), {1, 0, 1, 0})));
  // A tree is always g-acyclic.
  CHECK(is_g_acyclic(
      GainGraph(Multigraph(path_graph(4)), FiniteGroup::cyclic(3), {1, 2, 1})));
  // Balanced labelings are exactly those cohomologous to the trivial one.
  auto balanced =
      GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2), {1, 0, 1, 0});
  CHECK(is_cohomologous(balanced, GainGraph(balanced.base, balanced.group)));
  // Disconnected graphs are handled componentwise.
  Multigraph m(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(is_g_acyclic(GainGraph(m, FiniteGroup::cyclic(2), {1, 1, 1})));
}

TEST_CASE("bipartite gain graph of a structure matrix") {
  auto gh = graham_houghton(two_by_two());
  CHECK(gh.base == Multigraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(gh.labels == std::vector<int>{0, 0, 0, 1});
  CHECK(are_isomorphic(simplify(gh.base), cycle_graph(4)));
  CHECK_FALSE(is_g_acyclic(gh));
}

TEST_CASE("fiber graph and cover of the right letter action") {
  auto s = two_by_two();
  CHECK(gm_fiber_graph(s) == cycle_graph(4));
  auto cover = rlm_cover_gain(s);
  CHECK(cover.base == Multigraph(2, {{0, 1}, {0, 1}}));
  CHECK(cover.labels == std::vector<int>{0, 1});
  CHECK(simplify(derived_graph(cover).graph) == gm_fiber_graph(s));

  // Column support of size three exceeds degree 2.
  CHECK(error_kind([] {
          gm_fiber_graph(ReesMatrixSemigroup(FiniteGroup::trivial(), 1, 3,
                                             {{0}, {0}, {0}}));
        }) == "degree-violation");
}

TEST_CASE("trivial-cover reports require a group-mapping matrix") {
  CHECK(error_kind([] {
          trivcov_report(ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0}, {0, 0}}));
        }) == "invalid-input");
  auto rep = trivcov_report(two_by_two());
  CHECK(rep.agree());
  CHECK_FALSE(rep.trivial_cover);
}
