#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "deg2/continuity.hpp"
#include "deg2/graph.hpp"
#include "deg2/pfun.hpp"
#include "deg2/semigroup.hpp"
#include "test_helpers.hpp"

using namespace deg2;
using deg2::testing::error_kind;

namespace {
int const U = PartialFunction::kUndefined;

TransformationSemigroup inverse_monoid(int n) {
  return TransformationSemigroup::closure(symmetric_inverse_monoid(n), n);
}
}  // namespace

TEST_CASE("close_under works over plain values") {
  auto doubled = close_under(std::vector<int>{2},
                             [](int a, int b) { return (a * b) % 7; }, 100);
  // Powers of 2 mod 7: 2, 4, 1.
  CHECK(std::set<int>(doubled.begin(), doubled.end()) == std::set<int>{1, 2, 4});
}

TEST_CASE("closure basics") {
  auto s = inverse_monoid(2);
  CHECK(s.size() == 7);
  CHECK(s.points() == 2);
  CHECK(s.is_monoid());
  CHECK(s.degree() == 1);

  auto dedup = TransformationSemigroup::closure(
      {PartialFunction::identity(2), PartialFunction::identity(2)}, 2);
  CHECK(dedup.size() == 1);
  CHECK(dedup.generators().size() == 1);

  auto none = TransformationSemigroup::closure({}, 3);
  CHECK(none.size() == 0);
  CHECK_FALSE(none.is_monoid());

  CHECK(error_kind([] {
          TransformationSemigroup::closure(symmetric_inverse_monoid(3), 3, 10);
        }) == "resource-limit");
  CHECK(error_kind([] {
          TransformationSemigroup::closure({PartialFunction::identity(2)}, 3);
        }) == "invalid-input");
}

TEST_CASE("cayley tables agree with composition") {
  auto gens = std::vector<PartialFunction>{PartialFunction(3, 3, {1, 2, 0}),
                                           PartialFunction(3, 3, {0, 0, U})};
  auto s = TransformationSemigroup::closure(gens, 3);
  auto const& els = s.elements();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.generators().size(); ++j) {
      auto const& g = els[s.generators()[j]];
      CHECK(els[s.right_cayley(i, j)] == compose(els[i], g));
      CHECK(els[s.left_cayley(i, j)] == compose(g, els[i]));
    }
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(els[s.product(i, j)] == compose(els[i], els[j]));
    }
  }
  CHECK(s.index_of(els[2]) == 2);
  CHECK(s.index_of(PartialFunction(3, 3, {2, 2, 2})) == TransformationSemigroup::npos);
}

TEST_CASE("green data of the symmetric inverse monoid on two points") {
  auto s = inverse_monoid(2);
  auto g = green(s);
  // J-classes are the rank levels: empty, four rank-1 maps, two units.
  CHECK(g.num_j == 3);
  CHECK(g.num_r == 4);
  CHECK(g.num_l == 4);
  CHECK(g.num_h == 6);
  std::vector<int> class_sizes(static_cast<std::size_t>(g.num_j), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    ++class_sizes[static_cast<std::size_t>(g.j_class[i])];
  }
  std::sort(class_sizes.begin(), class_sizes.end());
  CHECK(class_sizes == std::vector<int>{1, 2, 4});
  CHECK_FALSE(is_aperiodic(s));
  CHECK(delta(s) == 3);
}

TEST_CASE("right-zero semigroups are aperiodic with one R-class") {
  auto s = TransformationSemigroup::closure(
      {PartialFunction(2, 2, {0, 0}), PartialFunction(2, 2, {1, 1})}, 2);
  CHECK(s.size() == 2);
  auto g = green(s);
  CHECK(g.num_r == 1);
  CHECK(g.num_l == 2);
  CHECK(g.num_j == 1);
  CHECK(g.num_h == 2);
  CHECK(is_aperiodic(s));
  CHECK(delta(s) == 1);
}

TEST_CASE("depth route equality and idempotent-only depth") {
  for (auto const& g :
       {complete_graph(2), complete_graph(3), path_graph(3), edgeless_graph(3)}) {
    auto s = TransformationSemigroup::closure(enumerate_continuous(g), g.vertex_count());
    auto table = s.product_table();
    auto rep = depth(s.size(), table);
    CHECK(rep.regular_j_chain == rep.idempotent_chain);
    CHECK(idempotent_depth(s) == delta(s));
  }
  CHECK(delta(inverse_monoid(3)) == 4);
  CHECK(idempotent_depth(inverse_monoid(3)) == 4);
}

TEST_CASE("finite groups") {
  auto z2 = FiniteGroup::cyclic(2);
  CHECK(z2.order() == 2);
  CHECK(z2.name(0) == "1");
  CHECK(z2.name(1) == "-1");
  CHECK(z2.mult(1, 1) == 0);
  CHECK(z2.inverse(1) == 1);
  CHECK(z2.element("-1") == 1);
  CHECK(z2.element("x") == -1);

  auto z3 = FiniteGroup::cyclic(3);
  CHECK(z3.mult(1, 2) == 0);
  CHECK(z3.inverse(1) == 2);
  CHECK(z3.name(2) == "g^2");

  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  for (int a = 0; a < 6; ++a) {
    CHECK(s3.mult(a, s3.inverse(a)) == 0);
  }

  auto v4 = FiniteGroup::direct_product(z2, z2);
  CHECK(v4.order() == 4);
  for (int a = 0; a < 4; ++a) {
    CHECK(v4.mult(a, a) == 0);
  }
  CHECK(FiniteGroup::trivial().order() == 1);
  CHECK(z2 == FiniteGroup::cyclic(2));
  CHECK_FALSE(z2 == FiniteGroup::trivial());
}

TEST_CASE("wreath elements and actions") {
  auto z2 = FiniteGroup::cyclic(2);
  auto id = wreath_identity(z2, 2);
  CHECK(wreath_action(z2, id, 2) == PartialFunction::identity(4));

  // Carrier {empty, identity} on one point: 1 + |G| elements.
  auto ws = wreath_elements(z2, {PartialFunction::empty(1, 1), PartialFunction::identity(1)});
  CHECK(ws.size() == 3);

  // Multiplication matches the action: act(xy) = act(x) then act(y).
  auto carrier = symmetric_inverse_monoid(2);
  auto all = wreath_elements(z2, carrier);
  CHECK(all.size() == 1 + 4 * 2 + 2 * 4);  // empty, rank-1, rank-2 assignments
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto const& x = all[rng() % all.size()];
    auto const& y = all[rng() % all.size()];
    CHECK(wreath_action(z2, wreath_multiply(z2, x, y), 2) ==
          compose(wreath_action(z2, x, 2), wreath_action(z2, y, 2)));
  }
}

TEST_CASE("semidirect elements act on subsets") {
  SemidirectElement x{PartialFunction(2, 2, {1, 0}), 0b01u};
  CHECK(subset_action(0b10u, x) == 0b01u);  // {1} swaps to {0}, union {0}
  CHECK(subset_action(0b11u, x) == 0b11u);
  SemidirectElement y{PartialFunction::identity(2), 0b10u};
  auto xy = semidirect_multiply(x, y);
  for (std::uint32_t a = 0; a < 4; ++a) {
    CHECK(subset_action(subset_action(a, x), y) == subset_action(a, xy));
  }
  CHECK(semidirect_inv_2v(2).size() == 28);
}

TEST_CASE("symmetric inverse monoid sizes") {
  CHECK(symmetric_inverse_monoid(1).size() == 2);
  CHECK(symmetric_inverse_monoid(2).size() == 7);
  CHECK(symmetric_inverse_monoid(3).size() == 34);
  for (auto const& f : symmetric_inverse_monoid(3)) {
    CHECK(f.is_injective());
  }
}
