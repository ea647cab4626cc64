#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "deg2/continuity.hpp"
#include "deg2/graph.hpp"
#include "deg2/pfun.hpp"
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

ReesMatrixSemigroup cycle_ones() {
  return ReesMatrixSemigroup(FiniteGroup::cyclic(2), 4, 4,
                             {{0, Z, Z, 0}, {0, 0, Z, Z}, {Z, 0, 0, Z}, {Z, Z, 0, 0}});
}

}  // namespace

TEST_CASE("construction validates the structure matrix") {
  CHECK(error_kind([] {
          ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0}, {Z, Z}});
        }) == "degenerate-input");
  CHECK(error_kind([] {
          ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, Z}, {0, Z}});
        }) == "degenerate-input");
  CHECK(error_kind([] {
          ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 5}, {0, 0}});
        }) == "invalid-input");
  CHECK(error_kind([] {
          ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0, 0}, {0, 0}});
        }) == "invalid-input");
  auto s = two_by_two();
  CHECK(s.a_size() == 2);
  CHECK(s.b_size() == 2);
  CHECK(s.entry(1, 1) == 1);
  CHECK(s.entry(0, 1) == 0);
}

TEST_CASE("element listing puts the zero first") {
  auto s = two_by_two();
  auto els = s.elements();
  CHECK(els.size() == 9);
  CHECK(els[0].zero);
  CHECK(els[1] == ReesElement::make(0, 0, 0));
  std::set<ReesElement> dedup(els.begin(), els.end());
  CHECK(dedup.size() == 9);
}

TEST_CASE("multiplication follows the sandwich formula") {
  auto s = two_by_two();
  auto x = ReesElement::make(0, 0, 1);  // (a0, 1, b1)
  auto y = ReesElement::make(1, 0, 0);  // (a1, 1, b0)
  // C(b1, a1) = -1, so xy = (a0, -1, b0).
  CHECK(rees_multiply(s, x, y) == ReesElement::make(0, 1, 0));
  CHECK(rees_multiply(s, ReesElement::make_zero(), x).zero);
  CHECK(rees_multiply(s, x, ReesElement::make_zero()).zero);

  // A zero entry kills the product.
  auto ones = cycle_ones();
  CHECK(rees_multiply(ones, ReesElement::make(0, 0, 0), ReesElement::make(2, 0, 0)).zero);
}

TEST_CASE("multiplication is associative on random triples") {
  std::mt19937_64 rng(99);
  for (auto const& s : {two_by_two(), cycle_ones()}) {
    auto els = s.elements();
    for (int t = 0; t < 300; ++t) {
      auto const& x = els[rng() % els.size()];
      auto const& y = els[rng() % els.size()];
      auto const& z = els[rng() % els.size()];
      CHECK(rees_multiply(s, rees_multiply(s, x, y), z) ==
            rees_multiply(s, x, rees_multiply(s, y, z)));
    }
  }
}

TEST_CASE("group-mapping detection") {
  CHECK(is_gm_matrix(two_by_two()));
  CHECK(is_gm_matrix(cycle_ones()));
  // Proportional rows.
  CHECK_FALSE(is_gm_matrix(
      ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0}, {0, 0}})));
  CHECK_FALSE(is_gm_matrix(
      ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0}, {1, 1}})));
  // Proportional columns.
  CHECK_FALSE(is_gm_matrix(
      ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 1}, {1, 0}})));
  // Scaling one row by -1 keeps it group-mapping.
  CHECK(is_gm_matrix(
      ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{1, 1}, {1, 0}})));
}

TEST_CASE("the right action on G x B is faithful for group-mapping matrices") {
  auto s = two_by_two();
  auto ts = gm_action(s);
  CHECK(ts.size() == 9);
  CHECK(ts.points() == 4);
  CHECK(ts.degree() == 2);
  CHECK(gm_action_degree(s) == 2);
  CHECK(gm_action_degree(cycle_ones()) == 2);
}

TEST_CASE("right letter action collapses the group coordinate") {
  auto r = rlm(two_by_two());
  CHECK(r.size() == 3);
  CHECK(r.points() == 2);
  std::set<PartialFunction> have(r.elements().begin(), r.elements().end());
  std::set<PartialFunction> want = {PartialFunction::empty(2, 2),
                                    PartialFunction(2, 2, {0, 0}),
                                    PartialFunction(2, 2, {1, 1})};
  CHECK(have == want);
}

TEST_CASE("inner translations are linked and embed the semigroup") {
  for (auto const& s : {two_by_two(), cycle_ones()}) {
    auto els = s.elements();
    for (auto const& x : els) {
      CHECK(linked(s, inner_translation(s, x)));
    }
    // The embedding is injective and multiplicative.
    std::set<LinkedPair> image;
    for (auto const& x : els) {
      image.insert(inner_translation(s, x));
    }
    CHECK(image.size() == els.size());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      auto const& x = els[rng() % els.size()];
      auto const& y = els[rng() % els.size()];
      CHECK(hull_multiply(s, inner_translation(s, x), inner_translation(s, y)) ==
            inner_translation(s, rees_multiply(s, x, y)));
    }
  }
}

TEST_CASE("the hull is a monoid containing the inner translations as an ideal") {
  auto s = two_by_two();
  auto hull = translational_hull(s);
  CHECK(hull.size() == 17);
  CHECK(std::is_sorted(hull.begin(), hull.end()));
  for (auto const& p : hull) {
    CHECK(linked(s, p));
  }
  CHECK(std::binary_search(hull.begin(), hull.end(), hull_identity(s)));

  std::set<LinkedPair> inner;
  for (auto const& x : s.elements()) {
    inner.insert(inner_translation(s, x));
  }
  for (auto const& p : hull) {
    CHECK(std::binary_search(hull.begin(), hull.end(),
                             hull_multiply(s, p, hull_identity(s))));
    for (auto const& q : inner) {
      CHECK(inner.count(hull_multiply(s, p, q)) == 1);
      CHECK(inner.count(hull_multiply(s, q, p)) == 1);
    }
  }
}

TEST_CASE("hulls over the trivial group recover the continuous monoids") {
  // |hull| equals the monoid size computed independently by enumeration.
  auto to_entries = [](Mat01 const& m) {
    std::vector<std::vector<int>> c;
    for (auto const& row : m) {
      auto& out = c.emplace_back();
      for (int x : row) {
        out.push_back(x == 1 ? 0 : Z);
      }
    }
    return c;
  };
  auto g = complete_graph(2);
  auto simp =
      ReesMatrixSemigroup(FiniteGroup::trivial(), 3, 2, to_entries(simplicial_matrix(g)));
  CHECK(translational_hull(simp).size() == enumerate_continuous(g).size());
  auto inc =
      ReesMatrixSemigroup(FiniteGroup::trivial(), 1, 2, to_entries(incidence_matrix(g)));
  CHECK(translational_hull(inc).size() == enumerate_strict(g).size());
}

TEST_CASE("hull isomorphism checks on the suite graphs") {
  for (auto const& g : {complete_graph(2), path_graph(3)}) {
    CHECK(hull_iso_check(g, false));
    CHECK(hull_iso_check(g, true));
  }
}

TEST_CASE("hull search respects the cap") {
  CHECK(error_kind([] { translational_hull(two_by_two(), 3); }) == "resource-limit");
}
