#ifndef DEG2_REES_HPP_
#define DEG2_REES_HPP_

#include <compare>
#include <string>
#include <vector>

#include "deg2/graph.hpp"
#include "deg2/semigroup.hpp"

namespace deg2 {

// Element of M0(G; A, B; C): a triple (a, g, b) or the zero. The zero sorts
// first (all coordinates -1).
struct ReesElement {
  int a = -1;
  int g = -1;
  int b = -1;
  bool zero = true;

  static ReesElement make_zero() {
    return ReesElement{};
  }

  static ReesElement make(int a, int g, int b) {
    return ReesElement{a, g, b, false};
  }

  auto operator<=>(ReesElement const&) const = default;
};

// Rees matrix semigroup with zero over a finite group. C is B x A with
// entries in G u {0}; kZeroEntry marks the zero. Regularity (a nonzero in
// every row and every column) is validated at construction.
class ReesMatrixSemigroup {
 public:
  static constexpr int kZeroEntry = -1;

  ReesMatrixSemigroup(FiniteGroup group, int a_size, int b_size,
                      std::vector<std::vector<int>> c);

  FiniteGroup const& group() const noexcept {
    return group_;
  }

  int a_size() const noexcept {
    return a_size_;
  }

  int b_size() const noexcept {
    return b_size_;
  }

  // Entry C(b, a); kZeroEntry or a group element index.
  int entry(int b, int a) const {
    return c_.at(static_cast<std::size_t>(b)).at(static_cast<std::size_t>(a));
  }

  // All elements: zero first, then (a, g, b) lexicographically.
  std::vector<ReesElement> elements() const;

 private:
  FiniteGroup group_;
  int a_size_;
  int b_size_;
  std::vector<std::vector<int>> c_;
};

// (a,g,b)(a',g',b') = (a, g C(b,a') g', b') when C(b,a') is nonzero, else 0.
ReesElement rees_multiply(ReesMatrixSemigroup const& s, ReesElement const& x,
                          ReesElement const& y);

// Generalized group mapping: no two distinct rows of C are left G-multiples
// of one another and no two distinct columns are right G-multiples. Decided
// by normalizing each line by its first nonzero entry.
bool is_gm_matrix(ReesMatrixSemigroup const& s);

// The right action of S on G x B: (g,b)(a,h,b') = (g C(b,a) h, b') when
// C(b,a) is nonzero. Point (g, b) has index g * b_size + b. Faithful when S
// is GM; the returned semigroup's elements are the distinct action maps
// (zero acts as the empty map).
TransformationSemigroup gm_action(ReesMatrixSemigroup const& s);

// Right letter mapping: the action on B alone, b(a,h,b') = b' when C(b,a)
// is nonzero. Elements are the distinct maps.
TransformationSemigroup rlm(ReesMatrixSemigroup const& s);

// Degree of the G x B action; equals the largest number of nonzero entries
// in a column of C.
int gm_action_degree(ReesMatrixSemigroup const& s);

// Column part of a bitranslation: a partial self-map fstar of A written on
// the left (column a of Y has its nonzero in row fstar(a), value
// assign[a]).
struct HullColPart {
  PartialFunction fstar;
  std::vector<int> assign;

  auto operator<=>(HullColPart const&) const = default;
};

// A linked pair (X, Y): X row-monomial over B as a wreath element, Y
// column-monomial over A. XC = CY is the linked condition.
struct LinkedPair {
  WreathElement row;
  HullColPart col;

  auto operator<=>(LinkedPair const&) const = default;
};

// Does the pair satisfy b_phi <b f, a> = <b, fstar a> phi*_a for all b, a?
bool linked(ReesMatrixSemigroup const& s, LinkedPair const& pair);

// The translational hull: every linked pair, sorted. Over the trivial group
// a direct adjoint construction is used (for each row map f, the column map
// is forced block-by-block); otherwise a filtered double loop over row and
// column candidates, guarded by cap.
std::vector<LinkedPair> translational_hull(ReesMatrixSemigroup const& s,
                                           std::size_t cap = 2000000);

// Componentwise product (X1 X2, Y1 Y2).
LinkedPair hull_multiply(ReesMatrixSemigroup const& s, LinkedPair const& x, LinkedPair const& y);

LinkedPair hull_identity(ReesMatrixSemigroup const& s);

// The inner bitranslation of an element: right multiplication as the row
// part, left multiplication as the column part. Always linked.
LinkedPair inner_translation(ReesMatrixSemigroup const& s, ReesElement const& x);

// For the structure matrices of a graph: check that f -> (f, adjoint) is a
// bijection from the continuous (strict: strictly continuous) self-maps of g
// onto the hull of M0(1; V u E, V; C(g)) (strict: M0(1; E, V; S(g))) that
// preserves multiplication. Returns true when everything matches.
bool hull_iso_check(SimpleGraph const& g, bool strict);

}  // namespace deg2

#endif  // DEG2_REES_HPP_
