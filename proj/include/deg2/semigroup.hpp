#ifndef DEG2_SEMIGROUP_HPP_
#define DEG2_SEMIGROUP_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "deg2/error.hpp"
#include "deg2/pfun.hpp"

namespace deg2 {

// Hard ceiling for closures; overridable per call and via DEGREE2_CAP in the
// command-line driver.
inline constexpr std::size_t kDefaultClosureCap = 50000;

// BFS closure of gens under an associative product. Elements need operator<.
// Deterministic: breadth-first in generator order, duplicates dropped.
template <typename T, typename Prod>
std::vector<T> close_under(std::vector<T> const& gens, Prod&& prod,
                           std::size_t cap = kDefaultClosureCap) {
  std::vector<T> elements;
  std::map<T, std::size_t> index;
  for (auto const& g : gens) {
    if (index.emplace(g, elements.size()).second) {
      elements.push_back(g);
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      T p = prod(elements[i], gens[j]);
      if (index.emplace(p, elements.size()).second) {
        elements.push_back(p);
        if (elements.size() > cap) {
          fail("resource-limit", "closure exceeded cap of " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  return elements;
}

// A transformation semigroup (Q, S): self-maps on points 0..points-1 closed
// under left-to-right composition, with Cayley tables over the generators.
class TransformationSemigroup {
 public:
  // Empty ts on zero points; closure() builds the real thing.
  TransformationSemigroup() = default;

  static TransformationSemigroup closure(std::vector<PartialFunction> const& gens, int points,
                                         std::size_t cap = kDefaultClosureCap);

  int points() const noexcept {
    return points_;
  }

  std::vector<PartialFunction> const& elements() const noexcept {
    return elements_;
  }

  std::size_t size() const noexcept {
    return elements_.size();
  }

  std::vector<std::size_t> const& generators() const noexcept {
    return gens_;
  }

  // Index of an element, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(PartialFunction const& f) const;

  // elements()[i] * gens()[j] by generator position.
  std::size_t right_cayley(std::size_t i, std::size_t j) const {
    return right_cayley_.at(i).at(j);
  }

  std::size_t left_cayley(std::size_t i, std::size_t j) const {
    return left_cayley_.at(i).at(j);
  }

  // Index of elements()[i] * elements()[j].
  std::size_t product(std::size_t i, std::size_t j) const;

  // Full m x m index table, row-major.
  std::vector<std::size_t> product_table() const;

  bool is_monoid() const noexcept {
    return is_monoid_;
  }

  int degree() const;

 private:
  int points_ = 0;
  std::vector<PartialFunction> elements_;
  std::vector<std::size_t> gens_;
  std::vector<std::vector<std::size_t>> right_cayley_;
  std::vector<std::vector<std::size_t>> left_cayley_;
  bool is_monoid_ = false;
  std::map<PartialFunction, std::size_t> index_;
};

// Green's data over an abstract multiplication table (row-major m x m of
// element indices). Classes are numbered in order of first appearance.
struct GreenData {
  std::vector<int> r_class;
  std::vector<int> l_class;
  std::vector<int> j_class;
  std::vector<int> h_class;
  int num_r = 0;
  int num_l = 0;
  int num_j = 0;
  int num_h = 0;
  std::vector<char> j_regular;                 // per J-class: has an idempotent
  std::vector<std::vector<char>> j_below;      // j_below[a][b]: J_a <= J_b
};

GreenData green(std::size_t m, std::vector<std::size_t> const& table);

// Depth computed two ways: the longest chain of regular J-classes in the
// J-order, and the longest chain of idempotents under e <= f iff e = ef = fe.
// The two counts agree for finite semigroups; delta() asserts that and
// returns the common value.
struct DepthReport {
  int regular_j_chain;
  int idempotent_chain;
};

DepthReport depth(std::size_t m, std::vector<std::size_t> const& table);
int delta(std::size_t m, std::vector<std::size_t> const& table);

// True iff every subgroup is trivial: s^m = s^{m+1} for all s.
bool is_aperiodic(std::size_t m, std::vector<std::size_t> const& table);

// Convenience wrappers.
GreenData green(TransformationSemigroup const& s);
int delta(TransformationSemigroup const& s);
bool is_aperiodic(TransformationSemigroup const& s);

// The idempotent-chain route alone, composing elements directly instead of
// materializing the m x m product table; scales to closures where the full
// table does not fit. Agrees with delta().
int idempotent_depth(TransformationSemigroup const& s);

// A finite group as a validated multiplication table. Element 0 is always
// the identity in the builders below.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);
  static FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

  int order() const noexcept {
    return static_cast<int>(table_.size());
  }

  int mult(int a, int b) const {
    return table_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
  }

  int identity() const noexcept {
    return identity_;
  }

  int inverse(int a) const {
    return inverse_.at(static_cast<std::size_t>(a));
  }

  std::string const& name(int a) const {
    return names_.at(static_cast<std::size_t>(a));
  }

  // Element index by name, or -1.
  int element(std::string const& name) const;

  bool operator==(FiniteGroup const& other) const {
    return table_ == other.table_ && names_ == other.names_;
  }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

// An element (phi, f) of the wreath product G wr (Q, S): f a partial
// self-map of Q, phi a G-assignment on Dom(f) (kNoGroupElement elsewhere).
// Acts on G x Q by (g, q) -> (g * phi(q), qf).
struct WreathElement {
  static constexpr int kNoGroupElement = -1;

  PartialFunction fun;
  std::vector<int> assign;

  auto operator<=>(WreathElement const&) const = default;
};

WreathElement wreath_identity(FiniteGroup const& g, int points);
WreathElement wreath_multiply(FiniteGroup const& g, WreathElement const& x,
                              WreathElement const& y);

// The action of x on G x Q as a partial function; point (g, q) has index
// g * points + q.
PartialFunction wreath_action(FiniteGroup const& g, WreathElement const& x, int points);

// Every (phi, f) with f among the given self-maps: the full wreath product
// over the listed carrier.
std::vector<WreathElement> wreath_elements(FiniteGroup const& g,
                                           std::vector<PartialFunction> const& carrier,
                                           std::size_t cap = kDefaultClosureCap);

// Element (s, X) of SIS(V) x| 2^V: s a partial bijection on n points, X a
// vertex subset as a bitmask. Product (s,X)(t,Y) = (st, Xt u Y); the right
// action on subsets is A(s,X) = As u X.
struct SemidirectElement {
  PartialFunction bijection;
  std::uint32_t subset;

  auto operator<=>(SemidirectElement const&) const = default;
};

SemidirectElement semidirect_multiply(SemidirectElement const& x, SemidirectElement const& y);
std::uint32_t subset_action(std::uint32_t a, SemidirectElement const& x);

// All elements of SIS(V) x| 2^V for |V| = n, cap-guarded.
std::vector<SemidirectElement> semidirect_inv_2v(int n, std::size_t cap = kDefaultClosureCap);

// All partial bijections on n points, in lexicographic table order.
std::vector<PartialFunction> symmetric_inverse_monoid(int n);

}  // namespace deg2

#endif  // DEG2_SEMIGROUP_HPP_
