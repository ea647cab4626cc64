#ifndef DEG2_PFUN_HPP_
#define DEG2_PFUN_HPP_

#include <compare>
#include <string>
#include <vector>

#include "deg2/graph.hpp"

namespace deg2 {

// Partial function between finite sets {0..dom_size-1} -> {0..cod_size-1},
// stored as a flat table with kUndefined marking the points outside the
// domain. Composition is left-to-right throughout: x(fg) = (xf)g.
class PartialFunction {
 public:
  static constexpr int kUndefined = -1;

  PartialFunction() : dom_size_(0), cod_size_(0) {}
  PartialFunction(int dom_size, int cod_size, std::vector<int> table);

  static PartialFunction identity(int n);
  static PartialFunction empty(int dom_size, int cod_size);

  int dom_size() const noexcept {
    return dom_size_;
  }

  int cod_size() const noexcept {
    return cod_size_;
  }

  std::vector<int> const& table() const noexcept {
    return table_;
  }

  bool defined(int x) const {
    return table_.at(static_cast<std::size_t>(x)) != kUndefined;
  }

  // Image of x, or kUndefined.
  int apply(int x) const {
    return table_.at(static_cast<std::size_t>(x));
  }

  std::vector<int> domain() const;
  std::vector<int> image() const;  // sorted, deduplicated
  int rank() const;                // |image|
  int domain_size() const;         // |domain|

  bool is_empty() const;
  bool is_total() const;
  bool is_injective() const;
  bool is_permutation() const;

  // 1-based rendering, e.g. "1↦3 2↦3 3↦1"; empty map prints as "empty".
  std::string pretty() const;

  auto operator<=>(PartialFunction const&) const = default;

 private:
  int dom_size_;
  int cod_size_;
  std::vector<int> table_;
};

// x(fg) = (xf)g; needs f.cod_size() == g.dom_size().
PartialFunction compose(PartialFunction const& f, PartialFunction const& g);

// Kernel classes of f: the domain partitioned by equal image, each block
// sorted, blocks ordered by least element.
std::vector<std::vector<int>> fibers(PartialFunction const& f);

// Largest fiber size; 0 for the empty map.
int degree(PartialFunction const& f);

// Max of degree over the collection.
int ts_degree(std::vector<PartialFunction> const& fs);

// Restriction of f to s (other points become undefined). s is range-checked.
PartialFunction restrict_to(PartialFunction const& f, std::vector<int> const& s);

// Union of two partial functions with disjoint domains and equal sizes.
PartialFunction join(PartialFunction const& f, PartialFunction const& g);

// f = sing v inj where sing is f restricted to the union of fibers of size
// >= 2 and inj is the rest. For degree <= 2 this is the canonical
// singular/injective splitting; a fiber of size >= 3 flips degree_exceeded
// (reported, not thrown — the splitting itself is still returned).
struct SingInjDecomposition {
  PartialFunction sing;
  PartialFunction inj;
  PartialFunction original;
  bool degree_exceeded;
};

SingInjDecomposition sing_inj(PartialFunction const& f);

// Graph on n vertices whose edges are the size-2 fibers of the given
// self-maps (all must be on n points). A fiber of size >= 3 is a
// degree-violation.
SimpleGraph fiber_graph(std::vector<PartialFunction> const& fs, int n);

}  // namespace deg2

#endif  // DEG2_PFUN_HPP_
