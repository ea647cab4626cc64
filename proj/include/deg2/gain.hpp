#ifndef DEG2_GAIN_HPP_
#define DEG2_GAIN_HPP_

#include <vector>

#include "deg2/graph.hpp"
#include "deg2/rees.hpp"
#include "deg2/semigroup.hpp"

namespace deg2 {

// An oriented multigraph with one group element per edge. Reversing an edge
// inverts its label; all algorithms below respect that convention.
struct GainGraph {
  Multigraph base;
  FiniteGroup group;
  std::vector<int> labels;

  GainGraph(Multigraph base_in, FiniteGroup group_in, std::vector<int> labels_in);

  // All-identity labels.
  GainGraph(Multigraph base_in, FiniteGroup group_in);

  bool operator==(GainGraph const&) const = default;
};

// A left action of a group on a multigraph: one vertex permutation and one
// edge permutation per group element, indexed like the group's elements.
struct FreeAction {
  FiniteGroup group;
  std::vector<std::vector<int>> vertex_perm;
  std::vector<std::vector<int>> edge_perm;
};

// Throws invalid-input unless the data is a genuine free action: permutations
// forming a homomorphism (perm[gh] = perm[g] after perm[h]), preserving
// incidence, with only the identity fixing any vertex or edge.
void validate_free_action(Multigraph const& g, FreeAction const& action);

struct DerivedGraph {
  Multigraph graph;
  FreeAction action;
};

// The derived cover of a gain graph: vertices (g, v) indexed g * nV + v,
// one edge (g, e) indexed g * nE + e running from (g, tail e) to
// (g * label(e), head e), carrying the left action h(g, x) = (hg, x).
DerivedGraph derived_graph(GainGraph const& g);

// The quotient gain graph of a free action: orbit representatives (minimal
// indices) become vertices and edges; a representative edge from g_t(tbar)
// to g_h(hbar) gets label g_t^{-1} g_h. Deriving the quotient reconstructs
// the covering graph.
GainGraph quotient(Multigraph const& g, FreeAction const& action);

// Switched labels l'(e) = d(tail e) l(e) d(head e)^{-1}.
GainGraph switch_labels(GainGraph const& g, std::vector<int> const& d);

// Are two labelings of the same underlying graph related by a switch?
// Decided by normalizing both along a spanning forest, then matching
// per-component up to conjugation by a constant.
bool is_cohomologous(GainGraph const& g1, GainGraph const& g2);

// Every closed walk has identity gain; equivalently the labeling switches
// to the all-identity one.
bool is_g_acyclic(GainGraph const& g);

// The labeled incidence structure of a Rees matrix: vertex b is b, vertex a
// is |B| + a, and every nonzero entry C(b, a) contributes one edge b -> a
// labeled C(b, a). G-acyclicity of this graph is exactly diagonal
// normalizability of C to 0/1 entries.
GainGraph graham_houghton(ReesMatrixSemigroup const& s);

// The graph on G x B (vertex (g, b) indexed g * |B| + b) joining (g', b')
// and (g, b), b' != b, whenever some column a has C(b', a) and C(b, a)
// nonzero and g = g' C(b', a) C(b, a)^{-1}. Columns must have at most two
// nonzero entries (degree-violation otherwise).
SimpleGraph gm_fiber_graph(ReesMatrixSemigroup const& s);

// The gain graph on B with one edge per column meeting two rows b' < b,
// labeled C(b', a) C(b, a)^{-1}; its derived cover is gm_fiber_graph.
// Columns must have at most two nonzero entries.
GainGraph rlm_cover_gain(ReesMatrixSemigroup const& s);

// Three independent decisions of one property of a GM matrix with column
// supports of size at most two: the fiber cover on G x B is a disjoint union
// of copies of the base (its gain graph is g-acyclic), the matrix is
// diagonally normalizable to 0/1 entries, and the subsemigroup generated by
// the nonzero idempotents is aperiodic. The three always agree.
struct TrivcovReport {
  bool trivial_cover;
  bool zero_one_normalizable;
  bool idempotents_aperiodic;

  bool agree() const {
    return trivial_cover == zero_one_normalizable &&
           zero_one_normalizable == idempotents_aperiodic;
  }
};

// Requires a GM matrix (invalid-input) of action degree at most two
// (degree-violation).
TrivcovReport trivcov_report(ReesMatrixSemigroup const& s);

}  // namespace deg2

#endif  // DEG2_GAIN_HPP_
