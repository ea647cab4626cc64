#ifndef DEG2_DECOMPOSITION_HPP_
#define DEG2_DECOMPOSITION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "deg2/graph.hpp"
#include "deg2/pfun.hpp"
#include "deg2/semigroup.hpp"

namespace deg2 {

// A relational morphism of transformation semigroups (Q,S) -> (P,T): a
// fully defined state relation together with one chosen covering target
// element per source element.
struct RelationalMorphismTS {
  TransformationSemigroup source;
  TransformationSemigroup target;
  std::vector<std::vector<int>> rel;   // per source point, sorted target points
  std::vector<std::size_t> cover_map;  // per source element, a target element index
};

struct RmWitness {
  int q = -1;          // source point
  std::size_t s = 0;   // source element index
  int p = -1;          // related target point that breaks the covering
};

struct RmReport {
  bool valid = false;
  RmWitness witness;  // meaningful only when !valid
};

// Exhaustive check of both conditions: every rel row nonempty, and for every
// source point q, source element s with qs defined, and p in rel[q], the
// cover t of s has pt defined and pt in rel[qs].
RmReport validate_rm(RelationalMorphismTS const& rm);

// Every target element usable as the cover of source element s.
std::vector<std::size_t> valid_covers(RelationalMorphismTS const& rm, std::size_t s);

// Source = target, rel[q] = {q}, each element covering itself.
RelationalMorphismTS identity_rm(TransformationSemigroup const& ts);

// A letter of the derived automaton: a target point p together with a source
// element s (covered by t = cover_map[s]) such that pt is defined.
struct DerivedLetter {
  int p = -1;
  std::size_t s = 0;
};

// The derived transformation semigroup: states are the pairs (q, p) with
// p in rel[q]; the letter (p,(s,t)) sends (q,p') to (qs, pt) exactly when
// p' = p and qs is defined. The ts is the closure of the letter actions,
// with letters acting as the empty function left out of the generating set
// (they stay listed as letters).
struct DerivedTS {
  std::vector<std::pair<int, int>> states;
  std::vector<DerivedLetter> letters;
  std::vector<PartialFunction> letter_actions;  // per letter, on state indices
  TransformationSemigroup ts;
};

DerivedTS derived_ts(RelationalMorphismTS const& rm, std::size_t cap = kDefaultClosureCap);

// The target transformation semigroup of the degree-2 decomposition: P is
// the set of anti-cliques of g, acted on by the pairs
// (injective part of f, image of the singular part of f) via A(s,Y) = As u Y.
struct AnticliqueTarget {
  std::vector<std::vector<int>> anticliques;   // canonical order, sorted lists
  std::vector<SemidirectElement> pair_gens;    // one per generating map, in order
  TransformationSemigroup ts;                  // faithful image on anticlique indices
};

// Target generated by the pairs of the given maps (each a partial self-map
// of g's vertices). Throws anticlique-violation if a pair moves some
// anti-clique to a non-anti-clique (impossible for continuous maps of
// degree <= 2).
AnticliqueTarget anticlique_target(SimpleGraph const& g,
                                   std::vector<PartialFunction> const& maps,
                                   std::size_t cap = kDefaultClosureCap);

// Same, generated by every continuous self-map of g.
AnticliqueTarget anticlique_target(SimpleGraph const& g, std::size_t cap = kDefaultClosureCap);

// The canonical relational morphism from the closure of the given maps to
// the anticlique target: rel sends a vertex to the anti-cliques containing
// it, and each element is covered by its own pair.
RelationalMorphismTS anticlique_rm(SimpleGraph const& g,
                                   std::vector<PartialFunction> const& maps,
                                   std::size_t cap = kDefaultClosureCap);

// The full decomposition certificate for the continuous maps of a graph:
// a validated relational morphism into the anticlique target plus the scan
// that every element of the derived ts is an injective partial map. With
// singular_only, the source is the semigroup of continuous maps all of
// whose fibers have size exactly two; their covers are (empty, Im f), the
// target satisfies the right-zero law, and the bound tightens to one.
struct Certificate {
  SimpleGraph graph;
  bool singular_only = false;
  RelationalMorphismTS rm;
  std::vector<std::vector<int>> anticliques;
  DerivedTS derived;
  bool rm_valid = false;
  RmWitness witness;  // set when !rm_valid
  bool all_derived_injective = false;
  bool target_right_zero = false;  // checked only when singular_only
  int complexity_bound = -1;       // -1: no bound claimed

  bool valid() const {
    return rm_valid && all_derived_injective && (!singular_only || target_right_zero);
  }
};

Certificate degree2_certificate(SimpleGraph const& g, bool singular_only = false,
                                std::size_t cap = kDefaultClosureCap);

// Does the semigroup satisfy xy = y for all x, y?
bool is_right_zero(TransformationSemigroup const& ts);

}  // namespace deg2

#endif  // DEG2_DECOMPOSITION_HPP_
