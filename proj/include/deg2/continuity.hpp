#ifndef DEG2_CONTINUITY_HPP_
#define DEG2_CONTINUITY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "deg2/graph.hpp"
#include "deg2/pfun.hpp"

namespace deg2 {

// Largest vertex count enumerate_continuous/enumerate_strict will sweep;
// (n+1)^n candidate tables get filtered, so 7 keeps a full sweep near 2M.
inline constexpr int kDefaultEnumerationBound = 7;

// A simplex of the target (one or two vertices) whose preimage breaks the
// rule, together with that preimage. strictness_only marks witnesses for
// maps that are continuous but not strictly so.
struct ContinuityWitness {
  std::vector<int> simplex;
  std::vector<int> preimage;
  bool strictness_only;
};

struct ContinuityReport {
  bool continuous;
  bool strict;
  std::optional<ContinuityWitness> witness;
};

// f: V(src) -> V(dst) partial. Continuous: every vertex/edge of dst pulls
// back to nothing, a vertex or an edge of src. Strict: edges of dst pull
// back to nothing or an edge (never a single vertex).
ContinuityReport check_continuity(PartialFunction const& f, SimpleGraph const& src,
                                  SimpleGraph const& dst);

// All continuous self-maps of g, in lexicographic table order (undefined
// sorts first). This is the raw filter over all (n+1)^n tables.
std::vector<PartialFunction> enumerate_continuous(SimpleGraph const& g,
                                                  int bound = kDefaultEnumerationBound);

// The strictly continuous self-maps. Graphs with an isolated vertex are
// rejected (degenerate-input): strictness is only meaningful without them.
std::vector<PartialFunction> enumerate_strict(SimpleGraph const& g,
                                              int bound = kDefaultEnumerationBound);

// Second, independent enumeration: assemble every continuous map as
// sing v inj from a matching-to-anticlique part and an injective part whose
// inverse is a graph morphism, subject to the separation conditions. Agrees
// with enumerate_continuous element-for-element; each serves as the other's
// oracle.
std::vector<PartialFunction> enumerate_continuous_structured(SimpleGraph const& g);

// Build a continuous map from its two halves, validating each hypothesis:
//   - every fiber of g_sing is an edge of the graph (matching-violation),
//   - the image of g_sing is an anticlique (anticlique-violation),
//   - h_inj is injective and pulls edges inside its image back to edges
//     (adjacency-violation),
//   - domains and images of the two halves are disjoint (overlap-violation),
//   - no edge joins the two images (adjacency-violation).
PartialFunction build_from_parts(PartialFunction const& g_sing, PartialFunction const& h_inj,
                                 SimpleGraph const& graph);

// Close the given degree-<=2 self-maps under composition, build the graph of
// their size-2 fibers, and verify every element of the closure is continuous
// on it. A fiber of size >= 3 anywhere in the closure is a degree-violation.
bool verify_embedding(std::vector<PartialFunction> const& gens, int n,
                      std::size_t cap = 50000);

}  // namespace deg2

#endif  // DEG2_CONTINUITY_HPP_
