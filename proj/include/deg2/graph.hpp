#ifndef DEG2_GRAPH_HPP_
#define DEG2_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace deg2 {

// Finite simple graph on vertices 0..n-1. Edges are stored canonically:
// each pair with u < v, the list sorted lexicographically, no duplicates.
class SimpleGraph {
 public:
  SimpleGraph() : n_(0) {}
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept {
    return n_;
  }

  int edge_count() const noexcept {
    return static_cast<int>(edges_.size());
  }

  std::vector<std::pair<int, int>> const& edges() const noexcept {
    return edges_;
  }

  bool has_edge(int u, int v) const;

  // Index of edge {u,v} in edges(), or -1.
  int edge_index(int u, int v) const;

  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  bool has_isolated_vertex() const;
  bool is_connected() const;

  bool operator==(SimpleGraph const&) const = default;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::int8_t>> adj_;
};

// Oriented multigraph: parallel edges and loops allowed, edge identity is the
// index into edges(). Orientation matters only to callers that label edges
// (gain graphs); the underlying undirected graph is what simplify() extracts.
struct MultiEdge {
  int tail;
  int head;

  auto operator<=>(MultiEdge const&) const = default;
};

class Multigraph {
 public:
  Multigraph() : n_(0) {}
  Multigraph(int n, std::vector<MultiEdge> edges);

  // Forgets nothing: simple edges u<v become tail=u, head=v in list order.
  explicit Multigraph(SimpleGraph const& g);

  int vertex_count() const noexcept {
    return n_;
  }

  int edge_count() const noexcept {
    return static_cast<int>(edges_.size());
  }

  std::vector<MultiEdge> const& edges() const noexcept {
    return edges_;
  }

  MultiEdge const& edge(int id) const {
    return edges_.at(static_cast<std::size_t>(id));
  }

  bool operator==(Multigraph const&) const = default;

 private:
  int n_;
  std::vector<MultiEdge> edges_;
};

struct GraphInvariants {
  int nu;     // matching number
  int alpha;  // independence number
  std::vector<std::vector<int>> components;
};

// m is a list of edges of g (each must exist in g); true iff pairwise
// vertex-disjoint.
bool is_matching(SimpleGraph const& g, std::vector<std::pair<int, int>> const& m);

// s is a vertex set (range-checked); true iff no edge of g joins two of them.
bool is_anticlique(SimpleGraph const& g, std::vector<int> const& s);

// Exact nu/alpha by mask DP, components by search. Guarded to n <= 25.
GraphInvariants graph_invariants(SimpleGraph const& g);

// All automorphisms as permutation tables, lexicographically sorted.
// Backtracking with degree pruning; meant for the small graphs in scope.
std::vector<std::vector<int>> automorphisms(SimpleGraph const& g);

// Backtracking isomorphism test for small graphs.
bool are_isomorphic(SimpleGraph const& a, SimpleGraph const& b);

// Vertices are g's edges in list order; adjacency = shared endpoint.
SimpleGraph line_graph(SimpleGraph const& g);

// Drop loops and duplicate/parallel edges, forget orientation.
SimpleGraph simplify(Multigraph const& g);

// All matchings (as sorted lists of edge indices) / all anticliques (as
// sorted vertex lists), each in a fixed canonical order. Includes the empty
// one. Used by the structured enumeration and the anticlique target.
std::vector<std::vector<int>> all_matchings(SimpleGraph const& g);
std::vector<std::vector<int>> all_anticliques(SimpleGraph const& g);

using Mat01 = std::vector<std::vector<int>>;

// V x E incidence matrix; every column sums to 2. Graphs with an isolated
// vertex are rejected (degenerate-input) since a zero row breaks the
// structure-matrix use downstream.
Mat01 incidence_matrix(SimpleGraph const& g);

// [S | I_V]: V x (E + V), the structure matrix of the simplicial complex of
// g (edges then vertices). Defined for every graph.
Mat01 simplicial_matrix(SimpleGraph const& g);

SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph edgeless_graph(int n);

}  // namespace deg2

#endif  // DEG2_GRAPH_HPP_
