#include "deg2/gain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "deg2/error.hpp"

namespace deg2 {

GainGraph::GainGraph(Multigraph base_in, FiniteGroup group_in, std::vector<int> labels_in)
    : base(std::move(base_in)), group(std::move(group_in)), labels(std::move(labels_in)) {
  if (static_cast<int>(labels.size()) != base.edge_count()) {
    fail("invalid-input", "gain graph needs exactly one label per edge");
  }
  for (int l : labels) {
    if (l < 0 || l >= group.order()) {
      fail("invalid-input", "gain label out of range");
    }
  }
}

GainGraph::GainGraph(Multigraph base_in, FiniteGroup group_in)
    : base(std::move(base_in)),
      group(std::move(group_in)),
      labels(static_cast<std::size_t>(base.edge_count()), group.identity()) {}

namespace {

bool is_permutation_of(std::vector<int> const& p, int n) {
  if (static_cast<int>(p.size()) != n) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      return false;
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

void validate_free_action(Multigraph const& g, FreeAction const& action) {
  int order = action.group.order();
  int nv = g.vertex_count();
  int ne = g.edge_count();
  if (static_cast<int>(action.vertex_perm.size()) != order ||
      static_cast<int>(action.edge_perm.size()) != order) {
    fail("invalid-input", "action needs one vertex and one edge permutation per group element");
  }
  for (int h = 0; h < order; ++h) {
    if (!is_permutation_of(action.vertex_perm[static_cast<std::size_t>(h)], nv) ||
        !is_permutation_of(action.edge_perm[static_cast<std::size_t>(h)], ne)) {
      fail("invalid-input", "action of element " + action.group.name(h) +
                                " is not a permutation");
    }
  }
  int id = action.group.identity();
  for (int v = 0; v < nv; ++v) {
    if (action.vertex_perm[static_cast<std::size_t>(id)][static_cast<std::size_t>(v)] != v) {
      fail("invalid-input", "identity does not act trivially on vertices");
    }
  }
  for (int e = 0; e < ne; ++e) {
    if (action.edge_perm[static_cast<std::size_t>(id)][static_cast<std::size_t>(e)] != e) {
      fail("invalid-input", "identity does not act trivially on edges");
    }
  }
  for (int h1 = 0; h1 < order; ++h1) {
    for (int h2 = 0; h2 < order; ++h2) {
      int h = action.group.mult(h1, h2);
      for (int v = 0; v < nv; ++v) {
        int via = action.vertex_perm[static_cast<std::size_t>(h1)][static_cast<std::size_t>(
            action.vertex_perm[static_cast<std::size_t>(h2)][static_cast<std::size_t>(v)])];
        if (action.vertex_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)] != via) {
          fail("invalid-input", "vertex permutations do not form a left action");
        }
      }
      for (int e = 0; e < ne; ++e) {
        int via = action.edge_perm[static_cast<std::size_t>(h1)][static_cast<std::size_t>(
            action.edge_perm[static_cast<std::size_t>(h2)][static_cast<std::size_t>(e)])];
        if (action.edge_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(e)] != via) {
          fail("invalid-input", "edge permutations do not form a left action");
        }
      }
    }
  }
  for (int h = 0; h < order; ++h) {
    for (int e = 0; e < ne; ++e) {
      int he = action.edge_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(e)];
      auto const& before = g.edge(e);
      auto const& after = g.edge(he);
      if (after.tail != action.vertex_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(
                            before.tail)] ||
          after.head != action.vertex_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(
                            before.head)]) {
        fail("invalid-input", "action of element " + action.group.name(h) +
                                  " does not preserve incidence");
      }
    }
  }
  for (int h = 0; h < order; ++h) {
    if (h == id) {
      continue;
    }
    for (int v = 0; v < nv; ++v) {
      if (action.vertex_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)] == v) {
        fail("invalid-input", "action is not free on vertices");
      }
    }
    for (int e = 0; e < ne; ++e) {
      if (action.edge_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(e)] == e) {
        fail("invalid-input", "action is not free on edges");
      }
    }
  }
}

DerivedGraph derived_graph(GainGraph const& g) {
  int nv = g.base.vertex_count();
  int ne = g.base.edge_count();
  int order = g.group.order();

  std::vector<MultiEdge> edges;
  edges.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(ne));
  for (int h = 0; h < order; ++h) {
    for (int e = 0; e < ne; ++e) {
      auto const& base_edge = g.base.edge(e);
      int img = g.group.mult(h, g.labels[static_cast<std::size_t>(e)]);
      edges.push_back(MultiEdge{h * nv + base_edge.tail, img * nv + base_edge.head});
    }
  }
  Multigraph graph(order * nv, std::move(edges));

  FreeAction action{g.group, {}, {}};
  action.vertex_perm.resize(static_cast<std::size_t>(order));
  action.edge_perm.resize(static_cast<std::size_t>(order));
  for (int h = 0; h < order; ++h) {
    auto& vp = action.vertex_perm[static_cast<std::size_t>(h)];
    auto& ep = action.edge_perm[static_cast<std::size_t>(h)];
    vp.resize(static_cast<std::size_t>(order * nv));
    ep.resize(static_cast<std::size_t>(order * ne));
    for (int h2 = 0; h2 < order; ++h2) {
      int img = g.group.mult(h, h2);
      for (int v = 0; v < nv; ++v) {
        vp[static_cast<std::size_t>(h2 * nv + v)] = img * nv + v;
      }
      for (int e = 0; e < ne; ++e) {
        ep[static_cast<std::size_t>(h2 * ne + e)] = img * ne + e;
      }
    }
  }
  validate_free_action(graph, action);
  return DerivedGraph{std::move(graph), std::move(action)};
}

GainGraph quotient(Multigraph const& g, FreeAction const& action) {
  validate_free_action(g, action);
  int order = action.group.order();
  int nv = g.vertex_count();
  int ne = g.edge_count();

  // Orbit representative = minimal index; shift[x] = the unique group
  // element carrying the representative to x (unique because the action is
  // free).
  std::vector<int> vrep(static_cast<std::size_t>(nv));
  std::vector<int> vshift(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    int rep = v;
    int shift = action.group.identity();
    for (int h = 0; h < order; ++h) {
      int hv = action.vertex_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)];
      if (hv < rep) {
        // h v is smaller, so v = h^{-1} (h v): the rep-to-v shift is h^{-1}.
        rep = hv;
        shift = action.group.inverse(h);
      }
    }
    vrep[static_cast<std::size_t>(v)] = rep;
    vshift[static_cast<std::size_t>(v)] = shift;
  }
  std::vector<int> vindex(static_cast<std::size_t>(nv), -1);
  int nv_q = 0;
  for (int v = 0; v < nv; ++v) {
    if (vrep[static_cast<std::size_t>(v)] == v) {
      vindex[static_cast<std::size_t>(v)] = nv_q++;
    }
  }

  std::vector<MultiEdge> q_edges;
  std::vector<int> q_labels;
  for (int e = 0; e < ne; ++e) {
    bool minimal = true;
    for (int h = 0; h < order && minimal; ++h) {
      minimal = action.edge_perm[static_cast<std::size_t>(h)][static_cast<std::size_t>(e)] >= e;
    }
    if (!minimal) {
      continue;
    }
    int t = g.edge(e).tail;
    int h = g.edge(e).head;
    q_edges.push_back(MultiEdge{vindex[static_cast<std::size_t>(vrep[static_cast<std::size_t>(t)])],
                                vindex[static_cast<std::size_t>(vrep[static_cast<std::size_t>(h)])]});
    q_labels.push_back(action.group.mult(action.group.inverse(vshift[static_cast<std::size_t>(t)]),
                                         vshift[static_cast<std::size_t>(h)]));
  }
  return GainGraph(Multigraph(nv_q, std::move(q_edges)), action.group, std::move(q_labels));
}

GainGraph switch_labels(GainGraph const& g, std::vector<int> const& d) {
  if (static_cast<int>(d.size()) != g.base.vertex_count()) {
    fail("invalid-input", "switching function needs one value per vertex");
  }
  for (int x : d) {
    if (x < 0 || x >= g.group.order()) {
      fail("invalid-input", "switching value out of range");
    }
  }
  std::vector<int> labels(g.labels.size());
  for (int e = 0; e < g.base.edge_count(); ++e) {
    auto const& edge = g.base.edge(e);
    labels[static_cast<std::size_t>(e)] =
        g.group.mult(g.group.mult(d[static_cast<std::size_t>(edge.tail)],
                                  g.labels[static_cast<std::size_t>(e)]),
                     g.group.inverse(d[static_cast<std::size_t>(edge.head)]));
  }
  return GainGraph(g.base, g.group, std::move(labels));
}

namespace {

// Spanning-forest potentials: p(root) = 1 and p(head) = p(tail) l(e) along
// tree edges, plus the component id of every vertex. Switching by p makes
// every tree label the identity.
struct ForestData {
  std::vector<int> potential;
  std::vector<int> component;
  int num_components = 0;
};

ForestData forest_potentials(GainGraph const& g) {
  int nv = g.base.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
  for (int e = 0; e < g.base.edge_count(); ++e) {
    auto const& edge = g.base.edge(e);
    adj[static_cast<std::size_t>(edge.tail)].push_back({e, edge.head});
    adj[static_cast<std::size_t>(edge.head)].push_back({e, edge.tail});
  }

  ForestData data;
  data.potential.assign(static_cast<std::size_t>(nv), -1);
  data.component.assign(static_cast<std::size_t>(nv), -1);
  for (int root = 0; root < nv; ++root) {
    if (data.component[static_cast<std::size_t>(root)] != -1) {
      continue;
    }
    int comp = data.num_components++;
    data.component[static_cast<std::size_t>(root)] = comp;
    data.potential[static_cast<std::size_t>(root)] = g.group.identity();
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto const& [e, w] : adj[static_cast<std::size_t>(v)]) {
        if (data.component[static_cast<std::size_t>(w)] != -1) {
          continue;
        }
        data.component[static_cast<std::size_t>(w)] = comp;
        int l = g.labels[static_cast<std::size_t>(e)];
        int pv = data.potential[static_cast<std::size_t>(v)];
        // Forward traversal multiplies by l; backward by its inverse.
        data.potential[static_cast<std::size_t>(w)] =
            g.base.edge(e).tail == v ? g.group.mult(pv, l)
                                     : g.group.mult(pv, g.group.inverse(l));
        stack.push_back(w);
      }
    }
  }
  return data;
}

// The labels after switching by the forest potentials; tree labels become 1.
std::vector<int> normalized_labels(GainGraph const& g, ForestData const& data) {
  std::vector<int> out(g.labels.size());
  for (int e = 0; e < g.base.edge_count(); ++e) {
    auto const& edge = g.base.edge(e);
    out[static_cast<std::size_t>(e)] =
        g.group.mult(g.group.mult(data.potential[static_cast<std::size_t>(edge.tail)],
                                  g.labels[static_cast<std::size_t>(e)]),
                     g.group.inverse(data.potential[static_cast<std::size_t>(edge.head)]));
  }
  return out;
}

}  // namespace

bool is_cohomologous(GainGraph const& g1, GainGraph const& g2) {
  if (!(g1.base == g2.base)) {
    fail("invalid-input", "labelings live on different graphs");
  }
  if (!(g1.group == g2.group)) {
    fail("invalid-input", "labelings take values in different groups");
  }
  // The traversal (and so the spanning forest) depends only on the shared
  // base graph, so both labelings normalize over the same tree edges.
  ForestData data = forest_potentials(g1);
  std::vector<int> n1 = normalized_labels(g1, data);
  std::vector<int> n2 = normalized_labels(g2, forest_potentials(g2));

  // A switch fixing every tree label is constant on each component and
  // conjugates the remaining labels; search that constant per component.
  auto const& group = g1.group;
  for (int comp = 0; comp < data.num_components; ++comp) {
    bool found = false;
    for (int c = 0; c < group.order() && !found; ++c) {
      bool ok = true;
      for (int e = 0; e < g1.base.edge_count() && ok; ++e) {
        if (data.component[static_cast<std::size_t>(g1.base.edge(e).tail)] != comp) {
          continue;
        }
        ok = n2[static_cast<std::size_t>(e)] ==
             group.mult(group.mult(c, n1[static_cast<std::size_t>(e)]), group.inverse(c));
      }
      found = ok;
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool is_g_acyclic(GainGraph const& g) {
  ForestData data = forest_potentials(g);
  std::vector<int> normalized = normalized_labels(g, data);
  return std::all_of(normalized.begin(), normalized.end(),
                     [&](int l) { return l == g.group.identity(); });
}

GainGraph graham_houghton(ReesMatrixSemigroup const& s) {
  int nb = s.b_size();
  int na = s.a_size();
  std::vector<MultiEdge> edges;
  std::vector<int> labels;
  for (int b = 0; b < nb; ++b) {
    for (int a = 0; a < na; ++a) {
      int c = s.entry(b, a);
      if (c != ReesMatrixSemigroup::kZeroEntry) {
        edges.push_back(MultiEdge{b, nb + a});
        labels.push_back(c);
      }
    }
  }
  return GainGraph(Multigraph(nb + na, std::move(edges)), s.group(), std::move(labels));
}

namespace {

void require_degree_two(ReesMatrixSemigroup const& s) {
  if (gm_action_degree(s) > 2) {
    fail("degree-violation", "a column of the structure matrix has more than two nonzero entries");
  }
}

}  // namespace

SimpleGraph gm_fiber_graph(ReesMatrixSemigroup const& s) {
  require_degree_two(s);
  int nb = s.b_size();
  auto const& g = s.group();
  std::set<std::pair<int, int>> edges;
  for (int a = 0; a < s.a_size(); ++a) {
    std::vector<int> support;
    for (int b = 0; b < nb; ++b) {
      if (s.entry(b, a) != ReesMatrixSemigroup::kZeroEntry) {
        support.push_back(b);
      }
    }
    if (support.size() != 2) {
      continue;
    }
    int l = g.mult(s.entry(support[0], a), g.inverse(s.entry(support[1], a)));
    for (int h = 0; h < g.order(); ++h) {
      int u = h * nb + support[0];
      int v = g.mult(h, l) * nb + support[1];
      edges.insert(std::minmax(u, v));
    }
  }
  return SimpleGraph(g.order() * nb,
                     std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

GainGraph rlm_cover_gain(ReesMatrixSemigroup const& s) {
  require_degree_two(s);
  auto const& g = s.group();
  std::vector<MultiEdge> edges;
  std::vector<int> labels;
  for (int a = 0; a < s.a_size(); ++a) {
    std::vector<int> support;
    for (int b = 0; b < s.b_size(); ++b) {
      if (s.entry(b, a) != ReesMatrixSemigroup::kZeroEntry) {
        support.push_back(b);
      }
    }
    if (support.size() != 2) {
      continue;
    }
    edges.push_back(MultiEdge{support[0], support[1]});
    labels.push_back(g.mult(s.entry(support[0], a), g.inverse(s.entry(support[1], a))));
  }
  return GainGraph(Multigraph(s.b_size(), std::move(edges)), g, std::move(labels));
}

TrivcovReport trivcov_report(ReesMatrixSemigroup const& s) {
  if (!is_gm_matrix(s)) {
    fail("invalid-input", "structure matrix has proportional rows or columns");
  }
  require_degree_two(s);

  TrivcovReport report{};
  report.trivial_cover = is_g_acyclic(rlm_cover_gain(s));
  report.zero_one_normalizable = is_g_acyclic(graham_houghton(s));

  std::vector<ReesElement> idempotents{ReesElement::make_zero()};
  for (int b = 0; b < s.b_size(); ++b) {
    for (int a = 0; a < s.a_size(); ++a) {
      int c = s.entry(b, a);
      if (c != ReesMatrixSemigroup::kZeroEntry) {
        idempotents.push_back(ReesElement::make(a, s.group().inverse(c), b));
      }
    }
  }
  auto closed = close_under(idempotents, [&](ReesElement const& x, ReesElement const& y) {
    return rees_multiply(s, x, y);
  });
  std::map<ReesElement, std::size_t> index;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    index.emplace(closed[i], i);
  }
  std::size_t m = closed.size();
  std::vector<std::size_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = index.at(rees_multiply(s, closed[i], closed[j]));
    }
  }
  report.idempotents_aperiodic = is_aperiodic(m, table);
  return report;
}

}  // namespace deg2
