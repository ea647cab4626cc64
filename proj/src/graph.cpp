#include "deg2/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "deg2/error.hpp"

namespace deg2 {

namespace {

std::string edge_str(int u, int v) {
  return "[" + std::to_string(u) + "," + std::to_string(v) + "]";
}

}  // namespace

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) {
    fail("invalid-input", "vertex count must be nonnegative");
  }
  adj_.assign(static_cast<std::size_t>(n), std::vector<std::int8_t>(static_cast<std::size_t>(n), 0));
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail("invalid-input", "edge " + edge_str(u, v) + " out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      fail("invalid-input", "loop " + edge_str(u, v) + " not allowed in a simple graph");
    }
    if (u > v) {
      std::swap(u, v);
    }
    if (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
      fail("invalid-input", "duplicate edge " + edge_str(u, v));
    }
    adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    return false;
  }
  return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0;
}

int SimpleGraph::edge_index(int u, int v) const {
  if (u > v) {
    std::swap(u, v);
  }
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) {
    return -1;
  }
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w) {
    if (has_edge(v, w)) {
      out.push_back(w);
    }
  }
  return out;
}

int SimpleGraph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool SimpleGraph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v) {
    if (degree(v) == 0) {
      return true;
    }
  }
  return false;
}

bool SimpleGraph::is_connected() const {
  if (n_ <= 1) {
    return true;
  }
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Multigraph::Multigraph(int n, std::vector<MultiEdge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) {
    fail("invalid-input", "vertex count must be nonnegative");
  }
  for (auto const& e : edges_) {
    if (e.tail < 0 || e.head < 0 || e.tail >= n || e.head >= n) {
      fail("invalid-input",
           "edge " + edge_str(e.tail, e.head) + " out of range for n=" + std::to_string(n));
    }
  }
}

Multigraph::Multigraph(SimpleGraph const& g) : n_(g.vertex_count()) {
  edges_.reserve(g.edges().size());
  for (auto const& [u, v] : g.edges()) {
    edges_.push_back({u, v});
  }
}

bool is_matching(SimpleGraph const& g, std::vector<std::pair<int, int>> const& m) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [u, v] : m) {
    if (!g.has_edge(u, v)) {
      fail("invalid-input", "edge " + edge_str(u, v) + " is not an edge of the graph");
    }
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) {
      return false;
    }
    used[static_cast<std::size_t>(u)] = 1;
    used[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool is_anticlique(SimpleGraph const& g, std::vector<int> const& s) {
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) {
      fail("invalid-input", "vertex " + std::to_string(v) + " out of range");
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) {
        return false;
      }
    }
  }
  return true;
}

GraphInvariants graph_invariants(SimpleGraph const& g) {
  int n = g.vertex_count();
  if (n > 25) {
    fail("resource-limit", "graph_invariants is exact and capped at 25 vertices, got n=" +
                               std::to_string(n));
  }

  GraphInvariants inv{0, 0, {}};

  // Closed-neighbourhood masks drive both DPs.
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    nbr[static_cast<std::size_t>(u)] |= 1u << v;
    nbr[static_cast<std::size_t>(v)] |= 1u << u;
  }

  std::size_t total = std::size_t{1} << n;

  // alpha: dp over vertex masks, branch on the lowest vertex in the mask.
  {
    std::vector<std::uint8_t> dp(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      int v = std::countr_zero(mask);
      std::uint32_t without = mask & (mask - 1);
      std::uint8_t best = dp[without];
      std::uint32_t rest = mask & ~(nbr[static_cast<std::size_t>(v)] | (1u << v));
      best = std::max<std::uint8_t>(best, static_cast<std::uint8_t>(1 + dp[rest]));
      dp[mask] = best;
    }
    inv.alpha = dp[total - 1];
  }

  // nu: same shape, matching edges instead of independent vertices.
  {
    std::vector<std::uint8_t> dp(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      int v = std::countr_zero(mask);
      std::uint32_t without = mask & (mask - 1);
      std::uint8_t best = dp[without];
      std::uint32_t cands = nbr[static_cast<std::size_t>(v)] & mask;
      while (cands) {
        int w = std::countr_zero(cands);
        cands &= cands - 1;
        std::uint32_t rest = mask & ~((1u << v) | (1u << w));
        best = std::max<std::uint8_t>(best, static_cast<std::uint8_t>(1 + dp[rest]));
      }
      dp[mask] = best;
    }
    inv.nu = dp[total - 1];
  }

  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[static_cast<std::size_t>(v)] != -1) {
      continue;
    }
    std::vector<int> stack = {v};
    comp[static_cast<std::size_t>(v)] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(x)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  inv.components.assign(static_cast<std::size_t>(next), {});
  for (int v = 0; v < n; ++v) {
    inv.components[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  }
  return inv;
}

namespace {

// Shared backtracking core: map vertices of a into b preserving adjacency and
// non-adjacency. With a == b this enumerates automorphisms.
void extend_iso(SimpleGraph const& a, SimpleGraph const& b, std::vector<int>& img,
                std::vector<char>& used, int v, std::vector<std::vector<int>>* out, bool* found,
                bool stop_at_first) {
  int n = a.vertex_count();
  if (v == n) {
    if (out != nullptr) {
      out->push_back(img);
    }
    *found = true;
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) {
      continue;
    }
    if (a.degree(v) != b.degree(w)) {
      continue;
    }
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (a.has_edge(u, v) != b.has_edge(img[static_cast<std::size_t>(u)], w)) {
        ok = false;
      }
    }
    if (!ok) {
      continue;
    }
    img[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
    extend_iso(a, b, img, used, v + 1, out, found, stop_at_first);
    used[static_cast<std::size_t>(w)] = 0;
    if (stop_at_first && *found) {
      return;
    }
  }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(SimpleGraph const& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool found = false;
  extend_iso(g, g, img, used, 0, &out, &found, false);
  std::sort(out.begin(), out.end());
  return out;
}

bool are_isomorphic(SimpleGraph const& a, SimpleGraph const& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  int n = a.vertex_count();
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) {
    return false;
  }
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool found = false;
  extend_iso(a, b, img, used, 0, nullptr, &found, true);
  return found;
}

SimpleGraph line_graph(SimpleGraph const& g) {
  auto const& es = g.edges();
  int m = static_cast<int>(es.size());
  std::vector<std::pair<int, int>> ledges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = es[static_cast<std::size_t>(i)];
      auto [c, d] = es[static_cast<std::size_t>(j)];
      if (a == c || a == d || b == c || b == d) {
        ledges.emplace_back(i, j);
      }
    }
  }
  return SimpleGraph(m, std::move(ledges));
}

SimpleGraph simplify(Multigraph const& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto const& e : g.edges()) {
    if (e.tail == e.head) {
      continue;
    }
    int u = std::min(e.tail, e.head);
    int v = std::max(e.tail, e.head);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

std::vector<std::vector<int>> all_matchings(SimpleGraph const& g) {
  int m = g.edge_count();
  if (m > 20) {
    fail("resource-limit", "matching enumeration capped at 20 edges");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  // Enumerate in increasing last-edge order; recursion keeps it lexicographic.
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(cur);
    for (int i = next; i < m; ++i) {
      auto [u, v] = g.edges()[static_cast<std::size_t>(i)];
      if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) {
        continue;
      }
      used[static_cast<std::size_t>(u)] = 1;
      used[static_cast<std::size_t>(v)] = 1;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
      used[static_cast<std::size_t>(u)] = 0;
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> all_anticliques(SimpleGraph const& g) {
  int n = g.vertex_count();
  if (n > 20) {
    fail("resource-limit", "anticlique enumeration capped at 20 vertices");
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) {
        s.push_back(v);
      }
    }
    if (is_anticlique(g, s)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

Mat01 incidence_matrix(SimpleGraph const& g) {
  if (g.has_isolated_vertex()) {
    fail("degenerate-input", "incidence matrix needs a graph without isolated vertices");
  }
  int n = g.vertex_count();
  int m = g.edge_count();
  Mat01 s(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int j = 0; j < m; ++j) {
    auto [u, v] = g.edges()[static_cast<std::size_t>(j)];
    s[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)] = 1;
    s[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = 1;
  }
  return s;
}

Mat01 simplicial_matrix(SimpleGraph const& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  Mat01 c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m + n), 0));
  for (int j = 0; j < m; ++j) {
    auto [u, v] = g.edges()[static_cast<std::size_t>(j)];
    c[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)] = 1;
    c[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = 1;
  }
  for (int v = 0; v < n; ++v) {
    c[static_cast<std::size_t>(v)][static_cast<std::size_t>(m + v)] = 1;
  }
  return c;
}

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) {
      edges.emplace_back(u, a + v);
    }
  }
  return SimpleGraph(a + b, std::move(edges));
}

SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) {
    fail("invalid-input", "cycle needs at least 3 vertices");
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, (v + 1) % n);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph edgeless_graph(int n) {
  return SimpleGraph(n, {});
}

}  // namespace deg2
