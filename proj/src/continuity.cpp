#include "deg2/continuity.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "deg2/error.hpp"
#include "deg2/semigroup.hpp"

namespace deg2 {

namespace {

// Preimage of a single target point, sorted.
std::vector<int> point_preimage(PartialFunction const& f, int y) {
  std::vector<int> out;
  for (int x = 0; x < f.dom_size(); ++x) {
    if (f.apply(x) == y) {
      out.push_back(x);
    }
  }
  return out;
}

// Is the set (sorted) nothing, a vertex, or an edge of src?
bool is_face(SimpleGraph const& src, std::vector<int> const& s) {
  if (s.empty() || s.size() == 1) {
    return true;
  }
  if (s.size() == 2) {
    return src.has_edge(s[0], s[1]);
  }
  return false;
}

}  // namespace

ContinuityReport check_continuity(PartialFunction const& f, SimpleGraph const& src,
                                  SimpleGraph const& dst) {
  if (f.dom_size() != src.vertex_count() || f.cod_size() != dst.vertex_count()) {
    fail("invalid-input", "map sizes do not match the graphs");
  }

  ContinuityReport report{true, true, std::nullopt};

  auto record = [&](std::vector<int> simplex, std::vector<int> pre, bool strict_only) {
    if (!report.witness.has_value() || (report.witness->strictness_only && !strict_only)) {
      report.witness = ContinuityWitness{std::move(simplex), std::move(pre), strict_only};
    }
  };

  for (int v = 0; v < dst.vertex_count(); ++v) {
    auto pre = point_preimage(f, v);
    if (!is_face(src, pre)) {
      report.continuous = false;
      report.strict = false;
      record({v}, pre, false);
    }
  }

  for (auto [u, v] : dst.edges()) {
    auto pre_u = point_preimage(f, u);
    auto pre_v = point_preimage(f, v);
    std::vector<int> pre;
    std::merge(pre_u.begin(), pre_u.end(), pre_v.begin(), pre_v.end(), std::back_inserter(pre));
    if (!is_face(src, pre)) {
      report.continuous = false;
      report.strict = false;
      record({u, v}, pre, false);
    } else if (!pre.empty() && !(pre.size() == 2 && src.has_edge(pre[0], pre[1]))) {
      // Face but not an edge: a single vertex. Fine for continuity only.
      if (report.strict) {
        report.strict = false;
        record({u, v}, pre, true);
      }
    }
  }

  return report;
}

namespace {

// Run fn over all (n+1)^n partial self-map tables in lexicographic order,
// undefined first.
template <typename Fn>
void for_each_table(int n, Fn&& fn) {
  std::vector<int> t(static_cast<std::size_t>(n), PartialFunction::kUndefined);
  while (true) {
    fn(t);
    int i = n - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - 1) {
      t[static_cast<std::size_t>(i)] = PartialFunction::kUndefined;
      --i;
    }
    if (i < 0) {
      return;
    }
    ++t[static_cast<std::size_t>(i)];
  }
}

void check_bound(int n, int bound) {
  if (n > bound) {
    fail("resource-limit", "enumeration bound is " + std::to_string(bound) + " vertices, got n=" +
                               std::to_string(n));
  }
}

}  // namespace

std::vector<PartialFunction> enumerate_continuous(SimpleGraph const& g, int bound) {
  int n = g.vertex_count();
  check_bound(n, bound);
  std::vector<PartialFunction> out;
  for_each_table(n, [&](std::vector<int> const& t) {
    PartialFunction f(n, n, t);
    if (check_continuity(f, g, g).continuous) {
      out.push_back(std::move(f));
    }
  });
  return out;
}

std::vector<PartialFunction> enumerate_strict(SimpleGraph const& g, int bound) {
  if (g.has_isolated_vertex()) {
    fail("degenerate-input", "strict continuity needs a graph without isolated vertices");
  }
  int n = g.vertex_count();
  check_bound(n, bound);
  std::vector<PartialFunction> out;
  for_each_table(n, [&](std::vector<int> const& t) {
    PartialFunction f(n, n, t);
    auto rep = check_continuity(f, g, g);
    if (rep.continuous && rep.strict) {
      out.push_back(std::move(f));
    }
  });
  return out;
}

PartialFunction build_from_parts(PartialFunction const& g_sing, PartialFunction const& h_inj,
                                 SimpleGraph const& graph) {
  int n = graph.vertex_count();
  if (g_sing.dom_size() != n || g_sing.cod_size() != n || h_inj.dom_size() != n ||
      h_inj.cod_size() != n) {
    fail("invalid-input", "parts must be self-maps on the graph's vertex set");
  }

  // Every fiber of the singular half must be an edge.
  for (auto const& block : fibers(g_sing)) {
    if (block.size() != 2 || !graph.has_edge(block[0], block[1])) {
      std::string desc;
      for (int x : block) {
        desc += (desc.empty() ? "" : ",") + std::to_string(x);
      }
      fail("matching-violation", "fiber {" + desc + "} of the singular part is not an edge");
    }
  }

  auto sing_image = g_sing.image();
  if (!is_anticlique(graph, sing_image)) {
    fail("anticlique-violation", "image of the singular part spans an edge");
  }

  if (!h_inj.is_injective()) {
    fail("invalid-input", "injective part is not injective");
  }

  // h^{-1} must carry edges inside Im(h) back to edges.
  auto h_image = h_inj.image();
  std::vector<int> h_preimage(static_cast<std::size_t>(n), -1);
  for (int x : h_inj.domain()) {
    h_preimage[static_cast<std::size_t>(h_inj.apply(x))] = x;
  }
  for (std::size_t i = 0; i < h_image.size(); ++i) {
    for (std::size_t j = i + 1; j < h_image.size(); ++j) {
      int u = h_image[i];
      int v = h_image[j];
      if (graph.has_edge(u, v)) {
        int pu = h_preimage[static_cast<std::size_t>(u)];
        int pv = h_preimage[static_cast<std::size_t>(v)];
        if (!graph.has_edge(pu, pv)) {
          fail("adjacency-violation", "edge [" + std::to_string(u) + "," + std::to_string(v) +
                                          "] inside the injective image pulls back to a non-edge");
        }
      }
    }
  }

  for (int x : h_inj.domain()) {
    if (g_sing.defined(x)) {
      fail("overlap-violation", "domains overlap at point " + std::to_string(x));
    }
  }
  for (int y : h_image) {
    if (std::binary_search(sing_image.begin(), sing_image.end(), y)) {
      fail("overlap-violation", "images overlap at point " + std::to_string(y));
    }
  }

  for (int a : sing_image) {
    for (int b : h_image) {
      if (graph.has_edge(a, b)) {
        fail("adjacency-violation", "edge [" + std::to_string(a) + "," + std::to_string(b) +
                                        "] joins the singular and injective images");
      }
    }
  }

  return join(g_sing, h_inj);
}

std::vector<PartialFunction> enumerate_continuous_structured(SimpleGraph const& g) {
  int n = g.vertex_count();
  if (n > 12) {
    fail("resource-limit", "structured enumeration capped at 12 vertices");
  }

  auto matchings = all_matchings(g);
  auto anticliques = all_anticliques(g);

  std::set<PartialFunction> out;

  for (auto const& m : matchings) {
    std::vector<char> in_sing_dom(static_cast<std::size_t>(n), 0);
    for (int ei : m) {
      auto [u, v] = g.edges()[static_cast<std::size_t>(ei)];
      in_sing_dom[static_cast<std::size_t>(u)] = 1;
      in_sing_dom[static_cast<std::size_t>(v)] = 1;
    }
    for (auto const& x : anticliques) {
      if (x.size() != m.size()) {
        continue;
      }
      // All bijections matching-edge -> anticlique-point.
      std::vector<int> perm(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        perm[i] = static_cast<int>(i);
      }
      do {
        std::vector<int> sing_table(static_cast<std::size_t>(n), PartialFunction::kUndefined);
        for (std::size_t i = 0; i < m.size(); ++i) {
          auto [u, v] = g.edges()[static_cast<std::size_t>(m[i])];
          int target = x[static_cast<std::size_t>(perm[i])];
          sing_table[static_cast<std::size_t>(u)] = target;
          sing_table[static_cast<std::size_t>(v)] = target;
        }
        PartialFunction sing(n, n, sing_table);

        // Injective halves live on the remaining points and must avoid the
        // anticlique image and its neighbourhood.
        std::vector<char> image_blocked(static_cast<std::size_t>(n), 0);
        for (int a : x) {
          image_blocked[static_cast<std::size_t>(a)] = 1;
          for (int b : g.neighbors(a)) {
            image_blocked[static_cast<std::size_t>(b)] = 1;
          }
        }
        std::vector<int> free_points;
        for (int v = 0; v < n; ++v) {
          if (!in_sing_dom[static_cast<std::size_t>(v)]) {
            free_points.push_back(v);
          }
        }

        // Backtrack over injective assignments of the free points.
        std::vector<int> h_table(static_cast<std::size_t>(n), PartialFunction::kUndefined);
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, std::size_t idx) -> void {
          if (idx == free_points.size()) {
            PartialFunction h(n, n, h_table);
            out.insert(join(sing, h));
            return;
          }
          int p = free_points[idx];
          // Leaving p out of the domain is always allowed.
          self(self, idx + 1);
          for (int q = 0; q < n; ++q) {
            if (used[static_cast<std::size_t>(q)] || image_blocked[static_cast<std::size_t>(q)]) {
              continue;
            }
            // The inverse must be a graph morphism on the image: any edge
            // from q to an already-placed image point must pull back to an
            // edge.
            bool ok = true;
            for (std::size_t k = 0; k < idx && ok; ++k) {
              int p2 = free_points[k];
              int q2 = h_table[static_cast<std::size_t>(p2)];
              if (q2 != PartialFunction::kUndefined && g.has_edge(q, q2) && !g.has_edge(p, p2)) {
                ok = false;
              }
            }
            if (!ok) {
              continue;
            }
            h_table[static_cast<std::size_t>(p)] = q;
            used[static_cast<std::size_t>(q)] = 1;
            self(self, idx + 1);
            used[static_cast<std::size_t>(q)] = 0;
            h_table[static_cast<std::size_t>(p)] = PartialFunction::kUndefined;
          }
        };
        rec(rec, 0);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  return std::vector<PartialFunction>(out.begin(), out.end());
}

bool verify_embedding(std::vector<PartialFunction> const& gens, int n, std::size_t cap) {
  auto ts = TransformationSemigroup::closure(gens, n, cap);
  SimpleGraph gamma = fiber_graph(ts.elements(), n);
  for (auto const& f : ts.elements()) {
    if (!check_continuity(f, gamma, gamma).continuous) {
      return false;
    }
  }
  return true;
}

}  // namespace deg2
