#include "deg2/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace deg2 {

TransformationSemigroup TransformationSemigroup::closure(std::vector<PartialFunction> const& gens,
                                                         int points, std::size_t cap) {
  for (auto const& g : gens) {
    if (g.dom_size() != points || g.cod_size() != points) {
      fail("invalid-input", "generators must be self-maps on " + std::to_string(points) +
                                " points");
    }
  }

  TransformationSemigroup s;
  s.points_ = points;

  // Dedup generators but remember the original list positions that survive.
  std::vector<PartialFunction> unique_gens;
  for (auto const& g : gens) {
    if (s.index_.emplace(g, s.elements_.size()).second) {
      s.gens_.push_back(s.elements_.size());
      s.elements_.push_back(g);
      unique_gens.push_back(g);
      if (s.elements_.size() > cap) {
        fail("resource-limit",
             "closure exceeded cap of " + std::to_string(cap) + " elements");
      }
    }
  }

  for (std::size_t i = 0; i < s.elements_.size(); ++i) {
    s.right_cayley_.emplace_back();
    for (auto const& g : unique_gens) {
      PartialFunction p = compose(s.elements_[i], g);
      auto [it, inserted] = s.index_.emplace(p, s.elements_.size());
      if (inserted) {
        s.elements_.push_back(std::move(p));
        if (s.elements_.size() > cap) {
          fail("resource-limit",
               "closure exceeded cap of " + std::to_string(cap) + " elements");
        }
      }
      s.right_cayley_.back().push_back(it->second);
    }
  }

  s.left_cayley_.resize(s.elements_.size());
  for (std::size_t i = 0; i < s.elements_.size(); ++i) {
    for (auto const& g : unique_gens) {
      s.left_cayley_[i].push_back(s.index_.at(compose(g, s.elements_[i])));
    }
  }

  s.is_monoid_ = s.index_.count(PartialFunction::identity(points)) > 0;
  return s;
}

std::size_t TransformationSemigroup::index_of(PartialFunction const& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? npos : it->second;
}

std::size_t TransformationSemigroup::product(std::size_t i, std::size_t j) const {
  return index_.at(compose(elements_.at(i), elements_.at(j)));
}

std::vector<std::size_t> TransformationSemigroup::product_table() const {
  std::size_t m = elements_.size();
  if (m > 5000) {
    fail("resource-limit", "product table capped at 5000 elements, got " + std::to_string(m));
  }
  std::vector<std::size_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = product(i, j);
    }
  }
  return table;
}

int TransformationSemigroup::degree() const {
  return ts_degree(elements_);
}

namespace {

// Strongly connected components of the graph with out-edges given by `outs`,
// numbered in order of first appearance (Kosaraju). Returns component ids.
std::vector<int> scc(std::size_t m, std::vector<std::vector<std::size_t>> const& outs, int* count) {
  std::vector<std::vector<std::size_t>> ins(m);
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w : outs[v]) {
      ins[w].push_back(v);
    }
  }

  std::vector<char> seen(m, 0);
  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t root = 0; root < m; ++root) {
    if (seen[root]) {
      continue;
    }
    // Iterative DFS recording finish order.
    std::vector<std::pair<std::size_t, std::size_t>> stack = {{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < outs[v].size()) {
        std::size_t w = outs[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(m, -1);
  int c = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) {
      continue;
    }
    std::vector<std::size_t> stack = {*it};
    comp[*it] = c;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : ins[v]) {
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }

  // Renumber components in order of first appearance over elements.
  std::vector<int> remap(static_cast<std::size_t>(c), -1);
  int next_id = 0;
  for (std::size_t v = 0; v < m; ++v) {
    if (remap[static_cast<std::size_t>(comp[v])] == -1) {
      remap[static_cast<std::size_t>(comp[v])] = next_id++;
    }
    comp[v] = remap[static_cast<std::size_t>(comp[v])];
  }
  *count = c;
  return comp;
}

std::vector<std::vector<std::size_t>> dedup_rows(std::vector<std::vector<std::size_t>>&& rows) {
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  return std::move(rows);
}

}  // namespace

GreenData green(std::size_t m, std::vector<std::size_t> const& table) {
  if (table.size() != m * m) {
    fail("invalid-input", "product table has wrong shape");
  }

  auto at = [&](std::size_t i, std::size_t j) { return table[i * m + j]; };

  GreenData g;
  if (m == 0) {
    return g;
  }

  // R: reachability by right multiplication; L: by left; J: both.
  std::vector<std::vector<std::size_t>> right(m), left(m), both(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      right[i].push_back(at(i, j));
      left[i].push_back(at(j, i));
    }
    both[i] = right[i];
    both[i].insert(both[i].end(), left[i].begin(), left[i].end());
  }
  right = dedup_rows(std::move(right));
  left = dedup_rows(std::move(left));
  both = dedup_rows(std::move(both));

  g.r_class = scc(m, right, &g.num_r);
  g.l_class = scc(m, left, &g.num_l);
  g.j_class = scc(m, both, &g.num_j);

  // H = R meet L.
  std::map<std::pair<int, int>, int> h_ids;
  g.h_class.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto key = std::make_pair(g.r_class[i], g.l_class[i]);
    auto [it, inserted] = h_ids.emplace(key, g.num_h);
    if (inserted) {
      ++g.num_h;
    }
    g.h_class[i] = it->second;
  }

  // Regularity: a J-class is regular iff it contains an idempotent.
  g.j_regular.assign(static_cast<std::size_t>(g.num_j), 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (at(i, i) == i) {
      g.j_regular[static_cast<std::size_t>(g.j_class[i])] = 1;
    }
  }

  // J-order through the condensation: J_a <= J_b iff some element of J_a is
  // reachable from some element of J_b in the two-sided graph.
  std::vector<std::vector<int>> cond(static_cast<std::size_t>(g.num_j));
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w : both[v]) {
      if (g.j_class[v] != g.j_class[w]) {
        cond[static_cast<std::size_t>(g.j_class[v])].push_back(g.j_class[w]);
      }
    }
  }
  g.j_below.assign(static_cast<std::size_t>(g.num_j),
                   std::vector<char>(static_cast<std::size_t>(g.num_j), 0));
  for (int a = 0; a < g.num_j; ++a) {
    std::vector<int> stack = {a};
    g.j_below[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : cond[static_cast<std::size_t>(x)]) {
        if (!g.j_below[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)]) {
          g.j_below[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)] = 1;
          stack.push_back(y);
        }
      }
    }
  }

  return g;
}

DepthReport depth(std::size_t m, std::vector<std::size_t> const& table) {
  GreenData g = green(m, table);
  auto at = [&](std::size_t i, std::size_t j) { return table[i * m + j]; };

  // Longest chain of regular J-classes in the J-order.
  int regular_chain = 0;
  {
    std::vector<int> memo(static_cast<std::size_t>(g.num_j), -1);
    auto rec = [&](auto&& self, int a) -> int {
      int& r = memo[static_cast<std::size_t>(a)];
      if (r != -1) {
        return r;
      }
      r = g.j_regular[static_cast<std::size_t>(a)] ? 1 : 0;
      for (int b = 0; b < g.num_j; ++b) {
        if (b != a && g.j_below[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] &&
            !g.j_below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
          int below = self(self, b);
          int cand = below + (g.j_regular[static_cast<std::size_t>(a)] ? 1 : 0);
          r = std::max(r, cand);
        }
      }
      return r;
    };
    for (int a = 0; a < g.num_j; ++a) {
      regular_chain = std::max(regular_chain, rec(rec, a));
    }
  }

  // Longest chain of idempotents under e <= f iff e = ef = fe.
  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < m; ++i) {
    if (at(i, i) == i) {
      idem.push_back(i);
    }
  }
  int idem_chain = 0;
  {
    std::size_t k = idem.size();
    auto leq = [&](std::size_t e, std::size_t f) {
      return at(e, f) == e && at(f, e) == e;
    };
    std::vector<int> memo(k, -1);
    auto rec = [&](auto&& self, std::size_t a) -> int {
      int& r = memo[a];
      if (r != -1) {
        return r;
      }
      r = 1;
      for (std::size_t b = 0; b < k; ++b) {
        if (b != a && idem[b] != idem[a] && leq(idem[b], idem[a]) && !leq(idem[a], idem[b])) {
          r = std::max(r, 1 + self(self, b));
        }
      }
      return r;
    };
    for (std::size_t a = 0; a < k; ++a) {
      idem_chain = std::max(idem_chain, rec(rec, a));
    }
  }

  return DepthReport{regular_chain, idem_chain};
}

int delta(std::size_t m, std::vector<std::size_t> const& table) {
  DepthReport d = depth(m, table);
  if (d.regular_j_chain != d.idempotent_chain) {
    fail("internal", "regular J-chain " + std::to_string(d.regular_j_chain) +
                         " disagrees with idempotent chain " + std::to_string(d.idempotent_chain));
  }
  return d.regular_j_chain;
}

bool is_aperiodic(std::size_t m, std::vector<std::size_t> const& table) {
  for (std::size_t s = 0; s < m; ++s) {
    std::size_t x = s;
    for (std::size_t k = 0; k < m; ++k) {
      x = table[x * m + s];
    }
    if (table[x * m + s] != x) {
      return false;
    }
  }
  return true;
}

GreenData green(TransformationSemigroup const& s) {
  return green(s.size(), s.product_table());
}

int delta(TransformationSemigroup const& s) {
  return delta(s.size(), s.product_table());
}

bool is_aperiodic(TransformationSemigroup const& s) {
  return is_aperiodic(s.size(), s.product_table());
}

int idempotent_depth(TransformationSemigroup const& s) {
  auto const& el = s.elements();
  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (compose(el[i], el[i]) == el[i]) {
      idem.push_back(i);
    }
  }
  std::size_t k = idem.size();
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      auto const& e = el[idem[a]];
      auto const& f = el[idem[b]];
      leq[a][b] = compose(e, f) == e && compose(f, e) == e;
    }
  }
  int best = 0;
  std::vector<int> memo(k, -1);
  auto rec = [&](auto&& self, std::size_t a) -> int {
    int& r = memo[a];
    if (r != -1) {
      return r;
    }
    r = 1;
    for (std::size_t b = 0; b < k; ++b) {
      if (b != a && leq[b][a]) {
        r = std::max(r, 1 + self(self, b));
      }
    }
    return r;
  };
  for (std::size_t a = 0; a < k; ++a) {
    best = std::max(best, rec(rec, a));
  }
  return best;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  int n = static_cast<int>(table_.size());
  if (n == 0) {
    fail("invalid-input", "group cannot be empty");
  }
  if (static_cast<int>(names_.size()) != n) {
    fail("invalid-input", "need one name per group element");
  }
  for (auto const& row : table_) {
    if (static_cast<int>(row.size()) != n) {
      fail("invalid-input", "group table must be square");
    }
    for (int x : row) {
      if (x < 0 || x >= n) {
        fail("invalid-input", "group table entry out of range");
      }
    }
  }

  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = mult(e, a) == a && mult(a, e) == a;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ == -1) {
    fail("invalid-input", "group table has no identity");
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mult(mult(a, b), c) != mult(a, mult(b, c))) {
          fail("invalid-input", "group table is not associative");
        }
      }
    }
  }

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mult(a, b) == identity_ && mult(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] == -1) {
      fail("invalid-input", "group element " + std::to_string(a) + " has no inverse");
    }
  }
}

FiniteGroup FiniteGroup::trivial() {
  return FiniteGroup({{0}}, {"1"});
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) {
    fail("invalid-input", "cyclic group order must be positive");
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    }
  }
  std::vector<std::string> names;
  if (n == 1) {
    names = {"1"};
  } else if (n == 2) {
    names = {"1", "-1"};
  } else {
    names.push_back("1");
    names.push_back("g");
    for (int k = 2; k < n; ++k) {
      names.push_back("g^" + std::to_string(k));
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) {
    fail("invalid-input", "symmetric group supported for 1 <= n <= 6");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], static_cast<int>(i));
  }

  std::size_t m = perms.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        c[static_cast<std::size_t>(x)] =
            perms[b][static_cast<std::size_t>(perms[a][static_cast<std::size_t>(x)])];
      }
      table[a][b] = index.at(c);
    }
  }

  std::vector<std::string> names;
  for (auto const& q : perms) {
    std::string s;
    for (int x : q) {
      s += std::to_string(x);
    }
    names.push_back(std::move(s));
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  int m = a.order() * b.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      int xa = x / b.order(), xb = x % b.order();
      int ya = y / b.order(), yb = y % b.order();
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          a.mult(xa, ya) * b.order() + b.mult(xb, yb);
    }
  }
  std::vector<std::string> names;
  for (int x = 0; x < m; ++x) {
    names.push_back(a.name(x / b.order()) + "|" + b.name(x % b.order()));
  }
  return FiniteGroup(std::move(table), std::move(names));
}

int FiniteGroup::element(std::string const& name) const {
  for (int i = 0; i < order(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) {
      return i;
    }
  }
  return -1;
}

WreathElement wreath_identity(FiniteGroup const& g, int points) {
  WreathElement e{PartialFunction::identity(points),
                  std::vector<int>(static_cast<std::size_t>(points), g.identity())};
  return e;
}

WreathElement wreath_multiply(FiniteGroup const& g, WreathElement const& x,
                              WreathElement const& y) {
  if (x.fun.cod_size() != y.fun.dom_size()) {
    fail("invalid-input", "wreath product size mismatch");
  }
  PartialFunction fun = compose(x.fun, y.fun);
  std::vector<int> assign(static_cast<std::size_t>(fun.dom_size()),
                          WreathElement::kNoGroupElement);
  for (int q = 0; q < fun.dom_size(); ++q) {
    if (!fun.defined(q)) {
      continue;
    }
    int mid = x.fun.apply(q);
    assign[static_cast<std::size_t>(q)] =
        g.mult(x.assign[static_cast<std::size_t>(q)], y.assign[static_cast<std::size_t>(mid)]);
  }
  return WreathElement{std::move(fun), std::move(assign)};
}

PartialFunction wreath_action(FiniteGroup const& g, WreathElement const& x, int points) {
  if (x.fun.dom_size() != points || x.fun.cod_size() != points) {
    fail("invalid-input", "wreath element is not on the expected point set");
  }
  int total = g.order() * points;
  std::vector<int> t(static_cast<std::size_t>(total), PartialFunction::kUndefined);
  for (int h = 0; h < g.order(); ++h) {
    for (int q = 0; q < points; ++q) {
      if (!x.fun.defined(q)) {
        continue;
      }
      int img_q = x.fun.apply(q);
      int img_h = g.mult(h, x.assign[static_cast<std::size_t>(q)]);
      t[static_cast<std::size_t>(h * points + q)] = img_h * points + img_q;
    }
  }
  return PartialFunction(total, total, std::move(t));
}

std::vector<WreathElement> wreath_elements(FiniteGroup const& g,
                                           std::vector<PartialFunction> const& carrier,
                                           std::size_t cap) {
  std::vector<WreathElement> out;
  for (auto const& f : carrier) {
    auto dom = f.domain();
    std::vector<int> choice(dom.size(), 0);
    while (true) {
      std::vector<int> assign(static_cast<std::size_t>(f.dom_size()),
                              WreathElement::kNoGroupElement);
      for (std::size_t i = 0; i < dom.size(); ++i) {
        assign[static_cast<std::size_t>(dom[i])] = choice[i];
      }
      out.push_back(WreathElement{f, std::move(assign)});
      if (out.size() > cap) {
        fail("resource-limit", "wreath enumeration exceeded cap of " + std::to_string(cap));
      }
      std::size_t i = 0;
      while (i < dom.size() && choice[i] == g.order() - 1) {
        choice[i] = 0;
        ++i;
      }
      if (i == dom.size()) {
        break;
      }
      ++choice[i];
    }
  }
  return out;
}

SemidirectElement semidirect_multiply(SemidirectElement const& x, SemidirectElement const& y) {
  return SemidirectElement{compose(x.bijection, y.bijection),
                           subset_action(x.subset, y) };
}

std::uint32_t subset_action(std::uint32_t a, SemidirectElement const& x) {
  std::uint32_t image = 0;
  for (int v = 0; v < x.bijection.dom_size(); ++v) {
    if ((a >> v) & 1u) {
      int w = x.bijection.apply(v);
      if (w != PartialFunction::kUndefined) {
        image |= std::uint32_t{1} << w;
      }
    }
  }
  return image | x.subset;
}

std::vector<PartialFunction> symmetric_inverse_monoid(int n) {
  if (n < 0 || n > 8) {
    fail("resource-limit", "partial bijection enumeration capped at 8 points");
  }
  std::vector<PartialFunction> out;
  std::vector<int> t(static_cast<std::size_t>(n), PartialFunction::kUndefined);
  while (true) {
    PartialFunction f(n, n, t);
    if (f.is_injective()) {
      out.push_back(std::move(f));
    }
    int i = n - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - 1) {
      t[static_cast<std::size_t>(i)] = PartialFunction::kUndefined;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<SemidirectElement> semidirect_inv_2v(int n, std::size_t cap) {
  if (n < 0 || n > 20) {
    fail("invalid-input", "subset masks support up to 20 points");
  }
  auto sis = symmetric_inverse_monoid(n);
  std::size_t total = sis.size() << n;
  if (total > cap) {
    fail("resource-limit", "semidirect product has " + std::to_string(total) +
                               " elements, cap is " + std::to_string(cap));
  }
  std::vector<SemidirectElement> out;
  out.reserve(total);
  for (auto const& s : sis) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      out.push_back(SemidirectElement{s, mask});
    }
  }
  return out;
}

}  // namespace deg2
