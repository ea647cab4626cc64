#include "deg2/rees.hpp"

#include <algorithm>
#include <set>

#include "deg2/continuity.hpp"
#include "deg2/error.hpp"

namespace deg2 {

ReesMatrixSemigroup::ReesMatrixSemigroup(FiniteGroup group, int a_size, int b_size,
                                         std::vector<std::vector<int>> c)
    : group_(std::move(group)), a_size_(a_size), b_size_(b_size), c_(std::move(c)) {
  if (a_size <= 0 || b_size <= 0) {
    fail("invalid-input", "index sets must be nonempty");
  }
  if (static_cast<int>(c_.size()) != b_size) {
    fail("invalid-input", "structure matrix must have one row per element of B");
  }
  for (auto const& row : c_) {
    if (static_cast<int>(row.size()) != a_size) {
      fail("invalid-input", "structure matrix must have one column per element of A");
    }
    for (int x : row) {
      if (x != kZeroEntry && (x < 0 || x >= group_.order())) {
        fail("invalid-input", "structure matrix entry out of range");
      }
    }
  }
  for (int b = 0; b < b_size; ++b) {
    bool nonzero = false;
    for (int a = 0; a < a_size; ++a) {
      nonzero = nonzero || entry(b, a) != kZeroEntry;
    }
    if (!nonzero) {
      fail("degenerate-input", "row " + std::to_string(b) + " of the structure matrix is zero");
    }
  }
  for (int a = 0; a < a_size; ++a) {
    bool nonzero = false;
    for (int b = 0; b < b_size; ++b) {
      nonzero = nonzero || entry(b, a) != kZeroEntry;
    }
    if (!nonzero) {
      fail("degenerate-input",
           "column " + std::to_string(a) + " of the structure matrix is zero");
    }
  }
}

std::vector<ReesElement> ReesMatrixSemigroup::elements() const {
  std::vector<ReesElement> out;
  out.push_back(ReesElement::make_zero());
  for (int a = 0; a < a_size_; ++a) {
    for (int g = 0; g < group_.order(); ++g) {
      for (int b = 0; b < b_size_; ++b) {
        out.push_back(ReesElement::make(a, g, b));
      }
    }
  }
  return out;
}

ReesElement rees_multiply(ReesMatrixSemigroup const& s, ReesElement const& x,
                          ReesElement const& y) {
  if (x.zero || y.zero) {
    return ReesElement::make_zero();
  }
  int c = s.entry(x.b, y.a);
  if (c == ReesMatrixSemigroup::kZeroEntry) {
    return ReesElement::make_zero();
  }
  return ReesElement::make(x.a, s.group().mult(s.group().mult(x.g, c), y.g), y.b);
}

bool is_gm_matrix(ReesMatrixSemigroup const& s) {
  auto const& g = s.group();

  // Rows b, b' are left multiples iff normalizing each by the inverse of its
  // first nonzero entry makes them equal.
  auto normalized_row = [&](int b) {
    std::vector<int> row(static_cast<std::size_t>(s.a_size()), ReesMatrixSemigroup::kZeroEntry);
    int lead = -1;
    for (int a = 0; a < s.a_size(); ++a) {
      if (s.entry(b, a) != ReesMatrixSemigroup::kZeroEntry) {
        lead = s.entry(b, a);
        break;
      }
    }
    for (int a = 0; a < s.a_size(); ++a) {
      int e = s.entry(b, a);
      if (e != ReesMatrixSemigroup::kZeroEntry) {
        row[static_cast<std::size_t>(a)] = g.mult(g.inverse(lead), e);
      }
    }
    return row;
  };
  auto normalized_col = [&](int a) {
    std::vector<int> col(static_cast<std::size_t>(s.b_size()), ReesMatrixSemigroup::kZeroEntry);
    int lead = -1;
    for (int b = 0; b < s.b_size(); ++b) {
      if (s.entry(b, a) != ReesMatrixSemigroup::kZeroEntry) {
        lead = s.entry(b, a);
        break;
      }
    }
    for (int b = 0; b < s.b_size(); ++b) {
      int e = s.entry(b, a);
      if (e != ReesMatrixSemigroup::kZeroEntry) {
        col[static_cast<std::size_t>(b)] = g.mult(e, g.inverse(lead));
      }
    }
    return col;
  };

  for (int b = 0; b < s.b_size(); ++b) {
    for (int b2 = b + 1; b2 < s.b_size(); ++b2) {
      if (normalized_row(b) == normalized_row(b2)) {
        return false;
      }
    }
  }
  for (int a = 0; a < s.a_size(); ++a) {
    for (int a2 = a + 1; a2 < s.a_size(); ++a2) {
      if (normalized_col(a) == normalized_col(a2)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

PartialFunction action_map(ReesMatrixSemigroup const& s, ReesElement const& x) {
  int points = s.group().order() * s.b_size();
  std::vector<int> t(static_cast<std::size_t>(points), PartialFunction::kUndefined);
  if (!x.zero) {
    for (int g = 0; g < s.group().order(); ++g) {
      for (int b = 0; b < s.b_size(); ++b) {
        int c = s.entry(b, x.a);
        if (c == ReesMatrixSemigroup::kZeroEntry) {
          continue;
        }
        int img_g = s.group().mult(s.group().mult(g, c), x.g);
        t[static_cast<std::size_t>(g * s.b_size() + b)] = img_g * s.b_size() + x.b;
      }
    }
  }
  return PartialFunction(points, points, std::move(t));
}

PartialFunction rlm_map(ReesMatrixSemigroup const& s, ReesElement const& x) {
  std::vector<int> t(static_cast<std::size_t>(s.b_size()), PartialFunction::kUndefined);
  if (!x.zero) {
    for (int b = 0; b < s.b_size(); ++b) {
      if (s.entry(b, x.a) != ReesMatrixSemigroup::kZeroEntry) {
        t[static_cast<std::size_t>(b)] = x.b;
      }
    }
  }
  return PartialFunction(s.b_size(), s.b_size(), std::move(t));
}

TransformationSemigroup faithful_image(std::vector<PartialFunction> const& maps, int points) {
  std::vector<PartialFunction> gens;
  std::set<PartialFunction> seen;
  for (auto const& f : maps) {
    if (seen.insert(f).second) {
      gens.push_back(f);
    }
  }
  return TransformationSemigroup::closure(gens, points);
}

}  // namespace

TransformationSemigroup gm_action(ReesMatrixSemigroup const& s) {
  std::vector<PartialFunction> maps;
  for (auto const& x : s.elements()) {
    maps.push_back(action_map(s, x));
  }
  return faithful_image(maps, s.group().order() * s.b_size());
}

TransformationSemigroup rlm(ReesMatrixSemigroup const& s) {
  std::vector<PartialFunction> maps;
  for (auto const& x : s.elements()) {
    maps.push_back(rlm_map(s, x));
  }
  return faithful_image(maps, s.b_size());
}

int gm_action_degree(ReesMatrixSemigroup const& s) {
  int deg = 0;
  for (int a = 0; a < s.a_size(); ++a) {
    int support = 0;
    for (int b = 0; b < s.b_size(); ++b) {
      if (s.entry(b, a) != ReesMatrixSemigroup::kZeroEntry) {
        ++support;
      }
    }
    deg = std::max(deg, support);
  }
  return deg;
}

bool linked(ReesMatrixSemigroup const& s, LinkedPair const& pair) {
  auto const& g = s.group();
  for (int b = 0; b < s.b_size(); ++b) {
    for (int a = 0; a < s.a_size(); ++a) {
      int lhs = ReesMatrixSemigroup::kZeroEntry;
      int bf = pair.row.fun.apply(b);
      if (bf != PartialFunction::kUndefined &&
          s.entry(bf, a) != ReesMatrixSemigroup::kZeroEntry) {
        lhs = g.mult(pair.row.assign[static_cast<std::size_t>(b)], s.entry(bf, a));
      }
      int rhs = ReesMatrixSemigroup::kZeroEntry;
      int fa = pair.col.fstar.apply(a);
      if (fa != PartialFunction::kUndefined &&
          s.entry(b, fa) != ReesMatrixSemigroup::kZeroEntry) {
        rhs = g.mult(s.entry(b, fa), pair.col.assign[static_cast<std::size_t>(a)]);
      }
      if (lhs != rhs) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// All partial self-map tables on n points, lexicographic, undefined first.
std::vector<std::vector<int>> all_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(n), PartialFunction::kUndefined);
  while (true) {
    out.push_back(t);
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

// All G-assignments over the domain of f, as full-length vectors with
// kNoGroupElement off the domain.
std::vector<std::vector<int>> all_assignments(FiniteGroup const& g, PartialFunction const& f) {
  auto dom = f.domain();
  std::vector<std::vector<int>> out;
  std::vector<int> choice(dom.size(), 0);
  while (true) {
    std::vector<int> assign(static_cast<std::size_t>(f.dom_size()),
                            WreathElement::kNoGroupElement);
    for (std::size_t i = 0; i < dom.size(); ++i) {
      assign[static_cast<std::size_t>(dom[i])] = choice[i];
    }
    out.push_back(std::move(assign));
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
  return out;
}

std::vector<LinkedPair> hull_trivial_group(ReesMatrixSemigroup const& s, std::size_t cap) {
  int na = s.a_size();
  int nb = s.b_size();

  // Column supports ("blocks"); over the trivial group the linked condition
  // says exactly that f pulls every block back to the empty set or a block.
  std::vector<std::vector<int>> block(static_cast<std::size_t>(na));
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) {
      if (s.entry(b, a) != ReesMatrixSemigroup::kZeroEntry) {
        block[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }

  std::vector<LinkedPair> out;
  for (auto const& table : all_tables(nb)) {
    PartialFunction f(nb, nb, table);

    // For each block, the preimage either vanishes (fstar undefined there)
    // or must be a block again; several equal blocks give several adjoints.
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(na));
    bool feasible = true;
    for (int a = 0; a < na && feasible; ++a) {
      std::vector<int> pre;
      for (int b = 0; b < nb; ++b) {
        int bf = f.apply(b);
        if (bf != PartialFunction::kUndefined &&
            std::binary_search(block[static_cast<std::size_t>(a)].begin(),
                               block[static_cast<std::size_t>(a)].end(), bf)) {
          pre.push_back(b);
        }
      }
      if (pre.empty()) {
        candidates[static_cast<std::size_t>(a)].push_back(PartialFunction::kUndefined);
        continue;
      }
      for (int a2 = 0; a2 < na; ++a2) {
        if (block[static_cast<std::size_t>(a2)] == pre) {
          candidates[static_cast<std::size_t>(a)].push_back(a2);
        }
      }
      feasible = !candidates[static_cast<std::size_t>(a)].empty();
    }
    if (!feasible) {
      continue;
    }

    std::vector<int> pick(static_cast<std::size_t>(na), 0);
    while (true) {
      std::vector<int> fstar_table(static_cast<std::size_t>(na));
      for (int a = 0; a < na; ++a) {
        fstar_table[static_cast<std::size_t>(a)] =
            candidates[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                pick[static_cast<std::size_t>(a)])];
      }
      PartialFunction fstar(na, na, fstar_table);
      std::vector<int> row_assign(static_cast<std::size_t>(nb), WreathElement::kNoGroupElement);
      for (int b : f.domain()) {
        row_assign[static_cast<std::size_t>(b)] = 0;
      }
      std::vector<int> col_assign(static_cast<std::size_t>(na), WreathElement::kNoGroupElement);
      for (int a : fstar.domain()) {
        col_assign[static_cast<std::size_t>(a)] = 0;
      }
      out.push_back(LinkedPair{WreathElement{f, std::move(row_assign)},
                               HullColPart{fstar, std::move(col_assign)}});
      if (out.size() > cap) {
        fail("resource-limit", "hull enumeration exceeded cap");
      }
      int a = 0;
      while (a < na && pick[static_cast<std::size_t>(a)] + 1 ==
                           static_cast<int>(candidates[static_cast<std::size_t>(a)].size())) {
        pick[static_cast<std::size_t>(a)] = 0;
        ++a;
      }
      if (a == na) {
        break;
      }
      ++pick[static_cast<std::size_t>(a)];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LinkedPair> translational_hull(ReesMatrixSemigroup const& s, std::size_t cap) {
  if (s.group().order() == 1) {
    return hull_trivial_group(s, cap);
  }

  auto const& g = s.group();
  std::vector<WreathElement> rows;
  for (auto const& table : all_tables(s.b_size())) {
    PartialFunction f(s.b_size(), s.b_size(), table);
    for (auto& assign : all_assignments(g, f)) {
      rows.push_back(WreathElement{f, std::move(assign)});
    }
  }
  std::vector<HullColPart> cols;
  for (auto const& table : all_tables(s.a_size())) {
    PartialFunction f(s.a_size(), s.a_size(), table);
    for (auto& assign : all_assignments(g, f)) {
      cols.push_back(HullColPart{f, std::move(assign)});
    }
  }

  if (rows.size() * cols.size() > cap) {
    fail("resource-limit", "hull search space " + std::to_string(rows.size() * cols.size()) +
                               " exceeds cap " + std::to_string(cap));
  }

  std::vector<LinkedPair> out;
  for (auto const& r : rows) {
    for (auto const& c : cols) {
      LinkedPair pair{r, c};
      if (linked(s, pair)) {
        out.push_back(std::move(pair));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinkedPair hull_multiply(ReesMatrixSemigroup const& s, LinkedPair const& x, LinkedPair const& y) {
  auto const& g = s.group();
  WreathElement row = wreath_multiply(g, x.row, y.row);

  // Columns compose the other way round: (Y1 Y2) sends a through Y2 first.
  std::vector<int> fstar_table(static_cast<std::size_t>(s.a_size()),
                               PartialFunction::kUndefined);
  std::vector<int> assign(static_cast<std::size_t>(s.a_size()), WreathElement::kNoGroupElement);
  for (int a = 0; a < s.a_size(); ++a) {
    int mid = y.col.fstar.apply(a);
    if (mid == PartialFunction::kUndefined) {
      continue;
    }
    int top = x.col.fstar.apply(mid);
    if (top == PartialFunction::kUndefined) {
      continue;
    }
    fstar_table[static_cast<std::size_t>(a)] = top;
    assign[static_cast<std::size_t>(a)] = g.mult(x.col.assign[static_cast<std::size_t>(mid)],
                                                 y.col.assign[static_cast<std::size_t>(a)]);
  }
  return LinkedPair{std::move(row),
                    HullColPart{PartialFunction(s.a_size(), s.a_size(), std::move(fstar_table)),
                                std::move(assign)}};
}

LinkedPair hull_identity(ReesMatrixSemigroup const& s) {
  std::vector<int> row_assign(static_cast<std::size_t>(s.b_size()), s.group().identity());
  std::vector<int> col_assign(static_cast<std::size_t>(s.a_size()), s.group().identity());
  return LinkedPair{WreathElement{PartialFunction::identity(s.b_size()), std::move(row_assign)},
                    HullColPart{PartialFunction::identity(s.a_size()), std::move(col_assign)}};
}

LinkedPair inner_translation(ReesMatrixSemigroup const& s, ReesElement const& x) {
  auto const& g = s.group();
  std::vector<int> row_table(static_cast<std::size_t>(s.b_size()), PartialFunction::kUndefined);
  std::vector<int> row_assign(static_cast<std::size_t>(s.b_size()),
                              WreathElement::kNoGroupElement);
  std::vector<int> col_table(static_cast<std::size_t>(s.a_size()), PartialFunction::kUndefined);
  std::vector<int> col_assign(static_cast<std::size_t>(s.a_size()),
                              WreathElement::kNoGroupElement);
  if (!x.zero) {
    for (int b = 0; b < s.b_size(); ++b) {
      int c = s.entry(b, x.a);
      if (c != ReesMatrixSemigroup::kZeroEntry) {
        row_table[static_cast<std::size_t>(b)] = x.b;
        row_assign[static_cast<std::size_t>(b)] = g.mult(c, x.g);
      }
    }
    for (int a = 0; a < s.a_size(); ++a) {
      int c = s.entry(x.b, a);
      if (c != ReesMatrixSemigroup::kZeroEntry) {
        col_table[static_cast<std::size_t>(a)] = x.a;
        col_assign[static_cast<std::size_t>(a)] = g.mult(x.g, c);
      }
    }
  }
  return LinkedPair{
      WreathElement{PartialFunction(s.b_size(), s.b_size(), std::move(row_table)),
                    std::move(row_assign)},
      HullColPart{PartialFunction(s.a_size(), s.a_size(), std::move(col_table)),
                  std::move(col_assign)}};
}

namespace {

// The canonical hull pair of a continuous map: the map itself as row part,
// the unique block-preimage adjoint as column part.
LinkedPair pair_of_map(ReesMatrixSemigroup const& s, std::vector<std::vector<int>> const& block,
                       PartialFunction const& f) {
  int na = s.a_size();
  int nb = s.b_size();
  std::vector<int> fstar_table(static_cast<std::size_t>(na), PartialFunction::kUndefined);
  for (int a = 0; a < na; ++a) {
    std::vector<int> pre;
    for (int b = 0; b < nb; ++b) {
      int bf = f.apply(b);
      if (bf != PartialFunction::kUndefined &&
          std::binary_search(block[static_cast<std::size_t>(a)].begin(),
                             block[static_cast<std::size_t>(a)].end(), bf)) {
        pre.push_back(b);
      }
    }
    if (pre.empty()) {
      continue;
    }
    for (int a2 = 0; a2 < na; ++a2) {
      if (block[static_cast<std::size_t>(a2)] == pre) {
        fstar_table[static_cast<std::size_t>(a)] = a2;
        break;
      }
    }
    if (fstar_table[static_cast<std::size_t>(a)] == PartialFunction::kUndefined) {
      fail("internal", "continuous map has no adjoint; hull correspondence broken");
    }
  }
  PartialFunction fstar(na, na, std::move(fstar_table));
  std::vector<int> row_assign(static_cast<std::size_t>(nb), WreathElement::kNoGroupElement);
  for (int b : f.domain()) {
    row_assign[static_cast<std::size_t>(b)] = 0;
  }
  std::vector<int> col_assign(static_cast<std::size_t>(na), WreathElement::kNoGroupElement);
  for (int a : fstar.domain()) {
    col_assign[static_cast<std::size_t>(a)] = 0;
  }
  return LinkedPair{WreathElement{f, std::move(row_assign)},
                    HullColPart{std::move(fstar), std::move(col_assign)}};
}

}  // namespace

bool hull_iso_check(SimpleGraph const& g, bool strict) {
  Mat01 mat = strict ? incidence_matrix(g) : simplicial_matrix(g);
  int nb = g.vertex_count();
  int na = static_cast<int>(mat.empty() ? 0 : mat[0].size());
  std::vector<std::vector<int>> c(static_cast<std::size_t>(nb),
                                  std::vector<int>(static_cast<std::size_t>(na)));
  for (int b = 0; b < nb; ++b) {
    for (int a = 0; a < na; ++a) {
      c[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
          mat[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == 1
              ? 0
              : ReesMatrixSemigroup::kZeroEntry;
    }
  }
  ReesMatrixSemigroup s(FiniteGroup::trivial(), na, nb, std::move(c));

  std::vector<std::vector<int>> block(static_cast<std::size_t>(na));
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) {
      if (s.entry(b, a) != ReesMatrixSemigroup::kZeroEntry) {
        block[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }

  auto maps = strict ? enumerate_strict(g) : enumerate_continuous(g);
  auto hull = translational_hull(s);
  if (maps.size() != hull.size()) {
    return false;
  }

  std::set<LinkedPair> hull_set(hull.begin(), hull.end());
  std::vector<LinkedPair> mapped;
  std::set<LinkedPair> mapped_set;
  for (auto const& f : maps) {
    LinkedPair p = pair_of_map(s, block, f);
    if (!linked(s, p) || hull_set.count(p) == 0 || !mapped_set.insert(p).second) {
      return false;
    }
    mapped.push_back(std::move(p));
  }

  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      LinkedPair expect = pair_of_map(s, block, compose(maps[i], maps[j]));
      LinkedPair got = hull_multiply(s, mapped[i], mapped[j]);
      if (!(expect == got)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace deg2
