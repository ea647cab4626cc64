#include "deg2/pfun.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "deg2/error.hpp"

namespace deg2 {

PartialFunction::PartialFunction(int dom_size, int cod_size, std::vector<int> table)
    : dom_size_(dom_size), cod_size_(cod_size), table_(std::move(table)) {
  if (dom_size < 0 || cod_size < 0) {
    fail("invalid-input", "set sizes must be nonnegative");
  }
  if (static_cast<int>(table_.size()) != dom_size) {
    fail("invalid-input", "table length " + std::to_string(table_.size()) +
                              " does not match dom_size " + std::to_string(dom_size));
  }
  for (int x = 0; x < dom_size; ++x) {
    int y = table_[static_cast<std::size_t>(x)];
    if (y != kUndefined && (y < 0 || y >= cod_size)) {
      fail("invalid-input", "image " + std::to_string(y) + " of point " + std::to_string(x) +
                                " out of range for cod_size " + std::to_string(cod_size));
    }
  }
}

PartialFunction PartialFunction::identity(int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    t[static_cast<std::size_t>(x)] = x;
  }
  return PartialFunction(n, n, std::move(t));
}

PartialFunction PartialFunction::empty(int dom_size, int cod_size) {
  return PartialFunction(dom_size, cod_size,
                         std::vector<int>(static_cast<std::size_t>(dom_size), kUndefined));
}

std::vector<int> PartialFunction::domain() const {
  std::vector<int> out;
  for (int x = 0; x < dom_size_; ++x) {
    if (defined(x)) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> PartialFunction::image() const {
  std::vector<int> out;
  for (int y : table_) {
    if (y != kUndefined) {
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int PartialFunction::rank() const {
  return static_cast<int>(image().size());
}

int PartialFunction::domain_size() const {
  return static_cast<int>(domain().size());
}

bool PartialFunction::is_empty() const {
  return domain_size() == 0;
}

bool PartialFunction::is_total() const {
  return domain_size() == dom_size_;
}

bool PartialFunction::is_injective() const {
  return rank() == domain_size();
}

bool PartialFunction::is_permutation() const {
  return dom_size_ == cod_size_ && is_total() && is_injective();
}

std::string PartialFunction::pretty() const {
  if (is_empty()) {
    return "empty";
  }
  std::string out;
  for (int x = 0; x < dom_size_; ++x) {
    if (!defined(x)) {
      continue;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(x + 1) + "↦" + std::to_string(apply(x) + 1);
  }
  return out;
}

PartialFunction compose(PartialFunction const& f, PartialFunction const& g) {
  if (f.cod_size() != g.dom_size()) {
    fail("invalid-input", "composition size mismatch: cod " + std::to_string(f.cod_size()) +
                              " vs dom " + std::to_string(g.dom_size()));
  }
  std::vector<int> t(static_cast<std::size_t>(f.dom_size()), PartialFunction::kUndefined);
  for (int x = 0; x < f.dom_size(); ++x) {
    int y = f.apply(x);
    if (y != PartialFunction::kUndefined) {
      t[static_cast<std::size_t>(x)] = g.apply(y);
    }
  }
  return PartialFunction(f.dom_size(), g.cod_size(), std::move(t));
}

std::vector<std::vector<int>> fibers(PartialFunction const& f) {
  std::map<int, std::vector<int>> by_image;
  for (int x = 0; x < f.dom_size(); ++x) {
    if (f.defined(x)) {
      by_image[f.apply(x)].push_back(x);
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(by_image.size());
  for (auto& [y, block] : by_image) {
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end(),
            [](auto const& a, auto const& b) { return a.front() < b.front(); });
  return out;
}

int degree(PartialFunction const& f) {
  int d = 0;
  for (auto const& block : fibers(f)) {
    d = std::max(d, static_cast<int>(block.size()));
  }
  return d;
}

int ts_degree(std::vector<PartialFunction> const& fs) {
  int d = 0;
  for (auto const& f : fs) {
    d = std::max(d, degree(f));
  }
  return d;
}

PartialFunction restrict_to(PartialFunction const& f, std::vector<int> const& s) {
  std::vector<char> keep(static_cast<std::size_t>(f.dom_size()), 0);
  for (int x : s) {
    if (x < 0 || x >= f.dom_size()) {
      fail("invalid-input", "restriction point " + std::to_string(x) + " out of range");
    }
    keep[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<int> t(static_cast<std::size_t>(f.dom_size()), PartialFunction::kUndefined);
  for (int x = 0; x < f.dom_size(); ++x) {
    if (keep[static_cast<std::size_t>(x)]) {
      t[static_cast<std::size_t>(x)] = f.apply(x);
    }
  }
  return PartialFunction(f.dom_size(), f.cod_size(), std::move(t));
}

PartialFunction join(PartialFunction const& f, PartialFunction const& g) {
  if (f.dom_size() != g.dom_size() || f.cod_size() != g.cod_size()) {
    fail("invalid-input", "join needs functions between the same sets");
  }
  std::vector<int> t(static_cast<std::size_t>(f.dom_size()), PartialFunction::kUndefined);
  for (int x = 0; x < f.dom_size(); ++x) {
    bool in_f = f.defined(x);
    bool in_g = g.defined(x);
    if (in_f && in_g) {
      fail("overlap-violation", "domains overlap at point " + std::to_string(x));
    }
    if (in_f) {
      t[static_cast<std::size_t>(x)] = f.apply(x);
    } else if (in_g) {
      t[static_cast<std::size_t>(x)] = g.apply(x);
    }
  }
  return PartialFunction(f.dom_size(), f.cod_size(), std::move(t));
}

SingInjDecomposition sing_inj(PartialFunction const& f) {
  std::vector<int> big;  // union of fibers of size >= 2
  bool exceeded = false;
  for (auto const& block : fibers(f)) {
    if (block.size() >= 2) {
      big.insert(big.end(), block.begin(), block.end());
    }
    if (block.size() >= 3) {
      exceeded = true;
    }
  }
  PartialFunction sing = restrict_to(f, big);
  std::vector<int> rest;
  for (int x : f.domain()) {
    if (!sing.defined(x)) {
      rest.push_back(x);
    }
  }
  PartialFunction inj = restrict_to(f, rest);
  return SingInjDecomposition{std::move(sing), std::move(inj), f, exceeded};
}

SimpleGraph fiber_graph(std::vector<PartialFunction> const& fs, int n) {
  std::vector<std::pair<int, int>> edges;
  for (auto const& f : fs) {
    if (f.dom_size() != n || f.cod_size() != n) {
      fail("invalid-input", "fiber graph needs self-maps on " + std::to_string(n) + " points");
    }
    for (auto const& block : fibers(f)) {
      if (block.size() >= 3) {
        fail("degree-violation",
             "fiber of size " + std::to_string(block.size()) + " exceeds degree 2");
      }
      if (block.size() == 2) {
        edges.emplace_back(block[0], block[1]);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SimpleGraph(n, std::move(edges));
}

}  // namespace deg2
