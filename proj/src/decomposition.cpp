#include "deg2/decomposition.hpp"

#include <algorithm>
#include <map>

#include "deg2/continuity.hpp"
#include "deg2/error.hpp"

namespace deg2 {

RmReport validate_rm(RelationalMorphismTS const& rm) {
  RmReport report;
  for (int q = 0; q < rm.source.points(); ++q) {
    if (rm.rel.at(static_cast<std::size_t>(q)).empty()) {
      report.witness = RmWitness{q, 0, -1};
      return report;
    }
  }
  for (std::size_t is = 0; is < rm.source.size(); ++is) {
    auto const& s = rm.source.elements()[is];
    auto const& t = rm.target.elements().at(rm.cover_map.at(is));
    for (int q = 0; q < rm.source.points(); ++q) {
      int qs = s.apply(q);
      if (qs == PartialFunction::kUndefined) {
        continue;
      }
      auto const& image_row = rm.rel.at(static_cast<std::size_t>(qs));
      for (int p : rm.rel.at(static_cast<std::size_t>(q))) {
        int pt = t.apply(p);
        if (pt == PartialFunction::kUndefined ||
            !std::binary_search(image_row.begin(), image_row.end(), pt)) {
          report.witness = RmWitness{q, is, p};
          return report;
        }
      }
    }
  }
  report.valid = true;
  return report;
}

std::vector<std::size_t> valid_covers(RelationalMorphismTS const& rm, std::size_t s) {
  auto const& f = rm.source.elements().at(s);
  std::vector<std::size_t> out;
  for (std::size_t it = 0; it < rm.target.size(); ++it) {
    auto const& t = rm.target.elements()[it];
    bool ok = true;
    for (int q = 0; q < rm.source.points() && ok; ++q) {
      int qs = f.apply(q);
      if (qs == PartialFunction::kUndefined) {
        continue;
      }
      auto const& image_row = rm.rel.at(static_cast<std::size_t>(qs));
      for (int p : rm.rel.at(static_cast<std::size_t>(q))) {
        int pt = t.apply(p);
        if (pt == PartialFunction::kUndefined ||
            !std::binary_search(image_row.begin(), image_row.end(), pt)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      out.push_back(it);
    }
  }
  return out;
}

RelationalMorphismTS identity_rm(TransformationSemigroup const& ts) {
  RelationalMorphismTS rm{ts, ts, {}, {}};
  rm.rel.resize(static_cast<std::size_t>(ts.points()));
  for (int q = 0; q < ts.points(); ++q) {
    rm.rel[static_cast<std::size_t>(q)] = {q};
  }
  rm.cover_map.resize(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    rm.cover_map[i] = i;
  }
  return rm;
}

DerivedTS derived_ts(RelationalMorphismTS const& rm, std::size_t cap) {
  DerivedTS out;
  std::map<std::pair<int, int>, int> state_index;
  for (int q = 0; q < rm.source.points(); ++q) {
    for (int p : rm.rel.at(static_cast<std::size_t>(q))) {
      state_index.emplace(std::pair{q, p}, static_cast<int>(out.states.size()));
      out.states.push_back({q, p});
      if (out.states.size() > cap) {
        fail("resource-limit", "derived state set exceeded cap");
      }
    }
  }

  int num_states = static_cast<int>(out.states.size());
  std::vector<PartialFunction> gens;
  for (int p = 0; p < rm.target.points(); ++p) {
    for (std::size_t is = 0; is < rm.source.size(); ++is) {
      auto const& t = rm.target.elements()[rm.cover_map.at(is)];
      int pt = t.apply(p);
      if (pt == PartialFunction::kUndefined) {
        continue;
      }
      auto const& s = rm.source.elements()[is];
      std::vector<int> table(static_cast<std::size_t>(num_states),
                             PartialFunction::kUndefined);
      for (int st = 0; st < num_states; ++st) {
        auto const& [q, p2] = out.states[static_cast<std::size_t>(st)];
        if (p2 != p) {
          continue;
        }
        int qs = s.apply(q);
        if (qs == PartialFunction::kUndefined) {
          continue;
        }
        auto it = state_index.find({qs, pt});
        if (it == state_index.end()) {
          fail("anticlique-violation",
               "derived transition leaves the graph of the relation");
        }
        table[static_cast<std::size_t>(st)] = it->second;
      }
      PartialFunction action(num_states, num_states, std::move(table));
      out.letters.push_back(DerivedLetter{p, is});
      if (!action.is_empty()) {
        gens.push_back(action);
      }
      out.letter_actions.push_back(std::move(action));
    }
  }
  out.ts = TransformationSemigroup::closure(gens, num_states, cap);
  return out;
}

namespace {

std::uint32_t vertex_mask(std::vector<int> const& vs) {
  std::uint32_t m = 0;
  for (int v : vs) {
    m |= std::uint32_t{1} << v;
  }
  return m;
}

SemidirectElement pair_of_map(PartialFunction const& f) {
  SingInjDecomposition d = sing_inj(f);
  return SemidirectElement{d.inj, vertex_mask(d.sing.image())};
}

// The total action of (s, Y) on the anticlique list; anticlique-violation if
// an image escapes the list.
PartialFunction pair_action(std::vector<std::vector<int>> const& anticliques,
                            std::map<std::uint32_t, int> const& index,
                            SemidirectElement const& pair) {
  int np = static_cast<int>(anticliques.size());
  std::vector<int> table(static_cast<std::size_t>(np), PartialFunction::kUndefined);
  for (int i = 0; i < np; ++i) {
    std::uint32_t image = pair.subset;
    for (int v : anticliques[static_cast<std::size_t>(i)]) {
      int vs = pair.bijection.apply(v);
      if (vs != PartialFunction::kUndefined) {
        image |= std::uint32_t{1} << vs;
      }
    }
    auto it = index.find(image);
    if (it == index.end()) {
      fail("anticlique-violation", "a pair action maps an anti-clique outside the anti-cliques");
    }
    table[static_cast<std::size_t>(i)] = it->second;
  }
  return PartialFunction(np, np, std::move(table));
}

}  // namespace

AnticliqueTarget anticlique_target(SimpleGraph const& g,
                                   std::vector<PartialFunction> const& maps, std::size_t cap) {
  AnticliqueTarget out;
  out.anticliques = all_anticliques(g);
  std::map<std::uint32_t, int> index;
  for (std::size_t i = 0; i < out.anticliques.size(); ++i) {
    index.emplace(vertex_mask(out.anticliques[i]), static_cast<int>(i));
  }
  std::vector<PartialFunction> gens;
  for (auto const& f : maps) {
    SemidirectElement pair = pair_of_map(f);
    gens.push_back(pair_action(out.anticliques, index, pair));
    out.pair_gens.push_back(std::move(pair));
  }
  out.ts = TransformationSemigroup::closure(gens, static_cast<int>(out.anticliques.size()), cap);
  return out;
}

AnticliqueTarget anticlique_target(SimpleGraph const& g, std::size_t cap) {
  return anticlique_target(g, enumerate_continuous(g), cap);
}

RelationalMorphismTS anticlique_rm(SimpleGraph const& g,
                                   std::vector<PartialFunction> const& maps, std::size_t cap) {
  RelationalMorphismTS rm;
  rm.source = TransformationSemigroup::closure(maps, g.vertex_count(), cap);

  AnticliqueTarget target = anticlique_target(g, rm.source.elements(), cap);
  std::map<std::uint32_t, int> index;
  for (std::size_t i = 0; i < target.anticliques.size(); ++i) {
    index.emplace(vertex_mask(target.anticliques[i]), static_cast<int>(i));
  }

  rm.rel.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < target.anticliques.size(); ++i) {
      auto const& a = target.anticliques[i];
      if (std::binary_search(a.begin(), a.end(), v)) {
        rm.rel[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
      }
    }
  }

  for (auto const& f : rm.source.elements()) {
    PartialFunction action = pair_action(target.anticliques, index, pair_of_map(f));
    std::size_t t = target.ts.index_of(action);
    if (t == TransformationSemigroup::npos) {
      fail("anticlique-violation", "a cover action is missing from the target closure");
    }
    rm.cover_map.push_back(t);
  }
  rm.target = std::move(target.ts);
  return rm;
}

bool is_right_zero(TransformationSemigroup const& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (ts.product(i, j) != j) {
        return false;
      }
    }
  }
  return true;
}

Certificate degree2_certificate(SimpleGraph const& g, bool singular_only, std::size_t cap) {
  Certificate cert;
  cert.graph = g;
  cert.singular_only = singular_only;

  std::vector<PartialFunction> maps = enumerate_continuous(g);
  if (singular_only) {
    std::erase_if(maps, [](PartialFunction const& f) { return !sing_inj(f).inj.is_empty(); });
  }

  cert.rm = anticlique_rm(g, maps, cap);
  cert.anticliques = all_anticliques(g);

  RmReport report = validate_rm(cert.rm);
  cert.rm_valid = report.valid;
  cert.witness = report.witness;

  cert.derived = derived_ts(cert.rm, cap);
  cert.all_derived_injective =
      std::all_of(cert.derived.ts.elements().begin(), cert.derived.ts.elements().end(),
                  [](PartialFunction const& f) { return f.is_injective(); });

  if (singular_only) {
    cert.target_right_zero = is_right_zero(cert.rm.target);
  }
  if (cert.valid()) {
    cert.complexity_bound = singular_only ? 1 : 2;
  }
  return cert;
}

}  // namespace deg2
