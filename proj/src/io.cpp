#include "deg2/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "deg2/error.hpp"

namespace deg2 {

using nlohmann::json;

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail("invalid-input", "cannot read file: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail("invalid-input", "cannot write file: " + path);
  }
  out << content;
}

namespace {

json parse_json(std::string const& text) {
  try {
    return json::parse(text);
  } catch (json::exception const& e) {
    fail("parse-error", e.what());
  }
}

int int_field(json const& j, std::string const& key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    fail("parse-error", "missing or non-integer field \"" + key + "\"");
  }
  return j[key].get<int>();
}

std::vector<std::pair<int, int>> edge_pairs(json const& j) {
  if (!j.is_array()) {
    fail("parse-error", "\"edges\" must be an array of pairs");
  }
  std::vector<std::pair<int, int>> out;
  for (auto const& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      fail("parse-error", "each edge must be a pair of integers");
    }
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

json table_json(PartialFunction const& f) {
  json t = json::array();
  for (int q = 0; q < f.dom_size(); ++q) {
    int v = f.apply(q);
    if (v == PartialFunction::kUndefined) {
      t.push_back(nullptr);
    } else {
      t.push_back(v);
    }
  }
  return t;
}

std::vector<int> table_from_json(json const& j, std::string const& what) {
  if (!j.is_array()) {
    fail("parse-error", what + " must be an array");
  }
  std::vector<int> t;
  for (auto const& v : j) {
    if (v.is_null()) {
      t.push_back(PartialFunction::kUndefined);
    } else if (v.is_number_integer()) {
      t.push_back(v.get<int>());
    } else {
      fail("parse-error", what + " entries must be integers or null");
    }
  }
  return t;
}

}  // namespace

SimpleGraph load_graph(std::string const& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    fail("parse-error", "empty graph file: " + path);
  }
  if (text[first] == '{') {
    json j = parse_json(text);
    return SimpleGraph(int_field(j, "n"), edge_pairs(j.value("edges", json::array())));
  }
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) {
    fail("parse-error", "edge list must start with the vertex count");
  }
  std::vector<std::pair<int, int>> edges;
  int u = 0;
  int v = 0;
  while (in >> u) {
    if (!(in >> v)) {
      fail("parse-error", "dangling endpoint in edge list");
    }
    edges.push_back({u, v});
  }
  if (!in.eof()) {
    fail("parse-error", "unrecognized token in edge list");
  }
  return SimpleGraph(n, std::move(edges));
}

std::string graph_json(SimpleGraph const& g) {
  json j;
  j["schema"] = 1;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (auto const& [u, v] : g.edges()) {
    edges.push_back(json::array({u, v}));
  }
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

std::string graph_dot(SimpleGraph const& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (auto const& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

void save_graph(SimpleGraph const& g, std::string const& path) {
  write_file(path, graph_json(g));
}

FiniteGroup group_by_name(std::string const& name) {
  if (name == "1" || name == "trivial") {
    return FiniteGroup::trivial();
  }
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'S')) {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
        fail("parse-error", "unknown group name: " + name);
      }
      n = n * 10 + (name[i] - '0');
    }
    return name[0] == 'Z' ? FiniteGroup::cyclic(n) : FiniteGroup::symmetric(n);
  }
  fail("parse-error", "unknown group name: " + name);
}

namespace {

std::string group_name(FiniteGroup const& g) {
  if (g.order() == 1) {
    return "1";
  }
  for (int n = 2; n <= 12; ++n) {
    if (g == FiniteGroup::cyclic(n)) {
      return "Z" + std::to_string(n);
    }
  }
  for (int n = 2; n <= 6; ++n) {
    if (FiniteGroup::symmetric(n).order() == g.order() && g == FiniteGroup::symmetric(n)) {
      return "S" + std::to_string(n);
    }
  }
  fail("invalid-input", "group has no file-format name");
}

}  // namespace

ReesMatrixSemigroup load_rees(std::string const& path) {
  json j = parse_json(read_file(path));
  if (!j.contains("group") || !j["group"].is_string()) {
    fail("parse-error", "missing \"group\" name");
  }
  FiniteGroup group = group_by_name(j["group"].get<std::string>());
  int a_size = int_field(j, "A");
  int b_size = int_field(j, "B");
  if (!j.contains("C") || !j["C"].is_array()) {
    fail("parse-error", "missing matrix \"C\"");
  }
  std::vector<std::vector<int>> c;
  for (auto const& row : j["C"]) {
    if (!row.is_array()) {
      fail("parse-error", "matrix rows must be arrays");
    }
    std::vector<int> r;
    for (auto const& entry : row) {
      if (!entry.is_string()) {
        fail("parse-error", "matrix entries must be strings");
      }
      std::string name = entry.get<std::string>();
      if (name == "0") {
        r.push_back(ReesMatrixSemigroup::kZeroEntry);
      } else {
        int e = group.element(name);
        if (e < 0) {
          fail("parse-error", "unknown group element: " + name);
        }
        r.push_back(e);
      }
    }
    c.push_back(std::move(r));
  }
  return ReesMatrixSemigroup(std::move(group), a_size, b_size, std::move(c));
}

std::string rees_json(ReesMatrixSemigroup const& s) {
  json j;
  j["schema"] = 1;
  j["group"] = group_name(s.group());
  j["A"] = s.a_size();
  j["B"] = s.b_size();
  json c = json::array();
  for (int b = 0; b < s.b_size(); ++b) {
    json row = json::array();
    for (int a = 0; a < s.a_size(); ++a) {
      int e = s.entry(b, a);
      row.push_back(e == ReesMatrixSemigroup::kZeroEntry ? std::string("0")
                                                         : s.group().name(e));
    }
    c.push_back(std::move(row));
  }
  j["C"] = std::move(c);
  return j.dump() + "\n";
}

GainGraph load_gain(std::string const& path) {
  json j = parse_json(read_file(path));
  if (!j.contains("group") || !j["group"].is_string()) {
    fail("parse-error", "missing \"group\" name");
  }
  FiniteGroup group = group_by_name(j["group"].get<std::string>());
  int n = int_field(j, "n");
  std::vector<MultiEdge> edges;
  for (auto const& [t, h] : edge_pairs(j.value("edges", json::array()))) {
    edges.push_back(MultiEdge{t, h});
  }
  Multigraph base(n, std::move(edges));
  std::vector<int> labels(static_cast<std::size_t>(base.edge_count()), group.identity());
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) {
      fail("parse-error", "\"labels\" must map edge ids to element names");
    }
    for (auto const& [key, value] : j["labels"].items()) {
      int e = 0;
      try {
        e = std::stoi(key);
      } catch (std::exception const&) {
        fail("parse-error", "label key is not an edge id: " + key);
      }
      if (e < 0 || e >= base.edge_count()) {
        fail("parse-error", "label for nonexistent edge " + key);
      }
      if (!value.is_string()) {
        fail("parse-error", "label values must be element names");
      }
      int g = group.element(value.get<std::string>());
      if (g < 0) {
        fail("parse-error", "unknown group element: " + value.get<std::string>());
      }
      labels[static_cast<std::size_t>(e)] = g;
    }
  }
  return GainGraph(std::move(base), std::move(group), std::move(labels));
}

std::string gain_json(GainGraph const& g) {
  json j;
  j["schema"] = 1;
  j["group"] = group_name(g.group);
  j["n"] = g.base.vertex_count();
  json edges = json::array();
  for (auto const& e : g.base.edges()) {
    edges.push_back(json::array({e.tail, e.head}));
  }
  j["edges"] = std::move(edges);
  json labels = json::object();
  for (int e = 0; e < g.base.edge_count(); ++e) {
    labels[std::to_string(e)] = g.group.name(g.labels[static_cast<std::size_t>(e)]);
  }
  j["labels"] = std::move(labels);
  return j.dump() + "\n";
}

std::string gain_dot(GainGraph const& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.base.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (int e = 0; e < g.base.edge_count(); ++e) {
    auto const& edge = g.base.edge(e);
    int l = g.labels[static_cast<std::size_t>(e)];
    out << "  " << edge.tail << " -> " << edge.head << " [label=\"" << g.group.name(l) << "\"";
    if (l != g.group.identity()) {
      out << ", color=\"red\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

void save_gain(GainGraph const& g, std::string const& path) {
  write_file(path, gain_json(g));
}

PartialFunction load_pfun(std::string const& path) {
  json j = parse_json(read_file(path));
  return PartialFunction(int_field(j, "dom_size"), int_field(j, "cod_size"),
                         table_from_json(j.value("table", json::array()), "\"table\""));
}

std::string pfun_json(PartialFunction const& f) {
  json j;
  j["schema"] = 1;
  j["dom_size"] = f.dom_size();
  j["cod_size"] = f.cod_size();
  j["table"] = table_json(f);
  return j.dump() + "\n";
}

std::vector<PartialFunction> load_gens(std::string const& path) {
  json j = parse_json(read_file(path));
  int n = int_field(j, "n");
  if (!j.contains("maps") || !j["maps"].is_array()) {
    fail("parse-error", "missing \"maps\" array");
  }
  std::vector<PartialFunction> out;
  for (auto const& m : j["maps"]) {
    out.push_back(PartialFunction(n, n, table_from_json(m, "each map")));
  }
  return out;
}

std::string gens_json(std::vector<PartialFunction> const& maps, int n) {
  json j;
  j["schema"] = 1;
  j["n"] = n;
  json arr = json::array();
  for (auto const& f : maps) {
    arr.push_back(table_json(f));
  }
  j["maps"] = std::move(arr);
  return j.dump() + "\n";
}

PartialFunction parse_map(std::string const& spec, int dom_size, int cod_size) {
  std::vector<int> table(static_cast<std::size_t>(dom_size), PartialFunction::kUndefined);
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::erase_if(part, [](unsigned char c) { return std::isspace(c); });
    if (part.empty()) {
      continue;
    }
    std::size_t sep = part.find('>');
    if (sep == std::string::npos) {
      fail("parse-error", "map entries look like \"1>3\"; got: " + part);
    }
    int u = 0;
    int v = 0;
    try {
      u = std::stoi(part.substr(0, sep));
      v = std::stoi(part.substr(sep + 1));
    } catch (std::exception const&) {
      fail("parse-error", "map entries look like \"1>3\"; got: " + part);
    }
    if (u < 1 || u > dom_size || v < 1 || v > cod_size) {
      fail("parse-error", "map entry out of range (points are 1-based): " + part);
    }
    if (table[static_cast<std::size_t>(u - 1)] != PartialFunction::kUndefined) {
      fail("parse-error", "point mapped twice: " + std::to_string(u));
    }
    table[static_cast<std::size_t>(u - 1)] = v - 1;
  }
  return PartialFunction(dom_size, cod_size, std::move(table));
}

std::string semigroup_report_json(TransformationSemigroup const& ts) {
  json j;
  j["schema"] = 1;
  j["size"] = ts.size();
  j["points"] = ts.points();
  j["is_monoid"] = ts.is_monoid();
  j["degree"] = ts.degree();
  json elements = json::array();
  for (auto const& f : ts.elements()) {
    elements.push_back(table_json(f));
  }
  j["elements"] = std::move(elements);

  GreenData g = green(ts);
  std::vector<int> j_sizes(static_cast<std::size_t>(g.num_j), 0);
  for (int c : g.j_class) {
    ++j_sizes[static_cast<std::size_t>(c)];
  }
  j["green"] = json{{"num_r", g.num_r},
                    {"num_l", g.num_l},
                    {"num_j", g.num_j},
                    {"num_h", g.num_h},
                    {"j_class_sizes", j_sizes}};
  j["delta"] = delta(ts);
  j["aperiodic"] = is_aperiodic(ts);
  return j.dump() + "\n";
}

std::string trivcov_json(TrivcovReport const& report) {
  json j;
  j["schema"] = 1;
  j["trivial_cover"] = report.trivial_cover;
  j["zero_one_normalizable"] = report.zero_one_normalizable;
  j["idempotents_aperiodic"] = report.idempotents_aperiodic;
  j["agree"] = report.agree();
  return j.dump() + "\n";
}

std::string certificate_json(Certificate const& cert) {
  json j;
  j["schema"] = 1;
  j["graph"] = json{{"n", cert.graph.vertex_count()}, {"edges", json::array()}};
  for (auto const& [u, v] : cert.graph.edges()) {
    j["graph"]["edges"].push_back(json::array({u, v}));
  }
  j["singular_only"] = cert.singular_only;
  j["anticliques"] = cert.anticliques;
  j["rel"] = cert.rm.rel;

  json source_elements = json::array();
  for (auto const& f : cert.rm.source.elements()) {
    source_elements.push_back(table_json(f));
  }
  j["source"] = json{{"points", cert.rm.source.points()},
                     {"size", cert.rm.source.size()},
                     {"elements", std::move(source_elements)}};

  json target_elements = json::array();
  for (auto const& f : cert.rm.target.elements()) {
    target_elements.push_back(table_json(f));
  }
  j["target"] = json{{"points", cert.rm.target.points()},
                     {"size", cert.rm.target.size()},
                     {"elements", std::move(target_elements)}};

  j["cover_map"] = cert.rm.cover_map;
  j["rm_valid"] = cert.rm_valid;
  if (!cert.rm_valid) {
    j["witness"] =
        json{{"q", cert.witness.q}, {"s", cert.witness.s}, {"p", cert.witness.p}};
  }

  json derived_elements = json::array();
  for (auto const& f : cert.derived.ts.elements()) {
    derived_elements.push_back(table_json(f));
  }
  json states = json::array();
  for (auto const& [q, p] : cert.derived.states) {
    states.push_back(json::array({q, p}));
  }
  j["derived"] = json{{"states", std::move(states)},
                      {"size", cert.derived.ts.size()},
                      {"all_injective", cert.all_derived_injective},
                      {"elements", std::move(derived_elements)}};

  if (cert.singular_only) {
    j["target_right_zero"] = cert.target_right_zero;
  }
  if (cert.complexity_bound >= 0) {
    j["complexity_bound"] = cert.complexity_bound;
  }
  j["valid"] = cert.valid();
  return j.dump() + "\n";
}

}  // namespace deg2
