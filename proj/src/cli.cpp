#include "deg2/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deg2/claims.hpp"
#include "deg2/continuity.hpp"
#include "deg2/decomposition.hpp"
#include "deg2/error.hpp"
#include "deg2/gain.hpp"
#include "deg2/graph.hpp"
#include "deg2/io.hpp"
#include "deg2/pfun.hpp"
#include "deg2/rees.hpp"
#include "deg2/semigroup.hpp"

namespace deg2 {

namespace {

using nlohmann::json;

std::size_t env_cap() {
  char const* v = std::getenv("DEGREE2_CAP");
  if (v == nullptr) {
    return kDefaultClosureCap;
  }
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (std::exception const&) {
    fail("invalid-input", "DEGREE2_CAP is not a number: " + std::string(v));
  }
}

std::string multigraph_json(Multigraph const& m) {
  json j;
  j["schema"] = 1;
  j["n"] = m.vertex_count();
  auto edges = json::array();
  for (auto const& e : m.edges()) {
    edges.push_back(json::array({e.tail, e.head}));
  }
  j["edges"] = edges;
  return j.dump() + "\n";
}

std::string multigraph_dot(Multigraph const& m) {
  std::string s = "digraph cover {\n";
  for (int v = 0; v < m.vertex_count(); ++v) {
    s += "  " + std::to_string(v) + ";\n";
  }
  for (auto const& e : m.edges()) {
    s += "  " + std::to_string(e.tail) + " -> " + std::to_string(e.head) + ";\n";
  }
  s += "}\n";
  return s;
}

json assign_names(FiniteGroup const& g, std::vector<int> const& assign, int none) {
  auto a = json::array();
  for (int x : assign) {
    if (x == none) {
      a.push_back(nullptr);
    } else {
      a.push_back(g.name(x));
    }
  }
  return a;
}

json pfun_table(PartialFunction const& f) {
  auto a = json::array();
  for (int x : f.table()) {
    if (x == PartialFunction::kUndefined) {
      a.push_back(nullptr);
    } else {
      a.push_back(x);
    }
  }
  return a;
}

std::string assign_pretty(FiniteGroup const& g, std::vector<int> const& assign, int none) {
  std::string s = "[";
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (i > 0) {
      s += " ";
    }
    s += assign[i] == none ? "." : g.name(assign[i]);
  }
  return s + "]";
}

void print_semigroup_table(TransformationSemigroup const& s, std::ostream& out) {
  out << "size=" << s.size() << " points=" << s.points()
      << " monoid=" << (s.is_monoid() ? "true" : "false") << " degree=" << s.degree() << "\n";
  for (auto const& f : s.elements()) {
    out << f.pretty() << "\n";
  }
}

int cmd_enumerate(std::string const& graph_file, std::string const& mode,
                  std::string const& fmt, std::ostream& out) {
  auto g = load_graph(graph_file);
  auto maps = mode == "strict" ? enumerate_strict(g) : enumerate_continuous(g);
  if (fmt == "count") {
    out << maps.size() << "\n";
  } else if (fmt == "json") {
    out << gens_json(maps, g.vertex_count());
  } else {
    for (auto const& f : maps) {
      out << f.pretty() << "\n";
    }
  }
  return 0;
}

int cmd_check(std::string const& graph_file, std::string const& map_spec,
              std::string const& fmt, std::ostream& out) {
  auto g = load_graph(graph_file);
  auto f = parse_map(map_spec, g.vertex_count(), g.vertex_count());
  auto rep = check_continuity(f, g, g);
  if (fmt == "json") {
    json j;
    j["schema"] = 1;
    j["continuous"] = rep.continuous;
    j["strict"] = rep.strict;
    if (rep.witness.has_value()) {
      json w;
      w["simplex"] = rep.witness->simplex;
      w["preimage"] = rep.witness->preimage;
      w["strictness_only"] = rep.witness->strictness_only;
      j["witness"] = w;
    }
    out << j.dump() << "\n";
  } else {
    out << "continuous=" << (rep.continuous ? "true" : "false")
        << " strict=" << (rep.strict ? "true" : "false") << "\n";
    if (rep.witness.has_value()) {
      out << "witness: target {";
      for (std::size_t i = 0; i < rep.witness->simplex.size(); ++i) {
        out << (i > 0 ? " " : "") << rep.witness->simplex[i] + 1;
      }
      out << "} pulls back to {";
      for (std::size_t i = 0; i < rep.witness->preimage.size(); ++i) {
        out << (i > 0 ? " " : "") << rep.witness->preimage[i] + 1;
      }
      out << "}" << (rep.witness->strictness_only ? " (strictness only)" : "") << "\n";
    }
  }
  return 0;
}

int cmd_closure(std::string const& gens_file, std::size_t cap, std::string const& fmt,
                std::ostream& out) {
  auto gens = load_gens(gens_file);
  if (gens.empty()) {
    fail("invalid-input", "generator file holds no maps");
  }
  auto s = TransformationSemigroup::closure(gens, gens.front().dom_size(), cap);
  if (fmt == "count") {
    out << s.size() << "\n";
  } else if (fmt == "json") {
    out << semigroup_report_json(s);
  } else {
    print_semigroup_table(s, out);
  }
  return 0;
}

int cmd_hull(std::string const& rees_file, std::size_t cap, std::string const& fmt,
             std::ostream& out) {
  auto s = load_rees(rees_file);
  auto hull = translational_hull(s, cap);
  if (fmt == "count") {
    out << hull.size() << "\n";
    return 0;
  }
  if (fmt == "json") {
    json j;
    j["schema"] = 1;
    j["size"] = hull.size();
    auto pairs = json::array();
    for (auto const& p : hull) {
      json row;
      row["map"] = pfun_table(p.row.fun);
      row["assign"] = assign_names(s.group(), p.row.assign, WreathElement::kNoGroupElement);
      json col;
      col["map"] = pfun_table(p.col.fstar);
      col["assign"] = assign_names(s.group(), p.col.assign, WreathElement::kNoGroupElement);
      pairs.push_back(json{{"row", row}, {"col", col}});
    }
    j["pairs"] = pairs;
    out << j.dump() << "\n";
    return 0;
  }
  out << "size=" << hull.size() << "\n";
  for (auto const& p : hull) {
    out << "row " << p.row.fun.pretty() << " "
        << assign_pretty(s.group(), p.row.assign, WreathElement::kNoGroupElement) << "  col "
        << p.col.fstar.pretty() << " "
        << assign_pretty(s.group(), p.col.assign, WreathElement::kNoGroupElement) << "\n";
  }
  return 0;
}

int cmd_rlm(std::string const& rees_file, std::string const& mode, std::string const& fmt,
            std::ostream& out) {
  auto s = load_rees(rees_file);
  auto ts = mode == "gm" ? gm_action(s) : rlm(s);
  if (fmt == "count") {
    out << ts.size() << "\n";
  } else if (fmt == "json") {
    out << semigroup_report_json(ts);
  } else {
    print_semigroup_table(ts, out);
  }
  return 0;
}

int cmd_cover(std::string const& rees_file, std::string const& gain_file,
              std::string const& mode, bool derive, std::string const& fmt,
              std::ostream& out) {
  if (rees_file.empty() == gain_file.empty()) {
    fail("invalid-input", "cover needs exactly one of --rees or --gain");
  }
  if (!rees_file.empty() && mode == "fiber") {
    auto g = gm_fiber_graph(load_rees(rees_file));
    out << (fmt == "dot" ? graph_dot(g) : graph_json(g));
    return 0;
  }
  GainGraph gg = !gain_file.empty()
                     ? load_gain(gain_file)
                     : (mode == "gh" ? graham_houghton(load_rees(rees_file))
                                     : rlm_cover_gain(load_rees(rees_file)));
  if (derive) {
    auto d = derived_graph(gg);
    out << (fmt == "dot" ? multigraph_dot(d.graph) : multigraph_json(d.graph));
  } else {
    out << (fmt == "dot" ? gain_dot(gg) : gain_json(gg));
  }
  return 0;
}

int cmd_trivcov(std::string const& rees_file, std::string const& fmt, std::ostream& out) {
  auto rep = trivcov_report(load_rees(rees_file));
  if (fmt == "json") {
    out << trivcov_json(rep);
  } else {
    out << "trivial_cover=" << (rep.trivial_cover ? "true" : "false") << "\n"
        << "zero_one_normalizable=" << (rep.zero_one_normalizable ? "true" : "false") << "\n"
        << "idempotents_aperiodic=" << (rep.idempotents_aperiodic ? "true" : "false") << "\n"
        << "agree=" << (rep.agree() ? "true" : "false") << "\n";
  }
  return rep.agree() ? 0 : 1;
}

int cmd_certify(std::string const& graph_file, bool singular_only, std::size_t cap,
                std::string const& fmt, std::ostream& out) {
  auto g = load_graph(graph_file);
  auto cert = degree2_certificate(g, singular_only, cap);
  if (fmt == "table") {
    out << "valid=" << (cert.valid() ? "true" : "false")
        << " anticliques=" << cert.anticliques.size() << " source=" << cert.rm.source.size()
        << " target=" << cert.rm.target.size() << " derived=" << cert.derived.ts.size()
        << " injective=" << (cert.all_derived_injective ? "true" : "false");
    if (cert.singular_only) {
      out << " right_zero=" << (cert.target_right_zero ? "true" : "false");
    }
    if (cert.complexity_bound >= 0) {
      out << " bound=" << cert.complexity_bound;
    }
    out << "\n";
  } else {
    out << certificate_json(cert);
  }
  return cert.valid() ? 0 : 1;
}

int cmd_verify(std::uint64_t seed, std::size_t cap, std::ostream& out) {
  int passed = 0;
  auto const& claims = reference_claims();
  for (auto const& c : claims) {
    ClaimResult r;
    try {
      r = c.run(seed, cap);
    } catch (Error const& e) {
      r = {false, "error (" + std::string(e.kind()) + "): " + e.what()};
    }
    out << (r.pass ? "[ok]   " : "[FAIL] ") << c.id << ": " << r.detail << "\n";
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << claims.size() << " claims verified\n";
  return passed == static_cast<int>(claims.size()) ? 0 : 1;
}

}  // namespace

int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"degree-2 transformation semigroups of continuous maps on graphs"};
  app.name("deg2");
  app.require_subcommand(1);

  std::string graph_file;
  std::string rees_file;
  std::string gain_file;
  std::string gens_file;
  std::string map_spec;
  std::string mode;
  std::string fmt;
  std::size_t cap = kDefaultClosureCap;
  std::uint64_t seed = kDefaultClaimSeed;
  bool singular_only = false;
  bool derive = false;

  auto* enumerate =
      app.add_subcommand("enumerate", "List the continuous or strict self-maps of a graph");
  enumerate->add_option("--graph", graph_file, "graph file (JSON or edge list)")->required();
  enumerate->add_option("--mode", mode, "continuous (default) or strict")
      ->check(CLI::IsMember({"continuous", "strict"}));
  enumerate->add_option("--out", fmt, "table (default), count or json")
      ->check(CLI::IsMember({"table", "count", "json"}));

  auto* check = app.add_subcommand("check", "Check one map for continuity and strictness");
  check->add_option("--graph", graph_file, "graph file")->required();
  check->add_option("--map", map_spec, "map as 1-based pairs, e.g. \"1>3,2>3\"")->required();
  check->add_option("--out", fmt, "table (default) or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* closure =
      app.add_subcommand("closure", "Close a set of generator maps under composition");
  closure->add_option("--gens", gens_file, "JSON file of generator maps")->required();
  closure->add_option("--cap", cap, "element cap");
  closure->add_option("--out", fmt, "table (default), count or json")
      ->check(CLI::IsMember({"table", "count", "json"}));

  auto* hull = app.add_subcommand("hull", "Translational hull of a Rees matrix semigroup");
  hull->add_option("--rees", rees_file, "Rees matrix file")->required();
  hull->add_option("--cap", cap, "linked-pair search cap");
  hull->add_option("--out", fmt, "table (default), count or json")
      ->check(CLI::IsMember({"table", "count", "json"}));

  auto* rlm_cmd =
      app.add_subcommand("rlm", "Right-letter or group-mapping action of a Rees semigroup");
  rlm_cmd->add_option("--rees", rees_file, "Rees matrix file")->required();
  rlm_cmd->add_option("--mode", mode, "rlm (default) or gm")
      ->check(CLI::IsMember({"rlm", "gm"}));
  rlm_cmd->add_option("--out", fmt, "table (default), count or json")
      ->check(CLI::IsMember({"table", "count", "json"}));

  auto* cover = app.add_subcommand("cover", "Gain-graph covers and fiber graphs");
  cover->add_option("--rees", rees_file, "Rees matrix file");
  cover->add_option("--gain", gain_file, "gain graph file");
  cover->add_option("--mode", mode, "with --rees: gain (default), gh or fiber")
      ->check(CLI::IsMember({"gain", "gh", "fiber"}));
  cover->add_flag("--derive", derive, "emit the derived cover of the gain graph");
  cover->add_option("--out", fmt, "json (default) or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* trivcov =
      app.add_subcommand("trivcov", "Evaluate the three trivial-cover conditions");
  trivcov->add_option("--rees", rees_file, "Rees matrix file")->required();
  trivcov->add_option("--out", fmt, "table (default) or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* certify = app.add_subcommand("certify", "Emit a degree-2 decomposition certificate");
  certify->add_option("--graph", graph_file, "graph file")->required();
  certify->add_flag("--singular-only", singular_only, "restrict to singular generators");
  certify->add_option("--cap", cap, "closure cap");
  certify->add_option("--out", fmt, "json (default) or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* verify = app.add_subcommand(
      "verify-paper", "Re-run the bundled verification suite of reference results");
  verify->add_option("--seed", seed, "seed for the randomized sweeps");
  verify->add_option("--cap", cap, "closure cap");

  try {
    cap = env_cap();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (Error const& e) {
    err << "error (" << e.kind() << "): " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(graph_file, mode, fmt, out);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(graph_file, map_spec, fmt, out);
    }
    if (app.got_subcommand(closure)) {
      return cmd_closure(gens_file, cap, fmt, out);
    }
    if (app.got_subcommand(hull)) {
      return cmd_hull(rees_file, cap, fmt, out);
    }
    if (app.got_subcommand(rlm_cmd)) {
      return cmd_rlm(rees_file, mode, fmt, out);
    }
    if (app.got_subcommand(cover)) {
      return cmd_cover(rees_file, gain_file, mode, derive, fmt, out);
    }
    if (app.got_subcommand(trivcov)) {
      return cmd_trivcov(rees_file, fmt, out);
    }
    if (app.got_subcommand(certify)) {
      return cmd_certify(graph_file, singular_only, cap, fmt, out);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(seed, cap, out);
    }
    err << "usage error: no subcommand\n";
    return 2;
  } catch (Error const& e) {
    err << "error (" << e.kind() << "): " << e.what() << "\n";
    return 2;
  }
}

}  // namespace deg2
