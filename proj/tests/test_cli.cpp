#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "deg2/cli.hpp"
#include "deg2/graph.hpp"
#include "deg2/io.hpp"

using namespace deg2;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> const& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(std::string const& s) {
  return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("enumerate counts and listings") {
  auto r = run({"enumerate", "--graph", "corpus/k3.json", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "43\n");
  CHECK(r.err.empty());

  r = run({"enumerate", "--graph", "corpus/k22.json", "--mode", "strict", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "33\n");

  r = run({"enumerate", "--graph", "corpus/k2.json", "--out", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["maps"].size() == 9);
  CHECK(j["n"] == 2);
}

TEST_CASE("check reports continuity and a witness") {
  auto r = run({"check", "--graph", "corpus/p3.json", "--map", "1>1,2>1,3>3"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "continuous=true strict=false");
  CHECK(r.out.find("witness: target {") != std::string::npos);

  r = run({"check", "--graph", "corpus/p3.json", "--map", "1>1,2>1,3>3", "--out", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["continuous"] == true);
  CHECK(j["strict"] == false);
  CHECK(j["witness"]["strictness_only"] == true);

  r = run({"check", "--graph", "corpus/p3.json", "--map", "3>1,2>2,1>3"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "continuous=true strict=true");
}

TEST_CASE("closure of the bundled generator file") {
  auto r = run({"closure", "--gens", "corpus/small2_gens.json", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");

  r = run({"closure", "--gens", "corpus/small2_gens.json"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "size=10 points=4 monoid=true degree=2");
}

TEST_CASE("hull sizes and caps") {
  auto r = run({"hull", "--rees", "corpus/rees_gm2.json", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "17\n");

  r = run({"hull", "--rees", "corpus/rees_gm2.json", "--cap", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error (resource-limit)") != std::string::npos);
}

TEST_CASE("rlm and gm actions") {
  auto r = run({"rlm", "--rees", "corpus/rees_gm2.json", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  r = run({"rlm", "--rees", "corpus/rees_gm2.json", "--mode", "gm", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "9\n");
}

TEST_CASE("cover emits fiber graphs, gain graphs and derived covers") {
  auto r = run({"cover", "--rees", "corpus/rees_gm2.json", "--mode", "fiber"});
  CHECK(r.code == 0);
  CHECK(r.out == graph_json(cycle_graph(4)));

  r = run({"cover", "--gain", "corpus/gain_c4_twist.json", "--derive", "--out", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph cover") != std::string::npos);
  CHECK(r.out.find("->") != std::string::npos);

  r = run({"cover", "--rees", "corpus/rees_gm2.json", "--gain", "corpus/gain_c4_twist.json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error (invalid-input)") != std::string::npos);

  r = run({"cover"});
  CHECK(r.code == 2);
}

TEST_CASE("trivcov agrees on the bundled matrices") {
  auto r = run({"trivcov", "--rees", "corpus/rees_cycle4_ones.json", "--out", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["trivial_cover"] == true);

  r = run({"trivcov", "--rees", "corpus/rees_gm2.json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("trivial_cover=false") != std::string::npos);
  CHECK(r.out.find("agree=true") != std::string::npos);
}

TEST_CASE("certify emits decomposition certificates") {
  auto r = run({"certify", "--graph", "corpus/k2.json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["complexity_bound"] == 2);

  r = run({"certify", "--graph", "corpus/c4.json", "--singular-only", "--out", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("valid=true") != std::string::npos);
  CHECK(r.out.find("right_zero=true") != std::string::npos);
  CHECK(r.out.find("bound=1") != std::string::npos);
}

TEST_CASE("the bundled verification suite passes") {
  auto r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("10/10 claims verified") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);

  // Starving the closures makes claims fail loudly rather than silently.
  r = run({"verify-paper", "--cap", "4"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--graph", "corpus/k3.json", "--mode", "sideways"}).code == 2);
  auto r = run({"enumerate", "--graph", "no_such_file.json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error (invalid-input)") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--help"}).out.find("Usage: deg2") != std::string::npos);
}

TEST_CASE("the cap environment variable is a default, not an override") {
  setenv("DEGREE2_CAP", "3", 1);
  auto r = run({"closure", "--gens", "corpus/small2_gens.json", "--out", "count"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error (resource-limit)") != std::string::npos);

  r = run({"closure", "--gens", "corpus/small2_gens.json", "--cap", "64", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");

  setenv("DEGREE2_CAP", "plenty", 1);
  r = run({"closure", "--gens", "corpus/small2_gens.json", "--out", "count"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error (invalid-input)") != std::string::npos);
  unsetenv("DEGREE2_CAP");

  r = run({"closure", "--gens", "corpus/small2_gens.json", "--out", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
}

TEST_CASE("identical invocations give identical output") {
  auto a = run({"certify", "--graph", "corpus/c4.json"});
  auto b = run({"certify", "--graph", "corpus/c4.json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
