#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "deg2/continuity.hpp"
#include "deg2/decomposition.hpp"
#include "deg2/gain.hpp"
#include "deg2/graph.hpp"
#include "deg2/io.hpp"
#include "deg2/pfun.hpp"
#include "deg2/rees.hpp"
#include "deg2/semigroup.hpp"
#include "test_helpers.hpp"

using namespace deg2;
using deg2::testing::error_kind;

namespace {

int const U = PartialFunction::kUndefined;
int const Z = ReesMatrixSemigroup::kZeroEntry;

// A scratch file that cleans up after itself.
struct TempFile {
  std::string path;

  explicit TempFile(std::string const& name) : path("io_test_" + name) {}

  ~TempFile() {
    std::remove(path.c_str());
  }
};

}  // namespace

TEST_CASE("graph json round trips byte-identically") {
  CHECK(graph_json(complete_graph(2)) == "{\"edges\":[[0,1]],\"n\":2,\"schema\":1}\n");
  for (auto const& g : {complete_graph(3), path_graph(3), cycle_graph(4),
                        complete_bipartite(2, 2), edgeless_graph(3)}) {
    TempFile f("graph.json");
    save_graph(g, f.path);
    CHECK(load_graph(f.path) == g);
    CHECK(read_file(f.path) == graph_json(g));
  }
}

TEST_CASE("the bundled sample files match the programmatic constructions") {
  CHECK(read_file("corpus/k2.json") == graph_json(complete_graph(2)));
  CHECK(read_file("corpus/k3.json") == graph_json(complete_graph(3)));
  CHECK(read_file("corpus/p3.json") == graph_json(path_graph(3)));
  CHECK(read_file("corpus/c4.json") == graph_json(cycle_graph(4)));
  CHECK(read_file("corpus/k22.json") == graph_json(complete_bipartite(2, 2)));
  CHECK(read_file("corpus/edgeless3.json") == graph_json(edgeless_graph(3)));
  auto gm2 = load_rees("corpus/rees_gm2.json");
  CHECK(gm2.group() == FiniteGroup::cyclic(2));
  CHECK(gm2.entry(1, 1) == 1);
  auto twist = load_gain("corpus/gain_c4_twist.json");
  CHECK(twist.base == Multigraph(cycle_graph(4)));
  CHECK(twist.labels == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("graphs load from plain text edge lists") {
  TempFile f("graph.txt");
  write_file(f.path, "3\n0 1\n1 2\n");
  CHECK(load_graph(f.path) == path_graph(3));
  write_file(f.path, "  \n# comment\n3\n0 1\n");
  CHECK(error_kind([&] { load_graph(f.path); }) == "parse-error");
  write_file(f.path, "3\n0 7\n");
  CHECK(error_kind([&] { load_graph(f.path); }) == "invalid-input");
  write_file(f.path, "not a graph");
  CHECK(error_kind([&] { load_graph(f.path); }) == "parse-error");
  CHECK(error_kind([] { load_graph("no_such_file.json"); }) == "invalid-input");
}

TEST_CASE("rees matrices round trip") {
  auto s = ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0}, {0, 1}});
  TempFile f("rees.json");
  write_file(f.path, rees_json(s));
  auto back = load_rees(f.path);
  CHECK(back.group() == s.group());
  CHECK(back.a_size() == 2);
  CHECK(back.b_size() == 2);
  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < 2; ++a) {
      CHECK(back.entry(b, a) == s.entry(b, a));
    }
  }
  // A zero entry serializes as "0".
  auto with_zero =
      ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, Z}, {Z, 1}});
  write_file(f.path, rees_json(with_zero));
  CHECK(load_rees(f.path).entry(0, 1) == Z);
  CHECK(rees_json(with_zero).find("\"0\"") != std::string::npos);
}

TEST_CASE("group lookup by name") {
  CHECK(group_by_name("1") == FiniteGroup::trivial());
  CHECK(group_by_name("trivial") == FiniteGroup::trivial());
  CHECK(group_by_name("Z2") == FiniteGroup::cyclic(2));
  CHECK(group_by_name("Z6").order() == 6);
  CHECK(group_by_name("S3").order() == 6);
  CHECK(error_kind([] { group_by_name("Q8"); }) == "parse-error");
  CHECK(error_kind([] { group_by_name(""); }) == "parse-error");
}

TEST_CASE("gain graphs round trip and default to identity labels") {
  auto gg = GainGraph(Multigraph(cycle_graph(4)), FiniteGroup::cyclic(2), {0, 0, 0, 1});
  TempFile f("gain.json");
  save_gain(gg, f.path);
  CHECK(load_gain(f.path) == gg);
  CHECK(read_file(f.path) == gain_json(gg));

  write_file(f.path,
             "{\"edges\":[[0,1],[1,2]],\"group\":\"Z2\",\"labels\":{\"1\":\"-1\"},"
             "\"n\":3,\"schema\":1}\n");
  auto partial = load_gain(f.path);
  CHECK(partial.labels == std::vector<int>{0, 1});
  write_file(f.path,
             "{\"edges\":[[0,1]],\"group\":\"Z2\",\"labels\":{\"5\":\"-1\"},"
             "\"n\":2,\"schema\":1}\n");
  CHECK(error_kind([&] { load_gain(f.path); }) == "parse-error");
}

TEST_CASE("partial functions and generator files round trip") {
  PartialFunction f(3, 4, {2, U, 0});
  TempFile t("pfun.json");
  write_file(t.path, pfun_json(f));
  CHECK(load_pfun(t.path) == f);
  CHECK(pfun_json(f).find("null") != std::string::npos);

  std::vector<PartialFunction> gens = {PartialFunction(3, 3, {1, 1, U}),
                                       PartialFunction::identity(3)};
  write_file(t.path, gens_json(gens, 3));
  CHECK(load_gens(t.path) == gens);
  write_file(t.path, "{\"maps\":[[0,1],[0]],\"n\":2,\"schema\":1}\n");
  CHECK(error_kind([&] { load_gens(t.path); }) == "invalid-input");
}

TEST_CASE("one-based map specs") {
  CHECK(parse_map("1>3,2>3", 3, 3) == PartialFunction(3, 3, {2, 2, U}));
  CHECK(parse_map("", 3, 3) == PartialFunction::empty(3, 3));
  CHECK(parse_map(" 1 > 2 , 3 > 1 ", 3, 3) == PartialFunction(3, 3, {1, U, 0}));
  CHECK(error_kind([] { parse_map("0>1", 3, 3); }) == "parse-error");
  CHECK(error_kind([] { parse_map("1>4", 3, 3); }) == "parse-error");
  CHECK(error_kind([] { parse_map("1>2,1>3", 3, 3); }) == "parse-error");
  CHECK(error_kind([] { parse_map("nope", 3, 3); }) == "parse-error");
}

TEST_CASE("report emitters produce well-formed canonical json") {
  auto ts = TransformationSemigroup::closure(symmetric_inverse_monoid(2), 2);
  auto rep = nlohmann::json::parse(semigroup_report_json(ts));
  CHECK(rep["schema"] == 1);
  CHECK(rep["size"] == 7);
  CHECK(rep["points"] == 2);
  CHECK(rep["aperiodic"] == false);
  CHECK(rep["delta"] == 3);
  CHECK(rep["green"]["num_j"] == 3);
  CHECK(rep["elements"].size() == 7);

  auto gm2 = ReesMatrixSemigroup(FiniteGroup::cyclic(2), 2, 2, {{0, 0}, {0, 1}});
  auto tv = nlohmann::json::parse(trivcov_json(trivcov_report(gm2)));
  CHECK(tv["agree"] == true);
  CHECK(tv["trivial_cover"] == false);
  CHECK(tv["zero_one_normalizable"] == false);
  CHECK(tv["idempotents_aperiodic"] == false);

  auto cert = nlohmann::json::parse(certificate_json(degree2_certificate(complete_graph(2))));
  CHECK(cert["valid"] == true);
  CHECK(cert["complexity_bound"] == 2);
  CHECK(cert["schema"] == 1);
  // Embedded tables allow external re-verification.
  CHECK(cert.contains("rel"));
  CHECK(cert.contains("cover_map"));
  CHECK(cert["derived"]["all_injective"] == true);
  CHECK(cert["source"]["elements"].size() == cert["cover_map"].size());

  // Canonical output is stable across calls.
  CHECK(semigroup_report_json(ts) == semigroup_report_json(ts));
  CHECK(graph_dot(cycle_graph(4)).find("--") != std::string::npos);
  CHECK(gain_dot(load_gain("corpus/gain_c4_twist.json")).find("->") != std::string::npos);
}
