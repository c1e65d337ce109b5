#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wildcat/cli.hpp"
#include "wildcat/graph_algorithms.hpp"
#include "wildcat/report.hpp"
#include "wildcat/space_file.hpp"

using namespace wildcat;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (fs::path(WILDCAT_FIXTURES) / name).string(); }

std::string temp_file(const std::string& name, const std::string& text = "") {
  const fs::path p = fs::temp_directory_path() / ("wildcat_cli_" + name);
  if (!text.empty()) std::ofstream(p) << text;
  return p.string();
}

void check_report_keys(const json& doc) {
  for (const auto& [key, value] : doc.items()) CHECK_MESSAGE(is_report_key(key), key);
  for (const char* key : {"wrk", "cat", "tc", "stable", "scc_class", "tower"}) CHECK(doc.contains(key));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("info golden values") {
  const Run ear = run({"info", fixture("earring.space")});
  REQUIRE(ear.status == 0);
  const json e = ear.doc();
  check_report_keys(e);
  CHECK(e["wrk"] == 2);
  CHECK(e["cat"] == 1);
  CHECK(e["tc"] == 2);
  CHECK(e["stable"] == true);
  CHECK(e["scc_class"] == "none");
  CHECK(e["tower"].size() == 2);

  const json w = run({"info", fixture("wild_circle.space")}).doc();
  CHECK(w["wrk"] == 2);
  CHECK(w["cat"] == 2);
  CHECK(w["tc"] == 3);

  const json n = run({"info", fixture("nested.space")}).doc();
  CHECK(n["wrk"] == 3);
  CHECK(n["cat"] == 2);
  CHECK(n["tc"] == 4);

  const json s = run({"info", fixture("selfwild.space")}).doc();
  CHECK(s["wrk"] == "inf");
  CHECK(s["cat"] == "inf");
  CHECK(s["tc"] == "inf");

  const json z = run({"info", fixture("zerodimwild.space")}).doc();
  CHECK(z["wrk"] == 2);
  CHECK(z["cat"] == 1);
  CHECK(z["tc"] == 2);
  CHECK(z["stable"] == false);
}

TEST_CASE("exit statuses") {
  const Run unstable = run({"info", fixture("unstable.space")});
  CHECK(unstable.status == kExitUnstable);
  CHECK(unstable.out.empty());
  CHECK(unstable.err.find("seqfam 0") != std::string::npos);

  const Run parse = run({"info", temp_file("bad.space", "graph G\nvertex a\nedge e a nowhere\nend\nmain G\n")});
  CHECK(parse.status == kExitParse);
  CHECK(parse.err.find("line 3") != std::string::npos);

  CHECK(run({"certify", fixture("selfwild.space")}).status == kExitInfiniteRank);
  CHECK(run({"truncate", fixture("selfwild.space"), "--depth", "2"}).status == kExitFailure);
  CHECK(run({"info", fixture("missing.space")}).status == kExitFailure);
  CHECK(run({"plan", fixture("earring.space")}).status == kExitFailure);
  CHECK(run({"frobnicate"}).status == kExitFailure);
  CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("certify") {
  const json ear = run({"certify", fixture("earring.space")}).doc();
  check_report_keys(ear);
  CHECK(ear["certificates"]["tc"]["length"] == 2);
  CHECK(ear["certificates"]["tc"]["levels"].size() == 3);
  CHECK(ear["certificates"]["cat"]["length"] == ear["cat"]);

  const json eight = run({"certify", fixture("figure_eight.space")}).doc();
  const auto& levels = eight["certificates"]["tc"]["levels"];
  REQUIRE(levels.size() == 3);
  CHECK(levels[0]["description"].get<std::string>().find("K^0 = T x T") != std::string::npos);
  CHECK(levels[1]["description"].get<std::string>().find("K^1") != std::string::npos);
  CHECK(levels[2]["description"].get<std::string>().find("K^2") != std::string::npos);

  const json comb = run({"certify", fixture("dendrite.space")}).doc();
  CHECK(comb["certificates"]["cat"]["length"] == 0);
}

TEST_CASE("plan queries") {
  const json circle = run({"plan", fixture("c3.space"), "--from", "vertex a", "--to", "edge bc 1/2"}).doc();
  CHECK(circle["strata"] == 2);
  CHECK(circle["query"]["stratum"] == 0);
  CHECK(circle["query"]["length"] == "3/2");

  const json tree = run({"plan", fixture("tree.space"), "--from", "vertex x", "--to", "edge yz 1/3"}).doc();
  CHECK(tree["strata"] == 1);
  CHECK(tree["query"]["stratum"] == 0);
  CHECK(tree["query"]["length"] == "7/3");

  const json eight = run({"plan", fixture("figure_eight.space"), "--from", "edge l1 1/3", "--to", "edge l2 2/3"}).doc();
  CHECK(eight["query"]["stratum"] == 2);

  const json named = run({"plan", fixture("graphs.space"), "--graph", "square"}).doc();
  CHECK(named["strata"] == 2);
  CHECK(run({"plan", fixture("c3.space"), "--from", "edge bc 0.5", "--to", "vertex a"}).status == kExitFailure);
}

TEST_CASE("plan export and dot output") {
  const std::string plan = temp_file("k4.plan.json");
  const std::string dot = temp_file("k4.dot");
  REQUIRE(run({"plan", fixture("k4.space"), "--export", plan, "--from", "vertex a", "--to", "vertex c", "--dot", dot})
              .status == 0);
  std::ifstream in(dot);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().rfind("graph G {", 0) == 0);
  CHECK(text.str().find("penwidth=3") != std::string::npos);
  const Run reload = run({"verify", fixture("k4.space"), "--plan", plan, "--samples", "300"});
  CHECK(reload.status == 0);
}

TEST_CASE("verify") {
  const Run k4 = run({"verify", fixture("k4.space")});
  REQUIRE(k4.status == 0);
  const json r = k4.doc();
  check_report_keys(r);
  CHECK(r["verification"]["passed"] == true);
  CHECK(r["verification"]["strata"] == 3);
  CHECK(r["tc"] == 2);

  const json tree = run({"verify", fixture("tree.space"), "--samples", "500"}).doc();
  CHECK(tree["verification"]["strata"] == 1);

  const Run bad = run({"verify", fixture("k4.space"), "--plan", fixture("plans/k4_swapped.json"), "--samples", "500"});
  CHECK(bad.status == kExitVerification);
  const json b = bad.doc();
  CHECK(b["verification"]["passed"] == false);
  bool witnessed = false;
  for (const auto& c : b["verification"]["checks"]) {
    if (c["name"] == "section") witnessed = c["passed"] == false && !c["witness"].get<std::string>().empty();
  }
  CHECK(witnessed);

  CHECK(run({"verify", fixture("k4.space"), "--plan", temp_file("broken.json", "{\"strata\": 3")}).status == kExitParse);
  CHECK(run({"verify", fixture("k4.space"), "--plan", fixture("plans/k4_swapped.json"), "--graph", "main"}).status ==
        kExitVerification);
  CHECK(run({"verify", fixture("c3.space"), "--plan", fixture("plans/k4_swapped.json")}).status == kExitFailure);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = run({"verify", fixture("theta.space"), "--samples", "800", "--seed", "7"});
  const auto b = run({"verify", fixture("theta.space"), "--samples", "800", "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(run({"certify", fixture("nested.space")}).out == run({"certify", fixture("nested.space")}).out);
}

TEST_CASE("truncate") {
  const Run three = run({"truncate", fixture("earring.space"), "--depth", "3"});
  REQUIRE(three.status == 0);
  const SpaceFile g3 = parse_space_file(three.out);
  CHECK(betti1(*g3.plain_graph("main")) == 3);
  CHECK(g3.plain_graph("main")->vertex_count() == 1);

  const SpaceFile g0 = parse_space_file(run({"truncate", fixture("wild_circle.space"), "--depth", "0"}).out);
  CHECK(g0.plain_graph("main")->edge_count() == 1);

  const std::string out = temp_file("nested.graph");
  REQUIRE(run({"truncate", fixture("nested.space"), "--depth", "2", "-o", out}).status == 0);
  CHECK(betti1(*read_space_file(out).plain_graph("main")) == 6);
  CHECK(run({"truncate", fixture("nested.space"), "--depth", "2"}).out ==
        run({"truncate", fixture("nested.space"), "--depth", "2"}).out);
}

TEST_CASE("cuplength") {
  const json eight = run({"cuplength", fixture("figure_eight.space")}).doc();
  CHECK(eight["zero_divisor_cuplength"] == 2);
  CHECK(eight["tc_lower_bound"] == eight["tc"]);
  CHECK(run({"cuplength", fixture("c3.space")}).doc()["zero_divisor_cuplength"] == 1);
  CHECK(run({"cuplength", fixture("tree.space")}).doc()["zero_divisor_cuplength"] == 0);
}

}  // TEST_SUITE
