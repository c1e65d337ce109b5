#include <doctest.h>

#include "support/generators.hpp"
#include "wildcat/cohomology.hpp"
#include "wildcat/filtration.hpp"
#include "wildcat/motion_plan.hpp"
#include "wildcat/plan_json.hpp"
#include "wildcat/verify.hpp"

using namespace wildcat;
using namespace wildcat::testing;

namespace {

GraphPoint vtx(const MultiGraph& g, const char* id) { return GraphPoint::at_vertex(*g.find_vertex(id)); }
GraphPoint mid(const MultiGraph& g, const char* id, Rational t) { return GraphPoint::on_edge(g, *g.find_edge(id), t); }

VerifyParams quick(std::size_t samples = 2000) {
  VerifyParams p;
  p.samples = samples;
  return p;
}

}  // namespace

TEST_SUITE("motion-plan") {

TEST_CASE("tree plans") {
  const MultiGraph point = named_graph("point");
  const MotionPlan pp = plan_tree(point);
  CHECK(pp.strata().size() == 1);
  CHECK(pp.execute(vtx(point, "v"), vtx(point, "v")).path.is_constant());

  const MultiGraph path = named_graph("path");
  const MotionPlan p = plan_tree(path);
  const Execution ex = p.execute(vtx(path, "a"), vtx(path, "c"));
  CHECK(ex.stratum == 0);
  CHECK(ex.path.length() == 2);
  CHECK(ex.path.at(path, ratio(1, 2)) == vtx(path, "b"));
  const GraphPoint q = mid(path, "bc", ratio(1, 3));
  CHECK(p.execute(q, q).path.is_constant());
  CHECK_THROWS_AS(plan_tree(named_graph("C3")), GraphError);
}

TEST_CASE("circle plan: antipodal pairs rotate, the rest take the shorter arc") {
  const MultiGraph c = named_graph("C3");
  const MotionPlan p = plan_circle(c);
  REQUIRE(p.strata().size() == 2);
  const CycleParam cyc(std::make_shared<const MultiGraph>(c));
  const Rational L = cyc.perimeter();
  const GraphPoint x = cyc.point_at(0);

  const Execution half = p.execute(x, cyc.point_at(L / 2));
  CHECK(half.stratum == 0);
  CHECK(half.path.length() == L / 2);
  CHECK(cyc.coordinate(half.path.at(c, ratio(1, 2))) == L / 4);

  const Execution quarter = p.execute(x, cyc.point_at(L / 4));
  CHECK(quarter.stratum == 1);
  CHECK(cyc.coordinate(quarter.path.at(c, ratio(1, 2))) == L / 8);

  CHECK(p.execute(x, x).path.is_constant());
  CHECK_THROWS_AS(plan_circle(named_graph("figure-eight")), GraphError);
}

TEST_CASE("plan_graph strata counts") {
  CHECK(plan_graph(named_graph("path")).strata().size() == 1);
  CHECK(plan_graph(named_graph("circle-with-hair")).strata().size() == 2);
  CHECK(plan_graph(named_graph("figure-eight")).strata().size() == 3);
  CHECK(plan_graph(named_graph("K4")).strata().size() == 3);
  CHECK_THROWS_AS(plan_graph(MultiGraph::build({{"a", "b"}, {}})), GraphError);
}

TEST_CASE("circle with a hair: hair queries slide to the core") {
  const MultiGraph g = named_graph("circle-with-hair");
  const MotionPlan p = plan_graph(g);
  const GraphPoint tip = vtx(g, "h");
  const GraphPoint on_hair = mid(g, "hair", ratio(1, 2));
  const Execution ex = p.execute(tip, on_hair);
  CHECK(ex.path.start() == tip);
  CHECK(ex.path.end() == on_hair);
  // both points retract to a, the path passes through it
  bool through_a = false;
  for (const auto& s : ex.path.steps()) {
    if (s.edge == *g.find_edge("ab") && (s.to == 0 || s.from == 0)) through_a = true;
  }
  CHECK(through_a);

  const Execution core = p.execute(tip, mid(g, "loop", ratio(1, 3)));
  CHECK(core.path.start() == tip);
  CHECK(core.path.end() == mid(g, "loop", ratio(1, 3)));
}

TEST_CASE("lifting") {
  const MultiGraph g = named_graph("circle-with-hair");
  const auto d = deforest(g);
  const MotionPlan core = plan_circle(d.core);
  const MotionPlan lifted = lift_plan(core, d.homotopy);
  // on the core the lifted plan agrees with the core plan
  const GraphPoint a = d.homotopy->to_graph(GraphPoint::at_vertex(0));
  const GraphPoint b = mid(g, "loop", ratio(1, 2));
  const Execution up = lifted.execute(a, b);
  const Execution down = core.execute(d.homotopy->to_core(a), d.homotopy->to_core(b));
  CHECK(up.stratum == down.stratum);
  CHECK(up.path == d.homotopy->path_to_graph(down.path));

  const auto id = std::make_shared<const CollapseHomotopy>(CollapseHomotopy::identity(d.core));
  const MotionPlan same = lift_plan(core, id);
  CHECK(same.strata().size() == core.strata().size());
  CHECK(same.execute(GraphPoint::at_vertex(0), GraphPoint::at_vertex(0)).path.is_constant());

  CHECK_THROWS_AS(lift_plan(plan_circle(named_graph("C3")), d.homotopy), GraphError);
}

TEST_CASE("figure-eight: both points off the tree land in the last stratum") {
  const MultiGraph g = named_graph("figure-eight");
  const MotionPlan p = plan_graph(g);
  const Execution ex = p.execute(mid(g, "l1", ratio(1, 3)), mid(g, "l2", ratio(2, 3)));
  CHECK(ex.stratum == 2);
  CHECK(p.execute(vtx(g, "o"), vtx(g, "o")).stratum == 0);
  CHECK(p.execute(vtx(g, "o"), mid(g, "l1", ratio(1, 2))).stratum == 1);
}

TEST_CASE("strata are closed regions") {
  for (const auto& name : fixture_names()) {
    const MotionPlan p = plan_graph(named_graph(name));
    for (const auto& s : p.strata()) CHECK(s.region.closed());
  }
  CHECK_FALSE(Region::product({Cell::open_edge(0)}, {Cell::vertex(0)}).closed());
}

TEST_CASE("execute returns exact endpoints") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const MultiGraph g = random_connected_graph(rng, 12);
    const MotionPlan p = plan_graph(g);
    CHECK(p.strata().size() == tc_graph(g) + 1);
    CHECK(p.strata().size() == tc_lower_bound(g) + 1);
    for (int k = 0; k < 50; ++k) {
      const GraphPoint x = random_point(rng, g);
      const GraphPoint y = random_point(rng, g);
      const Execution ex = p.execute(x, y);
      CHECK(ex.path.start() == x);
      CHECK(ex.path.end() == y);
      CHECK(ex.path.at(g, 0) == x);
      CHECK(ex.path.at(g, 1) == y);
      CHECK(p.strata()[ex.stratum].region.contains(g, x, y));
      if (ex.stratum > 0) CHECK_FALSE(p.strata()[ex.stratum - 1].region.contains(g, x, y));
    }
  }
}

TEST_CASE("verification passes on the fixtures") {
  for (const auto& name : fixture_names()) {
    const MultiGraph g = named_graph(name);
    const VerificationReport r = verify_plan(plan_graph(g), g, quick());
    INFO(name);
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.passed);
    }
    CHECK(r.strata_count == tc_graph(g) + 1);
  }
}

TEST_CASE("a plan with swapped rules fails the section check") {
  const MultiGraph g = named_graph("K4");
  nlohmann::json doc = nlohmann::json::parse(plan_to_json(plan_graph(g)).dump());
  std::swap(doc["strata"][0]["rule"], doc["strata"][2]["rule"]);
  const VerificationReport r = verify_plan(plan_from_json(doc, g), g, quick(500));
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.check("section").passed);
  CHECK_FALSE(r.check("section").witness.empty());
}

TEST_CASE("a plan with too many strata fails the count check") {
  const MultiGraph g = named_graph("circle");
  nlohmann::json doc = nlohmann::json::parse(plan_to_json(plan_graph(g)).dump());
  doc["strata"].insert(doc["strata"].begin(), doc["strata"][0]);
  const VerificationReport r = verify_plan(plan_from_json(doc, g), g, quick(200));
  CHECK_FALSE(r.check("strata-count").passed);
}

TEST_CASE("plan JSON round trip") {
  for (const auto& name : fixture_names()) {
    const MultiGraph g = named_graph(name);
    const MotionPlan p = plan_graph(g);
    const auto text = plan_to_json(p).dump();
    const MotionPlan q = plan_from_json(nlohmann::json::parse(text), g);
    CHECK(plan_to_json(q).dump() == text);
    Rng rng(32);
    for (int k = 0; k < 30; ++k) {
      const GraphPoint x = random_point(rng, g);
      const GraphPoint y = random_point(rng, g);
      CHECK(p.execute(x, y).path == q.execute(x, y).path);
    }
  }
  const MultiGraph g = named_graph("C3");
  CHECK_THROWS_AS(plan_from_json(nlohmann::json::parse(plan_to_json(plan_graph(g)).dump()), named_graph("K4")),
                  GraphError);
  CHECK_THROWS_AS(plan_from_json(nlohmann::json::parse(R"({"strata": [{"rule": {"warp": {}}, "region": []}]})"), g),
                  PlanFormatError);
}

TEST_CASE("cat filtrations and their products") {
  for (const auto& name : fixture_names()) {
    const MultiGraph g = named_graph(name);
    const GraphFiltration f = cat_filtration(g);
    CHECK(f.length() == cat_graph(g));
    CHECK(check_cat_filtration(f).ok());
    const ProductFiltration h = product_cat_filtration(f, f);
    CHECK(h.length() == 2 * f.length());
    const FiltrationCheck c = check_product_filtration(h);
    INFO(name << ": " << c.witness);
    CHECK(c.ok());
    for (std::size_t k = 0; k < h.pieces.size(); ++k) {
      for (const auto& [i, j] : h.pieces[k]) CHECK(i + j == k);
    }
  }
  // a filtration whose first level holds a cycle is rejected
  const MultiGraph c = named_graph("circle");
  GraphFiltration bad{std::make_shared<const MultiGraph>(c), {{Cell::vertex(0), Cell::closed_edge(0)}}};
  CHECK_FALSE(check_cat_filtration(bad).ok());
  CHECK_THROWS_AS(product_cat_filtration(bad, bad), FiltrationError);
}

}  // TEST_SUITE
