#include <doctest.h>

#include "support/generators.hpp"
#include "wildcat/graph_algorithms.hpp"

using namespace wildcat;
using namespace wildcat::testing;

TEST_SUITE("graph") {

TEST_CASE("build accepts the small examples") {
  const MultiGraph point = MultiGraph::build({{"v"}, {}});
  CHECK(point.vertex_count() == 1);
  CHECK(point.edge_count() == 0);
  const MultiGraph theta = MultiGraph::build({{"a", "b"}, {{"x", "a", "b"}, {"y", "a", "b"}, {"z", "a", "b"}}});
  CHECK(theta.edge_count() == 3);
  CHECK(theta.connected());
}

TEST_CASE("build reports the offending id") {
  try {
    MultiGraph::build({{"a", "b"}, {{"e", "a", "c"}}});
    FAIL("dangling endpoint accepted");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphError::Kind::kDanglingEndpoint);
    CHECK(e.offending_id() == "c");
  }
  try {
    MultiGraph::build({{"a", "a"}, {}});
    FAIL("duplicate accepted");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphError::Kind::kDuplicateIdentifier);
    CHECK(e.offending_id() == "a");
  }
  CHECK_THROWS_AS(MultiGraph::build({{"a"}, {{"a", "a", "a"}}}), GraphError);
  CHECK_THROWS_AS(MultiGraph::build({{"a b"}, {}}), GraphError);
}

TEST_CASE("points normalize parameters 0 and 1 to vertices") {
  const MultiGraph g = named_graph("path");
  const EdgeIndex ab = *g.find_edge("ab");
  CHECK(GraphPoint::on_edge(g, ab, 0) == GraphPoint::at_vertex(*g.find_vertex("a")));
  CHECK(GraphPoint::on_edge(g, ab, 1) == GraphPoint::at_vertex(*g.find_vertex("b")));
  CHECK_FALSE(GraphPoint::on_edge(g, ab, ratio(1, 2)).is_vertex());
  CHECK_THROWS_AS(GraphPoint::on_edge(g, ab, ratio(3, 2)), GraphError);
  CHECK(GraphPoint::on_edge(g, ab, Rational(2, 4)) == GraphPoint::on_edge(g, ab, ratio(1, 2)));
  CHECK(format_point(g, parse_point(g, "(edge ab 2/6)")) == "edge ab 1/3");
  CHECK_THROWS_AS(parse_point(g, "edge ab 0.5"), GraphError);
}

TEST_CASE("betti1 examples") {
  CHECK(betti1(named_graph("C3")) == 1);
  CHECK(betti1(named_graph("path")) == 0);
  CHECK(betti1(named_graph("K4")) == 3);
  CHECK(betti1_oracle(named_graph("K4")) == 3);
  CHECK(betti1(named_graph("figure-eight")) == 2);
}

TEST_CASE("betti1 matches the incidence-rank oracle on random graphs") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const MultiGraph g = random_graph(rng);
    CHECK(betti1(g) == betti1_oracle(g));
    // the fundamental cycles of the spanning forest number betti1
    CHECK(complement(g, spanning_forest(g)).size() == betti1(g));
  }
}

TEST_CASE("spanning forest is greedy by edge id") {
  const MultiGraph c3 = named_graph("C3");
  CHECK(spanning_forest(c3) == EdgeSubset{*c3.find_edge("ab"), *c3.find_edge("bc")});
  const MultiGraph path = named_graph("path");
  CHECK(spanning_forest(path).size() == 2);
  CHECK(spanning_forest(named_graph("circle")).empty());
}

TEST_CASE("deforest examples") {
  const auto path = deforest(named_graph("path"));
  CHECK(path.core.vertex_count() == 1);
  CHECK(path.homotopy->collapses().size() == 2);
  const auto hair = deforest(named_graph("circle-with-hair"));
  CHECK(betti1(hair.core) == 1);
  CHECK(hair.core.edge_count() == 1);
  const MultiGraph eight = named_graph("figure-eight");
  const auto e8 = deforest(eight);
  CHECK(e8.core == eight);
  CHECK(e8.homotopy->is_identity());
  CHECK_THROWS_AS(deforest(MultiGraph::build({{"a", "b"}, {}})), GraphError);
}

TEST_CASE("deforest preserves betti1 and slide paths end at r(x)") {
  Rng rng(12);
  std::size_t points = 0;
  while (points < 1000) {
    const MultiGraph g = random_connected_graph(rng, 12);
    const auto d = deforest(g);
    CHECK(betti1(d.core) == betti1(g));
    CHECK(d.core.component_count() == g.component_count());
    for (VertexIndex v = 0; v < d.core.vertex_count(); ++v) {
      if (betti1(g) > 0) CHECK(d.core.degree(v) >= 2);
    }
    for (int k = 0; k < 50; ++k, ++points) {
      const GraphPoint x = random_point(rng, g);
      const PLPath s = d.homotopy->slide(x);
      CHECK(s.start() == x);
      CHECK(s.end() == d.homotopy->retract_in_graph(x));
      // r is the identity on the core
      const GraphPoint r = d.homotopy->retract_in_graph(x);
      CHECK(d.homotopy->retract_in_graph(r) == r);
      CHECK(d.homotopy->slide(r).is_constant());
    }
  }
}

TEST_CASE("tree paths follow breadth-first distances") {
  const MultiGraph path = named_graph("path");
  const EdgeSubset forest = spanning_forest(path);
  const auto a = GraphPoint::at_vertex(*path.find_vertex("a"));
  const auto c = GraphPoint::at_vertex(*path.find_vertex("c"));
  const PLPath p = tree_path(path, forest, a, c);
  CHECK(p.length() == 2);
  CHECK(p.at(path, ratio(1, 2)) == GraphPoint::at_vertex(*path.find_vertex("b")));
  CHECK(tree_path(path, forest, a, a).is_constant());
  const auto mid = GraphPoint::on_edge(path, *path.find_edge("ab"), ratio(1, 2));
  CHECK(tree_path(path, forest, mid, c).length() == ratio(3, 2));
}

TEST_CASE("tree paths are reduced, reversible and shortest") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    const MultiGraph g = random_connected_graph(rng, 14);
    const EdgeSubset forest = spanning_forest(g);
    GraphSpec tree_spec;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) tree_spec.vertices.push_back(g.vertex_id(v));
    for (EdgeIndex e : forest) tree_spec.edges.push_back({g.edge_id(e), g.vertex_id(g.edge(e).v0), g.vertex_id(g.edge(e).v1)});
    const MultiGraph tree = MultiGraph::build(tree_spec);
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
      const auto d = bfs_distances(tree, u);
      for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
        const PLPath p = tree_path(g, forest, GraphPoint::at_vertex(u), GraphPoint::at_vertex(w));
        CHECK(p.length() == Rational(static_cast<unsigned long>(d[w])));
      }
    }
    for (int k = 0; k < 20; ++k) {
      GraphPoint x = random_point(rng, g);
      GraphPoint y = random_point(rng, g);
      if (!x.is_vertex() && !std::binary_search(forest.begin(), forest.end(), x.edge())) x = GraphPoint::at_vertex(0);
      if (!y.is_vertex() && !std::binary_search(forest.begin(), forest.end(), y.edge())) y = GraphPoint::at_vertex(0);
      const PLPath p = tree_path(g, forest, x, y);
      CHECK(p.start() == x);
      CHECK(p.end() == y);
      CHECK(tree_path(g, forest, y, x) == p.reversed());
      const auto& steps = p.steps();
      for (std::size_t s = 1; s < steps.size(); ++s) {
        // no step immediately undoes the previous one
        const bool undo = steps[s].edge == steps[s - 1].edge && steps[s].from == steps[s - 1].to &&
                          steps[s].to == steps[s - 1].from;
        CHECK_FALSE(undo);
      }
    }
  }
}

TEST_CASE("path evaluation is exact and length is additive") {
  const MultiGraph g = named_graph("C3");
  const PLPath p = PathBuilder(g, GraphPoint::at_vertex(0))
                       .move(*g.find_edge("ab"), 0, 1)
                       .move(*g.find_edge("bc"), 0, ratio(1, 2))
                       .build();
  CHECK(p.length() == ratio(3, 2));
  CHECK(p.at(g, 0) == p.start());
  CHECK(p.at(g, 1) == p.end());
  CHECK(p.at(g, ratio(2, 3)) == GraphPoint::at_vertex(*g.find_vertex("b")));
  CHECK(PLPath::constant(GraphPoint::at_vertex(1)).length() == 0);
}

TEST_CASE("cat and tc of graphs") {
  CHECK(cat_graph(named_graph("point")) == 0);
  CHECK(cat_graph(named_graph("path")) == 0);
  CHECK(cat_graph(named_graph("theta")) == 1);
  CHECK(tc_graph(named_graph("path")) == 0);
  CHECK(tc_graph(named_graph("circle")) == 1);
  CHECK(tc_graph(named_graph("figure-eight")) == 2);
  CHECK_THROWS_AS(cat_graph(MultiGraph::build({{"a", "b"}, {}})), GraphError);
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const MultiGraph g = random_connected_graph(rng);
    CHECK(cat_graph(g) <= tc_graph(g));
    CHECK(tc_graph(g) <= 2 * cat_graph(g));
  }
}

}  // TEST_SUITE
