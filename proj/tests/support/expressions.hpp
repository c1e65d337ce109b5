#pragma once

// The named expressions used across the wild-calculus tests.

#include "support/generators.hpp"
#include "wildcat/space_expr.hpp"

namespace wildcat::testing {

inline std::shared_ptr<const MultiGraph> shared(const std::string& name) {
  return std::make_shared<const MultiGraph>(named_graph(name));
}

inline ExprPtr circle_expr() { return make_graph_expr("circle", shared("circle")); }

/// Circles accumulating at one point.
inline ExprPtr earring() {
  auto p = shared("point");
  return make_node("point", p, {}, {{make_subcomplex(*p, {"v"}), circle_expr(), PointRef::vertex("a")}});
}

/// Circles accumulating on every point of a circle.
inline ExprPtr wild_circle() {
  auto c = shared("circle");
  return make_node("circle", c, {}, {{make_subcomplex(*c, {"c"}), circle_expr(), PointRef::vertex("a")}});
}

/// Wild circles accumulating at a point, glued on their wild sets.
inline ExprPtr nested_rank3() {
  auto p = shared("point");
  return make_node("point", p, {}, {{make_subcomplex(*p, {"v"}), wild_circle(), PointRef::edge("c", ratio(1, 2))}});
}

/// Figure-eight with circles accumulating on both loops.
inline ExprPtr figure_eight_wild() {
  auto f = shared("figure-eight");
  return make_node("figure-eight", f, {}, {{make_subcomplex(*f, {"l1", "l2"}), circle_expr(), PointRef::vertex("a")}});
}

/// Arc with an earring at one end; its wild set is the end u.
inline ExprPtr hanging_earring() {
  auto s = std::make_shared<const MultiGraph>(MultiGraph::build({{"u", "w"}, {{"e", "u", "w"}}}));
  return make_node("arc", s, {}, {{make_subcomplex(*s, {"u"}), circle_expr(), PointRef::vertex("a")}});
}

/// Hanging earrings accumulating at a point, glued at `anchor`.
inline ExprPtr earring_of_earrings(const char* anchor) {
  auto p = shared("point");
  return make_node("point", p, {}, {{make_subcomplex(*p, {"v"}), hanging_earring(), PointRef::vertex(anchor)}});
}

}  // namespace wildcat::testing
