#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wildcat/errors.hpp"
#include "wildcat/rational.hpp"

namespace wildcat {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct EdgeSpec {
  std::string id;
  std::string v0;
  std::string v1;
};

/// Unvalidated vertex and edge records, in declaration order.
struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

/// Identifiers are ASCII words: letters, digits and `_ . - : #`.
bool is_valid_identifier(std::string_view id);

/// Finite multigraph whose realization gives every edge the unit interval.
/// Loops and parallel edges are allowed. Vertices and edges are indexed in
/// increasing identifier order, so "smallest index" and "smallest id" agree.
class MultiGraph {
 public:
  struct Edge {
    VertexIndex v0;
    VertexIndex v1;
    bool is_loop() const { return v0 == v1; }
  };

  /// Validates identifiers, uniqueness and endpoints. Throws GraphError naming
  /// the offending identifier.
  static MultiGraph build(const GraphSpec& spec);

  MultiGraph() = default;

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }
  const std::string& edge_id(EdgeIndex e) const { return edge_ids_[e]; }
  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  /// Edge indices incident to v; a loop is listed twice.
  std::span<const EdgeIndex> incident(VertexIndex v) const { return incidence_[v]; }
  /// Loops contribute 2.
  std::size_t degree(VertexIndex v) const { return incidence_[v].size(); }

  /// Endpoint of e other than v (v itself for loops).
  VertexIndex opposite(EdgeIndex e, VertexIndex v) const {
    return edges_[e].v0 == v ? edges_[e].v1 : edges_[e].v0;
  }

  std::size_t component_count() const { return component_count_; }
  std::size_t component_of(VertexIndex v) const { return component_[v]; }
  bool connected() const { return component_count_ == 1; }

  /// Records sorted by identifier.
  GraphSpec spec() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edge_ids_ == b.edge_ids_ &&
           a.same_endpoints(b);
  }

 private:
  bool same_endpoints(const MultiGraph& other) const;

  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

/// Throws GraphError(kDisconnected) unless g is connected.
void require_connected(const MultiGraph& g, std::string_view operation);

/// A point of the geometric realization: a vertex, or an interior point of an
/// edge at parameter t in (0,1) measured from endpoint v0. Parameters 0 and 1
/// are always normalized to the vertex form.
class GraphPoint {
 public:
  static GraphPoint at_vertex(VertexIndex v) { return GraphPoint(v); }
  /// t must lie in [0,1].
  static GraphPoint on_edge(const MultiGraph& g, EdgeIndex e, const Rational& t);

  bool is_vertex() const { return !on_edge_; }
  VertexIndex vertex() const { return index_; }
  EdgeIndex edge() const { return index_; }
  const Rational& param() const { return param_; }

  /// Whether the point lies on the closed edge e.
  bool on_closed_edge(const MultiGraph& g, EdgeIndex e) const;
  /// Parameter of the point along the closed edge e. For a vertex that is
  /// both endpoints (a loop) the value 0 is returned.
  std::optional<Rational> param_along(const MultiGraph& g, EdgeIndex e) const;

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    return a.on_edge_ == b.on_edge_ && a.index_ == b.index_ && a.param_ == b.param_;
  }

 private:
  explicit GraphPoint(VertexIndex v) : on_edge_(false), index_(v), param_(0) {}
  GraphPoint(EdgeIndex e, Rational t) : on_edge_(true), index_(e), param_(std::move(t)) {}

  bool on_edge_;
  std::size_t index_;
  Rational param_;
};

/// "vertex a" or "edge e 1/3".
std::string format_point(const MultiGraph& g, const GraphPoint& p);
/// Accepts the forms printed by format_point, optionally parenthesized.
GraphPoint parse_point(const MultiGraph& g, std::string_view text);

/// One monotone move along an edge, from parameter `from` to parameter `to`.
struct PathStep {
  EdgeIndex edge;
  Rational from;
  Rational to;

  Rational length() const { return abs(Rational(to - from)); }
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Piecewise-affine path in the realization, parametrized uniformly by
/// arclength over [0,1]. A constant path has no steps.
class PLPath {
 public:
  static PLPath constant(GraphPoint p);
  /// Steps must be continuous; zero-length steps are dropped. An empty list is
  /// rejected since it carries no start point.
  static PLPath from_steps(const MultiGraph& g, const std::vector<PathStep>& steps);

  const GraphPoint& start() const { return start_; }
  const GraphPoint& end() const { return end_; }
  const std::vector<PathStep>& steps() const { return steps_; }
  bool is_constant() const { return steps_.empty(); }
  Rational length() const;

  /// Point at time s in [0,1] under uniform arclength reparametrization.
  GraphPoint at(const MultiGraph& g, const Rational& time) const;

  PLPath reversed() const;
  /// Concatenation; requires end() == next.start().
  PLPath then(const PLPath& next) const;

  friend bool operator==(const PLPath&, const PLPath&) = default;

 private:
  friend class PathBuilder;
  PLPath(GraphPoint start, GraphPoint end, std::vector<PathStep> steps)
      : start_(std::move(start)), end_(std::move(end)), steps_(std::move(steps)) {}

  GraphPoint start_;
  GraphPoint end_;
  std::vector<PathStep> steps_;
};

/// Appends steps while tracking the current point; used by every path
/// construction in the library.
class PathBuilder {
 public:
  PathBuilder(const MultiGraph& g, const GraphPoint& start)
      : g_(&g), start_(start), current_(start) {}

  const GraphPoint& current() const { return current_; }
  /// Moves along edge e from parameter `from` (which must name the current
  /// point) to parameter `to`.
  PathBuilder& move(EdgeIndex e, const Rational& from, const Rational& to);
  /// Moves along e from the current point to the endpoint at parameter `to`
  /// (0 or 1) or any interior parameter. The current point must be on e; for
  /// a vertex on a loop the start parameter is chosen as the opposite end of `to`.
  PathBuilder& move_to(EdgeIndex e, const Rational& to);
  PathBuilder& append(const PLPath& path);

  PLPath build() const;

 private:
  const MultiGraph* g_;
  GraphPoint start_;
  GraphPoint current_;
  std::vector<PathStep> steps_;
};

}  // namespace wildcat
