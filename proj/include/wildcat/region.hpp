#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "wildcat/graph.hpp"
#include "wildcat/graph_algorithms.hpp"

namespace wildcat {

/// A cell of the realization: a vertex, a closed or open edge, or a closed
/// rational sub-arc [lo, hi] of an edge.
struct Cell {
  enum class Kind { kVertex, kClosedEdge, kOpenEdge, kSubArc };

  Kind kind = Kind::kVertex;
  std::size_t index = 0;
  Rational lo = 0;
  Rational hi = 1;

  static Cell vertex(VertexIndex v) { return {Kind::kVertex, v, 0, 1}; }
  static Cell closed_edge(EdgeIndex e) { return {Kind::kClosedEdge, e, 0, 1}; }
  static Cell open_edge(EdgeIndex e) { return {Kind::kOpenEdge, e, 0, 1}; }
  static Cell sub_arc(EdgeIndex e, Rational lo, Rational hi);

  bool closed() const { return kind != Kind::kOpenEdge; }
  bool contains(const MultiGraph& g, const GraphPoint& p) const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Arclength coordinate on a graph that is a single cycle. The walk starts at
/// the smallest vertex and leaves through its smallest incident edge.
class CycleParam {
 public:
  struct Arc {
    EdgeIndex edge;
    bool forward;  // traversed from v0 to v1
  };

  /// Throws GraphError(kNotACycle) unless g is one cycle.
  explicit CycleParam(std::shared_ptr<const MultiGraph> g);

  const MultiGraph& graph() const { return *g_; }
  const std::shared_ptr<const MultiGraph>& graph_ptr() const { return g_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  Rational perimeter() const { return Rational(static_cast<unsigned long>(arcs_.size())); }

  /// Coordinate in [0, perimeter).
  Rational coordinate(const GraphPoint& p) const;
  GraphPoint point_at(const Rational& coordinate) const;
  /// Coordinate of the point at parameter t on arc k (k + t or k + 1 - t).
  Rational arc_coordinate(std::size_t arc, const Rational& t) const;
  std::size_t arc_of(EdgeIndex e) const { return arc_of_edge_[e]; }

  /// Path from p moving by `distance` along the cycle; positive is the
  /// walking direction.
  PLPath walk(const GraphPoint& p, const Rational& distance) const;

 private:
  std::shared_ptr<const MultiGraph> g_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> arc_of_edge_;
  std::vector<std::size_t> position_of_vertex_;
};

/// Motion of one coordinate: stationary, or affine along a closed edge from
/// parameter t0 to t1 as the segment parameter runs over [0,1].
struct CoordMotion {
  GraphPoint start;
  std::optional<EdgeIndex> edge;
  Rational t0 = 0;
  Rational t1 = 0;

  static CoordMotion stationary(const GraphPoint& p) { return {p, std::nullopt, 0, 0}; }
  static CoordMotion along(const MultiGraph& g, EdgeIndex e, const Rational& t0, const Rational& t1);

  GraphPoint at(const MultiGraph& g, const Rational& lambda) const;
};

struct PairMotion {
  CoordMotion first;
  CoordMotion second;
};

class Region;

/// (union of `first`) x (union of `second`).
struct BoxPrimitive {
  std::vector<Cell> first;
  std::vector<Cell> second;
};

/// {(x, x + offset)} along a cycle.
struct ShiftPrimitive {
  std::shared_ptr<const CycleParam> cycle;
  Rational offset;
};

/// (r x r)^{-1}(inner) for the retraction r of a collapse homotopy; `inner`
/// lives on the core.
struct PreimagePrimitive {
  std::shared_ptr<const CollapseHomotopy> map;
  std::shared_ptr<const Region> inner;
};

using Primitive = std::variant<BoxPrimitive, ShiftPrimitive, PreimagePrimitive>;

/// Finite union of primitive subsets of X x Y for graphs X and Y (usually
/// X = Y = G). Shift and preimage primitives need X = Y. Membership is exact.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Primitive> primitives) : primitives_(std::move(primitives)) {}

  /// Union of the boxes A x B over the two cell lists, as one primitive.
  static Region product(const std::vector<Cell>& first, const std::vector<Cell>& second);
  /// All of G x G.
  static Region whole(const MultiGraph& g);

  const std::vector<Primitive>& primitives() const { return primitives_; }
  bool empty() const { return primitives_.empty(); }
  Region& add(Primitive p);
  Region united(const Region& other) const;

  /// Closedness decided from the descriptors: open-edge boxes are not closed.
  bool closed() const;

  bool contains(const MultiGraph& g, const GraphPoint& x, const GraphPoint& y) const {
    return contains(g, g, x, y);
  }
  bool contains(const MultiGraph& gx, const MultiGraph& gy, const GraphPoint& x,
                const GraphPoint& y) const;
  /// Whether the segment traced by `motion` meets the region.
  bool meets(const MultiGraph& g, const PairMotion& motion) const { return meets(g, g, motion); }
  bool meets(const MultiGraph& gx, const MultiGraph& gy, const PairMotion& motion) const;

 private:
  std::vector<Primitive> primitives_;
};

/// Cells covering the closed subgraph spanned by `edges` plus any vertex not
/// on one of them when `include_isolated` is set.
std::vector<Cell> closed_cells(const MultiGraph& g, const EdgeSubset& edges, bool include_isolated);

}  // namespace wildcat
