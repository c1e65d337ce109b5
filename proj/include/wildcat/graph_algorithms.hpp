#pragma once

#include <memory>
#include <vector>

#include "wildcat/graph.hpp"

namespace wildcat {

/// Sorted edge indices.
using EdgeSubset = std::vector<EdgeIndex>;

/// |E| - |V| + #components. A loop contributes 1.
std::size_t betti1(const MultiGraph& g);

/// Maximal cycle-free edge subset, greedy in increasing edge id. Loops never
/// enter the forest.
EdgeSubset spanning_forest(const MultiGraph& g);

/// Edges not in `subset`, sorted.
EdgeSubset complement(const MultiGraph& g, const EdgeSubset& subset);
std::vector<bool> edge_mask(const MultiGraph& g, const EdgeSubset& subset);

/// Strong deformation retraction of a graph onto a subgraph, recorded as a
/// sequence of free-edge collapses.
class CollapseHomotopy {
 public:
  struct Collapse {
    EdgeIndex edge;
    VertexIndex retained;  // endpoint kept
    VertexIndex removed;   // free (degree-1) endpoint at collapse time
  };

  /// Identity homotopy on g (no collapses).
  static CollapseHomotopy identity(const MultiGraph& g);
  /// Validates that each collapse removes a degree-1 vertex at its turn.
  static CollapseHomotopy from_collapses(const MultiGraph& g, std::vector<Collapse> collapses);

  const MultiGraph& graph() const { return graph_; }
  const MultiGraph& core() const { return core_; }
  const std::vector<Collapse>& collapses() const { return collapses_; }
  bool is_identity() const { return collapses_.empty(); }

  /// Index translation between the graph and its core.
  std::optional<VertexIndex> core_vertex(VertexIndex v) const;
  std::optional<EdgeIndex> core_edge(EdgeIndex e) const;
  VertexIndex graph_vertex(VertexIndex core_v) const { return vertex_from_core_[core_v]; }
  EdgeIndex graph_edge(EdgeIndex core_e) const { return edge_from_core_[core_e]; }

  /// r(x), expressed on the core.
  GraphPoint retract(const GraphPoint& x) const;
  /// r(x), expressed on the original graph.
  GraphPoint retract_in_graph(const GraphPoint& x) const;
  /// D(x, .): path in the graph from x to r(x); constant on the core.
  PLPath slide(const GraphPoint& x) const;

  GraphPoint to_graph(const GraphPoint& core_point) const;
  GraphPoint to_core(const GraphPoint& graph_point) const;  // point must lie on the core
  PLPath path_to_graph(const PLPath& core_path) const;

 private:
  CollapseHomotopy(MultiGraph g, std::vector<Collapse> collapses);

  MultiGraph graph_;
  MultiGraph core_;
  std::vector<Collapse> collapses_;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> vertex_to_core_;
  std::vector<std::size_t> edge_to_core_;
  std::vector<VertexIndex> vertex_from_core_;
  std::vector<EdgeIndex> edge_from_core_;
  std::vector<std::size_t> collapse_of_vertex_;  // collapse index that removed v
  std::vector<std::size_t> collapse_of_edge_;
  std::vector<VertexIndex> retraction_vertex_;  // r(v) in graph indices
};

struct Deforestation {
  MultiGraph core;
  std::shared_ptr<const CollapseHomotopy> homotopy;
};

/// Repeatedly collapses the free edge at the smallest-id vertex of degree 1
/// until none is left. The core of a tree is its last remaining vertex.
Deforestation deforest(const MultiGraph& g);

/// Unique reduced paths inside a forest of g, with precomputed next-hop tables.
class TreeRouter {
 public:
  TreeRouter(std::shared_ptr<const MultiGraph> g, EdgeSubset forest);

  const MultiGraph& graph() const { return *g_; }
  const EdgeSubset& forest() const { return forest_; }
  bool in_forest(EdgeIndex e) const { return mask_[e]; }
  /// Whether p lies in the closed forest subspace (a vertex, or a forest edge).
  bool contains(const GraphPoint& p) const;

  /// Unique reduced path from p to q inside the forest. Both points must lie
  /// in the forest and in the same tree.
  PLPath route(const GraphPoint& p, const GraphPoint& q) const;

 private:
  std::shared_ptr<const MultiGraph> g_;
  EdgeSubset forest_;
  std::vector<bool> mask_;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> dist_;      // tree distance, kNone across trees
  std::vector<std::vector<EdgeIndex>> next_edge_;   // first edge on the path u -> w
};

/// Unique reduced path from p to q in the forest `forest` of g.
PLPath tree_path(const MultiGraph& g, const EdgeSubset& forest, const GraphPoint& p,
                 const GraphPoint& q);

/// 0 for a tree, 1 otherwise.
std::size_t cat_graph(const MultiGraph& g);
/// 0 for a tree, 1 with exactly one cycle, 2 otherwise.
std::size_t tc_graph(const MultiGraph& g);

/// All-pairs path-metric distances on a graph with unit edges. Floating point
/// is only used by verification sampling.
class DistanceTable {
 public:
  /// Floating-point position: a vertex, or parameter t on an edge.
  struct Location {
    bool on_edge = false;
    std::size_t index = 0;
    double t = 0;
  };

  explicit DistanceTable(const MultiGraph& g);
  double distance(const GraphPoint& p, const GraphPoint& q) const;
  double distance(const Location& p, const Location& q) const;

  static Location locate(const GraphPoint& p);
  /// Positions of `path` at times k / (n - 1), k = 0..n-1.
  std::vector<Location> sample(const PLPath& path, std::size_t n) const;

 private:
  const MultiGraph* g_;
  std::vector<std::vector<double>> vertex_dist_;
};

}  // namespace wildcat
