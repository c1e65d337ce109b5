#include "wildcat/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace wildcat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Exit {
  VertexIndex vertex;
  Rational cost;
};

// Ways to leave p through a vertex: the vertex itself, or either endpoint of
// the edge carrying p.
std::vector<Exit> exits(const MultiGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return {{p.vertex(), Rational(0)}};
  const auto& e = g.edge(p.edge());
  return {{e.v0, p.param()}, {e.v1, Rational(1 - p.param())}};
}

}  // namespace

std::size_t betti1(const MultiGraph& g) {
  return g.edge_count() + g.component_count() - g.vertex_count();
}

EdgeSubset spanning_forest(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  EdgeSubset forest;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (uf.unite(g.edge(e).v0, g.edge(e).v1)) forest.push_back(e);
  }
  return forest;
}

EdgeSubset complement(const MultiGraph& g, const EdgeSubset& subset) {
  const auto mask = edge_mask(g, subset);
  EdgeSubset out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!mask[e]) out.push_back(e);
  }
  return out;
}

std::vector<bool> edge_mask(const MultiGraph& g, const EdgeSubset& subset) {
  std::vector<bool> mask(g.edge_count(), false);
  for (EdgeIndex e : subset) mask.at(e) = true;
  return mask;
}

// ---------------------------------------------------------------------------
// CollapseHomotopy

CollapseHomotopy CollapseHomotopy::identity(const MultiGraph& g) { return CollapseHomotopy(g, {}); }

CollapseHomotopy CollapseHomotopy::from_collapses(const MultiGraph& g,
                                                  std::vector<Collapse> collapses) {
  using Kind = GraphError::Kind;
  std::vector<bool> vertex_alive(g.vertex_count(), true);
  std::vector<bool> edge_alive(g.edge_count(), true);
  std::vector<std::size_t> degree(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);

  for (const auto& c : collapses) {
    if (c.edge >= g.edge_count() || !edge_alive[c.edge]) {
      throw GraphError(Kind::kMismatch, "", "collapse of a missing edge");
    }
    const auto& e = g.edge(c.edge);
    const bool endpoints_match = (e.v0 == c.retained && e.v1 == c.removed) ||
                                 (e.v1 == c.retained && e.v0 == c.removed);
    if (e.is_loop() || !endpoints_match) {
      throw GraphError(Kind::kMismatch, g.edge_id(c.edge),
                       "collapse endpoints do not match edge '" + g.edge_id(c.edge) + "'");
    }
    if (!vertex_alive[c.removed] || degree[c.removed] != 1) {
      throw GraphError(Kind::kMismatch, g.vertex_id(c.removed),
                       "collapsed vertex '" + g.vertex_id(c.removed) + "' is not free");
    }
    vertex_alive[c.removed] = false;
    edge_alive[c.edge] = false;
    degree[c.removed] = 0;
    degree[c.retained] -= 1;
  }
  return CollapseHomotopy(g, std::move(collapses));
}

CollapseHomotopy::CollapseHomotopy(MultiGraph g, std::vector<Collapse> collapses)
    : graph_(std::move(g)), collapses_(std::move(collapses)) {
  const std::size_t nv = graph_.vertex_count();
  const std::size_t ne = graph_.edge_count();
  collapse_of_vertex_.assign(nv, kNone);
  collapse_of_edge_.assign(ne, kNone);
  for (std::size_t i = 0; i < collapses_.size(); ++i) {
    collapse_of_vertex_[collapses_[i].removed] = i;
    collapse_of_edge_[collapses_[i].edge] = i;
  }

  GraphSpec core_spec;
  for (VertexIndex v = 0; v < nv; ++v) {
    if (collapse_of_vertex_[v] == kNone) core_spec.vertices.push_back(graph_.vertex_id(v));
  }
  for (EdgeIndex e = 0; e < ne; ++e) {
    if (collapse_of_edge_[e] == kNone) {
      core_spec.edges.push_back({graph_.edge_id(e), graph_.vertex_id(graph_.edge(e).v0),
                                 graph_.vertex_id(graph_.edge(e).v1)});
    }
  }
  core_ = MultiGraph::build(core_spec);

  vertex_to_core_.assign(nv, kNone);
  edge_to_core_.assign(ne, kNone);
  for (VertexIndex c = 0; c < core_.vertex_count(); ++c) {
    const VertexIndex v = *graph_.find_vertex(core_.vertex_id(c));
    vertex_to_core_[v] = c;
    vertex_from_core_.push_back(v);
  }
  for (EdgeIndex c = 0; c < core_.edge_count(); ++c) {
    const EdgeIndex e = *graph_.find_edge(core_.edge_id(c));
    edge_to_core_[e] = c;
    edge_from_core_.push_back(e);
  }

  retraction_vertex_.resize(nv);
  std::iota(retraction_vertex_.begin(), retraction_vertex_.end(), 0);
  for (auto it = collapses_.rbegin(); it != collapses_.rend(); ++it) {
    retraction_vertex_[it->removed] = retraction_vertex_[it->retained];
  }
}

std::optional<VertexIndex> CollapseHomotopy::core_vertex(VertexIndex v) const {
  if (vertex_to_core_[v] == kNone) return std::nullopt;
  return vertex_to_core_[v];
}

std::optional<EdgeIndex> CollapseHomotopy::core_edge(EdgeIndex e) const {
  if (edge_to_core_[e] == kNone) return std::nullopt;
  return edge_to_core_[e];
}

GraphPoint CollapseHomotopy::retract_in_graph(const GraphPoint& x) const {
  if (x.is_vertex()) return GraphPoint::at_vertex(retraction_vertex_[x.vertex()]);
  const std::size_t c = collapse_of_edge_[x.edge()];
  if (c == kNone) return x;
  return GraphPoint::at_vertex(retraction_vertex_[collapses_[c].retained]);
}

GraphPoint CollapseHomotopy::retract(const GraphPoint& x) const {
  return to_core(retract_in_graph(x));
}

PLPath CollapseHomotopy::slide(const GraphPoint& x) const {
  PathBuilder path(graph_, x);
  while (true) {
    const GraphPoint& here = path.current();
    const std::size_t c =
        here.is_vertex() ? collapse_of_vertex_[here.vertex()] : collapse_of_edge_[here.edge()];
    if (c == kNone) break;
    const Collapse& step = collapses_[c];
    const Rational target = graph_.edge(step.edge).v0 == step.retained ? 0 : 1;
    path.move_to(step.edge, target);
  }
  return path.build();
}

GraphPoint CollapseHomotopy::to_graph(const GraphPoint& core_point) const {
  if (core_point.is_vertex()) return GraphPoint::at_vertex(vertex_from_core_[core_point.vertex()]);
  return GraphPoint::on_edge(graph_, edge_from_core_[core_point.edge()], core_point.param());
}

GraphPoint CollapseHomotopy::to_core(const GraphPoint& graph_point) const {
  const std::size_t index = graph_point.is_vertex() ? vertex_to_core_[graph_point.vertex()]
                                                    : edge_to_core_[graph_point.edge()];
  if (index == kNone) {
    throw GraphError(GraphError::Kind::kMismatch, "", "point does not lie on the core");
  }
  if (graph_point.is_vertex()) return GraphPoint::at_vertex(index);
  return GraphPoint::on_edge(core_, index, graph_point.param());
}

PLPath CollapseHomotopy::path_to_graph(const PLPath& core_path) const {
  PathBuilder path(graph_, to_graph(core_path.start()));
  for (const auto& s : core_path.steps()) path.move(edge_from_core_[s.edge], s.from, s.to);
  return path.build();
}

Deforestation deforest(const MultiGraph& g) {
  require_connected(g, "deforest");
  std::vector<std::size_t> degree(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
  std::vector<bool> vertex_alive(g.vertex_count(), true);
  std::vector<bool> edge_alive(g.edge_count(), true);
  std::size_t alive = g.vertex_count();

  std::vector<CollapseHomotopy::Collapse> collapses;
  bool progress = true;
  while (progress && alive > 1) {
    progress = false;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (!vertex_alive[v] || degree[v] != 1) continue;
      const auto incident = g.incident(v);
      const EdgeIndex e = *std::find_if(incident.begin(), incident.end(),
                                        [&](EdgeIndex candidate) { return edge_alive[candidate]; });
      const VertexIndex kept = g.opposite(e, v);
      collapses.push_back({e, kept, v});
      vertex_alive[v] = false;
      edge_alive[e] = false;
      degree[v] = 0;
      degree[kept] -= 1;
      --alive;
      progress = true;
      break;  // restart from the smallest id
    }
  }
  auto h = std::make_shared<const CollapseHomotopy>(
      CollapseHomotopy::from_collapses(g, std::move(collapses)));
  return {h->core(), h};
}

// ---------------------------------------------------------------------------
// TreeRouter

TreeRouter::TreeRouter(std::shared_ptr<const MultiGraph> graph, EdgeSubset forest)
    : g_(std::move(graph)), forest_(std::move(forest)), mask_(edge_mask(*g_, forest_)) {
  const MultiGraph& g = *g_;
  std::sort(forest_.begin(), forest_.end());
  UnionFind uf(g.vertex_count());
  for (EdgeIndex e : forest_) {
    if (!uf.unite(g.edge(e).v0, g.edge(e).v1)) {
      throw GraphError(GraphError::Kind::kNotAForest, g.edge_id(e),
                       "edge '" + g.edge_id(e) + "' closes a cycle in the forest");
    }
  }
  const std::size_t n = g.vertex_count();
  dist_.assign(n, std::vector<std::size_t>(n, kNone));
  next_edge_.assign(n, std::vector<EdgeIndex>(n, kNone));
  // BFS from each target w records, for every u, the edge u takes toward w.
  std::deque<VertexIndex> queue;
  for (VertexIndex w = 0; w < n; ++w) {
    dist_[w][w] = 0;
    queue.push_back(w);
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (EdgeIndex e : g.incident(v)) {
        if (!mask_[e]) continue;
        const VertexIndex u = g.opposite(e, v);
        if (dist_[u][w] != kNone) continue;
        dist_[u][w] = dist_[v][w] + 1;
        next_edge_[u][w] = e;
        queue.push_back(u);
      }
    }
  }
}

bool TreeRouter::contains(const GraphPoint& p) const { return p.is_vertex() || mask_[p.edge()]; }

PLPath TreeRouter::route(const GraphPoint& p, const GraphPoint& q) const {
  using Kind = GraphError::Kind;
  if (!contains(p) || !contains(q)) {
    throw GraphError(Kind::kInvalidPoint, "", "tree_path: point outside the forest");
  }
  if (p == q) return PLPath::constant(p);
  PathBuilder path(*g_, p);
  if (!p.is_vertex() && !q.is_vertex() && p.edge() == q.edge()) {
    path.move(p.edge(), p.param(), q.param());
    return path.build();
  }

  std::optional<Rational> best;
  VertexIndex best_u = 0, best_w = 0;
  for (const auto& from : exits(*g_, p)) {
    for (const auto& to : exits(*g_, q)) {
      const std::size_t d = dist_[from.vertex][to.vertex];
      if (d == kNone) continue;
      Rational cost = from.cost + to.cost + Rational(static_cast<unsigned long>(d));
      if (!best || cost < *best) {
        best = cost;
        best_u = from.vertex;
        best_w = to.vertex;
      }
    }
  }
  if (!best) {
    throw GraphError(Kind::kInvalidPoint, "", "tree_path: points lie in different components");
  }
  if (!p.is_vertex()) path.move_to(p.edge(), best_u == g_->edge(p.edge()).v0 ? 0 : 1);
  for (VertexIndex u = best_u; u != best_w;) {
    const EdgeIndex e = next_edge_[u][best_w];
    const VertexIndex next = g_->opposite(e, u);
    path.move_to(e, g_->edge(e).v0 == next ? 0 : 1);
    u = next;
  }
  if (!q.is_vertex()) path.move_to(q.edge(), q.param());
  return path.build();
}

PLPath tree_path(const MultiGraph& g, const EdgeSubset& forest, const GraphPoint& p,
                 const GraphPoint& q) {
  return TreeRouter(std::make_shared<const MultiGraph>(g), forest).route(p, q);
}

std::size_t cat_graph(const MultiGraph& g) {
  require_connected(g, "cat_graph");
  return betti1(g) == 0 ? 0 : 1;
}

std::size_t tc_graph(const MultiGraph& g) {
  require_connected(g, "tc_graph");
  return std::min<std::size_t>(betti1(g), 2);
}

// ---------------------------------------------------------------------------
// DistanceTable

DistanceTable::DistanceTable(const MultiGraph& g) : g_(&g) {
  const std::size_t n = g.vertex_count();
  const double inf = std::numeric_limits<double>::infinity();
  vertex_dist_.assign(n, std::vector<double>(n, inf));
  std::deque<VertexIndex> queue;
  for (VertexIndex s = 0; s < n; ++s) {
    vertex_dist_[s][s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (EdgeIndex e : g.incident(v)) {
        const VertexIndex u = g.opposite(e, v);
        if (vertex_dist_[s][u] != inf) continue;
        vertex_dist_[s][u] = vertex_dist_[s][v] + 1;
        queue.push_back(u);
      }
    }
  }
}

double DistanceTable::distance(const GraphPoint& p, const GraphPoint& q) const {
  return distance(locate(p), locate(q));
}

DistanceTable::Location DistanceTable::locate(const GraphPoint& p) {
  if (p.is_vertex()) return {false, p.vertex(), 0};
  return {true, p.edge(), to_double(p.param())};
}

double DistanceTable::distance(const Location& p, const Location& q) const {
  double best = std::numeric_limits<double>::infinity();
  if (p.on_edge && q.on_edge && p.index == q.index) best = std::abs(p.t - q.t);
  // Each point leaves through at most two vertices.
  const auto ends = [&](const Location& l, VertexIndex* v, double* cost) {
    if (!l.on_edge) {
      v[0] = l.index;
      cost[0] = 0;
      return 1;
    }
    v[0] = g_->edge(l.index).v0;
    cost[0] = l.t;
    v[1] = g_->edge(l.index).v1;
    cost[1] = 1 - l.t;
    return 2;
  };
  VertexIndex pv[2], qv[2];
  double pc[2], qc[2];
  const int np = ends(p, pv, pc);
  const int nq = ends(q, qv, qc);
  for (int a = 0; a < np; ++a) {
    for (int b = 0; b < nq; ++b) best = std::min(best, pc[a] + vertex_dist_[pv[a]][qv[b]] + qc[b]);
  }
  return best;
}

std::vector<DistanceTable::Location> DistanceTable::sample(const PLPath& path, std::size_t n) const {
  std::vector<Location> out;
  out.reserve(n);
  if (path.is_constant()) {
    out.assign(n, locate(path.start()));
    return out;
  }
  std::vector<double> from, to;
  double total = 0;
  for (const auto& s : path.steps()) {
    from.push_back(to_double(s.from));
    to.push_back(to_double(s.to));
    total += std::abs(to.back() - from.back());
  }
  const auto& steps = path.steps();
  std::size_t i = 0;
  double done = 0;  // arclength before step i
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      out.push_back(locate(path.start()));
      continue;
    }
    if (k + 1 == n) {
      out.push_back(locate(path.end()));
      continue;
    }
    const double target = total * static_cast<double>(k) / static_cast<double>(n - 1);
    while (i + 1 < steps.size() && done + std::abs(to[i] - from[i]) < target) {
      done += std::abs(to[i] - from[i]);
      ++i;
    }
    const double along = target - done;
    const double t = to[i] > from[i] ? from[i] + along : from[i] - along;
    out.push_back({true, steps[i].edge, std::clamp(t, 0.0, 1.0)});
  }
  return out;
}

}  // namespace wildcat
