#include "wildcat/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace wildcat {

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
           c == ':' || c == '#';
  });
}

MultiGraph MultiGraph::build(const GraphSpec& spec) {
  using Kind = GraphError::Kind;
  MultiGraph g;

  std::map<std::string, VertexIndex, std::less<>> vertex_lookup;
  for (const auto& v : spec.vertices) {
    if (!is_valid_identifier(v)) {
      throw GraphError(Kind::kInvalidIdentifier, v, "invalid vertex identifier '" + v + "'");
    }
    if (!vertex_lookup.emplace(v, 0).second) {
      throw GraphError(Kind::kDuplicateIdentifier, v, "duplicate identifier '" + v + "'");
    }
  }
  VertexIndex next = 0;
  for (auto& [id, index] : vertex_lookup) {
    index = next++;
    g.vertex_ids_.push_back(id);
  }

  std::vector<const EdgeSpec*> sorted_edges;
  sorted_edges.reserve(spec.edges.size());
  for (const auto& e : spec.edges) sorted_edges.push_back(&e);
  std::sort(sorted_edges.begin(), sorted_edges.end(),
            [](const EdgeSpec* a, const EdgeSpec* b) { return a->id < b->id; });

  for (std::size_t i = 0; i < sorted_edges.size(); ++i) {
    const EdgeSpec& e = *sorted_edges[i];
    if (!is_valid_identifier(e.id)) {
      throw GraphError(Kind::kInvalidIdentifier, e.id, "invalid edge identifier '" + e.id + "'");
    }
    if ((i > 0 && sorted_edges[i - 1]->id == e.id) || vertex_lookup.count(e.id) != 0) {
      throw GraphError(Kind::kDuplicateIdentifier, e.id, "duplicate identifier '" + e.id + "'");
    }
    for (const auto* endpoint : {&e.v0, &e.v1}) {
      if (vertex_lookup.count(*endpoint) == 0) {
        throw GraphError(Kind::kDanglingEndpoint, *endpoint,
                         "dangling endpoint '" + *endpoint + "' on edge '" + e.id + "'");
      }
    }
    g.edge_ids_.push_back(e.id);
    g.edges_.push_back({vertex_lookup.find(e.v0)->second, vertex_lookup.find(e.v1)->second});
  }

  g.incidence_.assign(g.vertex_count(), {});
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    g.incidence_[g.edges_[e].v0].push_back(e);
    g.incidence_[g.edges_[e].v1].push_back(e);
  }

  // Components by iterative flood fill.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  g.component_.assign(g.vertex_count(), kUnset);
  std::vector<VertexIndex> stack;
  for (VertexIndex root = 0; root < g.vertex_count(); ++root) {
    if (g.component_[root] != kUnset) continue;
    const std::size_t label = g.component_count_++;
    g.component_[root] = label;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incidence_[v]) {
        const VertexIndex w = g.opposite(e, v);
        if (g.component_[w] == kUnset) {
          g.component_[w] = label;
          stack.push_back(w);
        }
      }
    }
  }
  return g;
}

std::optional<VertexIndex> MultiGraph::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - vertex_ids_.begin());
}

std::optional<EdgeIndex> MultiGraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
  if (it == edge_ids_.end() || *it != id) return std::nullopt;
  return static_cast<EdgeIndex>(it - edge_ids_.begin());
}

GraphSpec MultiGraph::spec() const {
  GraphSpec out;
  out.vertices = vertex_ids_;
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    out.edges.push_back({edge_ids_[e], vertex_ids_[edges_[e].v0], vertex_ids_[edges_[e].v1]});
  }
  return out;
}

bool MultiGraph::same_endpoints(const MultiGraph& other) const {
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].v0 != other.edges_[i].v0 || edges_[i].v1 != other.edges_[i].v1) return false;
  }
  return true;
}

void require_connected(const MultiGraph& g, std::string_view operation) {
  if (!g.connected()) {
    throw GraphError(GraphError::Kind::kDisconnected, "",
                     std::string(operation) + ": disconnected input (" +
                         std::to_string(g.component_count()) + " components)");
  }
}

// ---------------------------------------------------------------------------
// GraphPoint

GraphPoint GraphPoint::on_edge(const MultiGraph& g, EdgeIndex e, const Rational& t) {
  if (e >= g.edge_count()) {
    throw GraphError(GraphError::Kind::kInvalidPoint, "", "edge index out of range");
  }
  if (t < 0 || t > 1) {
    throw GraphError(GraphError::Kind::kInvalidPoint, g.edge_id(e),
                     "edge parameter " + to_string(t) + " outside [0,1]");
  }
  if (t == 0) return GraphPoint(g.edge(e).v0);
  if (t == 1) return GraphPoint(g.edge(e).v1);
  Rational reduced = t;
  reduced.canonicalize();
  return GraphPoint(e, std::move(reduced));
}

bool GraphPoint::on_closed_edge(const MultiGraph& g, EdgeIndex e) const {
  if (on_edge_) return index_ == e;
  return g.edge(e).v0 == index_ || g.edge(e).v1 == index_;
}

std::optional<Rational> GraphPoint::param_along(const MultiGraph& g, EdgeIndex e) const {
  if (on_edge_) {
    if (index_ != e) return std::nullopt;
    return param_;
  }
  if (g.edge(e).v0 == index_) return Rational(0);
  if (g.edge(e).v1 == index_) return Rational(1);
  return std::nullopt;
}

std::string format_point(const MultiGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return "vertex " + g.vertex_id(p.vertex());
  return "edge " + g.edge_id(p.edge()) + " " + to_string(p.param());
}

GraphPoint parse_point(const MultiGraph& g, std::string_view text) {
  using Kind = GraphError::Kind;
  std::string cleaned(text);
  for (char& c : cleaned) {
    if (c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string kind, id, param, extra;
  in >> kind >> id;
  if (kind == "vertex" && !id.empty() && !(in >> extra)) {
    auto v = g.find_vertex(id);
    if (!v) throw GraphError(Kind::kUnknownIdentifier, id, "unknown vertex '" + id + "'");
    return GraphPoint::at_vertex(*v);
  }
  if (kind == "edge" && (in >> param) && !(in >> extra)) {
    auto e = g.find_edge(id);
    if (!e) throw GraphError(Kind::kUnknownIdentifier, id, "unknown edge '" + id + "'");
    Rational t;
    try {
      t = parse_rational(param);
    } catch (const std::invalid_argument& err) {
      throw GraphError(Kind::kInvalidPoint, id, err.what());
    }
    return GraphPoint::on_edge(g, *e, t);
  }
  throw GraphError(Kind::kInvalidPoint, "",
                   "malformed point '" + std::string(text) +
                       "' (expected 'vertex ID' or 'edge ID NUM/DEN')");
}

// ---------------------------------------------------------------------------
// PLPath

PLPath PLPath::constant(GraphPoint p) { return PLPath(p, p, {}); }

PLPath PLPath::from_steps(const MultiGraph& g, const std::vector<PathStep>& steps) {
  if (steps.empty()) {
    throw GraphError(GraphError::Kind::kInvalidPath, "", "a path needs at least one step");
  }
  const GraphPoint start = GraphPoint::on_edge(g, steps.front().edge, steps.front().from);
  PathBuilder builder(g, start);
  for (const auto& s : steps) builder.move(s.edge, s.from, s.to);
  return builder.build();
}

Rational PLPath::length() const {
  Rational total = 0;
  for (const auto& s : steps_) total += s.length();
  return total;
}

GraphPoint PLPath::at(const MultiGraph& g, const Rational& time) const {
  if (time < 0 || time > 1) {
    throw GraphError(GraphError::Kind::kInvalidPath, "", "path time outside [0,1]");
  }
  if (steps_.empty() || time == 0) return start_;
  if (time == 1) return end_;
  Rational remaining = time * length();
  for (const auto& s : steps_) {
    const Rational len = s.length();
    if (remaining <= len) {
      const Rational t = s.to > s.from ? Rational(s.from + remaining) : Rational(s.from - remaining);
      return GraphPoint::on_edge(g, s.edge, t);
    }
    remaining -= len;
  }
  return end_;
}

PLPath PLPath::reversed() const {
  std::vector<PathStep> steps;
  steps.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    steps.push_back({it->edge, it->to, it->from});
  }
  return PLPath(end_, start_, std::move(steps));
}

PLPath PLPath::then(const PLPath& next) const {
  if (!(end_ == next.start_)) {
    throw GraphError(GraphError::Kind::kInvalidPath, "", "concatenated paths do not meet");
  }
  std::vector<PathStep> steps = steps_;
  steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
  return PLPath(start_, next.end_, std::move(steps));
}

// ---------------------------------------------------------------------------
// PathBuilder

PathBuilder& PathBuilder::move(EdgeIndex e, const Rational& from, const Rational& to) {
  if (e >= g_->edge_count() || from < 0 || from > 1 || to < 0 || to > 1) {
    throw GraphError(GraphError::Kind::kInvalidPath, "", "path step out of range");
  }
  if (!(GraphPoint::on_edge(*g_, e, from) == current_)) {
    throw GraphError(GraphError::Kind::kInvalidPath, g_->edge_id(e),
                     "discontinuous path step on edge '" + g_->edge_id(e) + "'");
  }
  if (from == to) return *this;
  steps_.push_back({e, from, to});
  current_ = GraphPoint::on_edge(*g_, e, to);
  return *this;
}

PathBuilder& PathBuilder::move_to(EdgeIndex e, const Rational& to) {
  auto from = current_.param_along(*g_, e);
  if (!from) {
    throw GraphError(GraphError::Kind::kInvalidPath, g_->edge_id(e),
                     "current point is not on edge '" + g_->edge_id(e) + "'");
  }
  if (current_.is_vertex() && g_->edge(e).is_loop()) {
    from = (to == 0) ? Rational(1) : Rational(0);
  }
  return move(e, *from, to);
}

PathBuilder& PathBuilder::append(const PLPath& path) {
  if (!(path.start() == current_)) {
    throw GraphError(GraphError::Kind::kInvalidPath, "", "appended path does not start here");
  }
  for (const auto& s : path.steps()) move(s.edge, s.from, s.to);
  return *this;
}

PLPath PathBuilder::build() const {
  if (steps_.empty()) return PLPath::constant(start_);
  return PLPath(start_, current_, steps_);
}

}  // namespace wildcat
