#include "wildcat/space_expr.hpp"

#include <algorithm>

namespace wildcat {

using Kind = GraphError::Kind;

GraphPoint PointRef::resolve(const MultiGraph& g) const {
  if (!on_edge) {
    auto v = g.find_vertex(id);
    if (!v) throw GraphError(Kind::kUnknownIdentifier, id, "unknown vertex '" + id + "'");
    return GraphPoint::at_vertex(*v);
  }
  auto e = g.find_edge(id);
  if (!e) throw GraphError(Kind::kUnknownIdentifier, id, "unknown edge '" + id + "'");
  return GraphPoint::on_edge(g, *e, t);
}

std::vector<VertexIndex> Subcomplex::closure_vertices(const MultiGraph& g) const {
  std::vector<VertexIndex> out = vertices;
  for (EdgeIndex e : edges) {
    out.push_back(g.edge(e).v0);
    out.push_back(g.edge(e).v1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subcomplex make_subcomplex(const MultiGraph& g, const std::vector<std::string>& ids) {
  Subcomplex k;
  for (const auto& id : ids) {
    if (auto v = g.find_vertex(id)) {
      k.vertices.push_back(*v);
    } else if (auto e = g.find_edge(id)) {
      k.edges.push_back(*e);
    } else {
      throw GraphError(Kind::kUnknownIdentifier, id, "unknown vertex or edge '" + id + "'");
    }
  }
  for (auto* list : {&k.vertices, &k.edges}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return k;
}

std::vector<std::string> subcomplex_ids(const MultiGraph& g, const Subcomplex& k) {
  std::vector<std::string> ids;
  for (VertexIndex v : k.vertices) ids.push_back(g.vertex_id(v));
  for (EdgeIndex e : k.edges) ids.push_back(g.edge_id(e));
  return ids;
}

MultiGraph subcomplex_graph(const MultiGraph& g, const Subcomplex& k) {
  GraphSpec spec;
  for (VertexIndex v : k.closure_vertices(g)) spec.vertices.push_back(g.vertex_id(v));
  for (EdgeIndex e : k.edges) {
    spec.edges.push_back({g.edge_id(e), g.vertex_id(g.edge(e).v0), g.vertex_id(g.edge(e).v1)});
  }
  return MultiGraph::build(spec);
}

ExprPtr make_node(std::string base_name, std::shared_ptr<const MultiGraph> base,
                  std::vector<Attachment> fin, std::vector<SeqFamily> seq) {
  if (!base || base->vertex_count() == 0) {
    throw GraphError(Kind::kInvalidPoint, base_name, "base graph '" + base_name + "' is empty");
  }
  for (const auto& a : fin) {
    a.at.resolve(*base);
    if (const Node* child = a.child->node()) a.anchor.resolve(*child->base);
  }
  for (const auto& s : seq) {
    if (s.k.empty()) {
      throw GraphError(Kind::kUnknownIdentifier, base_name, "sequence family with an empty subcomplex");
    }
    for (VertexIndex v : s.k.vertices) {
      if (v >= base->vertex_count()) throw GraphError(Kind::kUnknownIdentifier, "", "subcomplex vertex out of range");
    }
    for (EdgeIndex e : s.k.edges) {
      if (e >= base->edge_count()) throw GraphError(Kind::kUnknownIdentifier, "", "subcomplex edge out of range");
    }
    if (const Node* pattern = s.pattern->node()) s.anchor.resolve(*pattern->base);
  }
  return std::make_shared<const SpaceExpr>(
      SpaceExpr{Node{std::move(base_name), std::move(base), std::move(fin), std::move(seq)}});
}

ExprPtr make_graph_expr(std::string name, std::shared_ptr<const MultiGraph> base) {
  return make_node(std::move(name), std::move(base));
}

ExprPtr make_self_wild() { return std::make_shared<const SpaceExpr>(SpaceExpr{SelfWild{}}); }
ExprPtr make_zero_dim_wild() { return std::make_shared<const SpaceExpr>(SpaceExpr{ZeroDimWild{}}); }

bool structurally_equal(const SpaceExpr& a, const SpaceExpr& b) {
  if (a.value.index() != b.value.index()) return false;
  const Node* x = a.node();
  const Node* y = b.node();
  if (!x) return true;
  if (x->base_name != y->base_name || !(*x->base == *y->base)) return false;
  if (x->fin.size() != y->fin.size() || x->seq.size() != y->seq.size()) return false;
  for (std::size_t i = 0; i < x->fin.size(); ++i) {
    const auto& p = x->fin[i];
    const auto& q = y->fin[i];
    if (!(p.at == q.at) || !(p.anchor == q.anchor) || !structurally_equal(*p.child, *q.child)) return false;
  }
  for (std::size_t i = 0; i < x->seq.size(); ++i) {
    const auto& p = x->seq[i];
    const auto& q = y->seq[i];
    if (!(p.k == q.k) || !(p.anchor == q.anchor) || !structurally_equal(*p.pattern, *q.pattern)) return false;
  }
  return true;
}

namespace {

template <class Pred>
bool any_subexpr(const SpaceExpr& e, Pred pred) {
  if (pred(e)) return true;
  const Node* n = e.node();
  if (!n) return false;
  for (const auto& a : n->fin) {
    if (any_subexpr(*a.child, pred)) return true;
  }
  for (const auto& s : n->seq) {
    if (any_subexpr(*s.pattern, pred)) return true;
  }
  return false;
}

}  // namespace

bool contains_self_wild(const SpaceExpr& e) {
  return any_subexpr(e, [](const SpaceExpr& x) { return x.is_self_wild(); });
}

bool contains_zero_dim_wild(const SpaceExpr& e) {
  return any_subexpr(e, [](const SpaceExpr& x) { return x.is_zero_dim_wild(); });
}

std::size_t seq_depth(const SpaceExpr& e) {
  const Node* n = e.node();
  if (!n) return 0;
  std::size_t depth = 0;
  for (const auto& a : n->fin) depth = std::max(depth, seq_depth(*a.child));
  for (const auto& s : n->seq) depth = std::max(depth, 1 + seq_depth(*s.pattern));
  return depth;
}

}  // namespace wildcat
