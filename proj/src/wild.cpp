#include "wildcat/wild.hpp"

#include <algorithm>
#include <numeric>

#include "wildcat/graph_algorithms.hpp"

namespace wildcat {

namespace {

struct Piece {
  ExprPtr expr;
  bool on_base;  // lives on a subgraph of the expression's own base
};

std::vector<Piece> wild_pieces(const SpaceExpr& e);

std::string family_name(const Node& n, std::size_t i) {
  return "seqfam " + std::to_string(i) + " over '" + n.base_name + "'";
}

std::string point_text(const PointRef& p) {
  return p.on_edge ? "(edge " + p.id + " " + to_string(p.t) + ")" : "(vertex " + p.id + ")";
}

// Whether `anchor`, written against `pattern_base`, lies in the piece.
bool anchor_in_piece(const PointRef& anchor, const MultiGraph& pattern_base, const Node& piece) {
  const GraphPoint p = anchor.resolve(pattern_base);
  if (p.is_vertex()) return piece.base->find_vertex(pattern_base.vertex_id(p.vertex())).has_value();
  return piece.base->find_edge(pattern_base.edge_id(p.edge())).has_value();
}

// Connected components of the union of the contributed subcomplexes.
struct Contribution {
  Subcomplex k;
  std::optional<SeqFamily> family;  // set when the pattern's wild set is non-empty
};

std::vector<Piece> merge_on_base(const Node& n, const std::vector<Contribution>& parts) {
  const MultiGraph& g = *n.base;
  std::vector<bool> vin(g.vertex_count(), false), ein(g.edge_count(), false);
  for (const auto& c : parts) {
    for (VertexIndex v : c.k.closure_vertices(g)) vin[v] = true;
    for (EdgeIndex e : c.k.edges) ein[e] = true;
  }
  std::vector<std::size_t> comp(g.vertex_count());
  std::iota(comp.begin(), comp.end(), 0);
  const auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (ein[e]) comp[find(g.edge(e).v0)] = find(g.edge(e).v1);
  }
  std::vector<std::size_t> roots;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (vin[v] && find(v) == v) roots.push_back(v);
  }
  // Order components by their smallest vertex.
  std::vector<std::pair<VertexIndex, std::size_t>> order;
  for (std::size_t r : roots) {
    VertexIndex smallest = g.vertex_count();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (vin[v] && find(v) == r) smallest = std::min(smallest, v);
    }
    order.emplace_back(smallest, r);
  }
  std::sort(order.begin(), order.end());

  std::vector<Piece> out;
  for (std::size_t c = 0; c < order.size(); ++c) {
    const std::size_t root = order[c].second;
    Subcomplex whole;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (vin[v] && find(v) == root) whole.vertices.push_back(v);
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (ein[e] && find(g.edge(e).v0) == root) whole.edges.push_back(e);
    }
    auto base = std::make_shared<const MultiGraph>(subcomplex_graph(g, whole));
    std::vector<SeqFamily> families;
    for (const auto& part : parts) {
      if (!part.family) continue;
      std::vector<std::string> ids;
      for (VertexIndex v : part.k.vertices) {
        if (find(v) == root) ids.push_back(g.vertex_id(v));
      }
      for (EdgeIndex e : part.k.edges) {
        if (find(g.edge(e).v0) == root) ids.push_back(g.edge_id(e));
      }
      if (ids.empty()) continue;
      families.push_back({make_subcomplex(*base, ids), part.family->pattern, part.family->anchor});
    }
    std::string name = "w(" + n.base_name + ")";
    if (order.size() > 1) name += "#" + std::to_string(c);
    out.push_back({make_node(std::move(name), std::move(base), {}, std::move(families)), true});
  }
  return out;
}

std::vector<Piece> wild_pieces(const SpaceExpr& e) {
  if (e.is_self_wild()) return {{make_self_wild(), true}};
  if (e.is_zero_dim_wild()) {
    throw AtomError("the wild set of zerodimwild has no symbolic representation");
  }
  const Node& n = *e.node();
  std::vector<Contribution> parts;
  for (std::size_t i = 0; i < n.seq.size(); ++i) {
    const SeqFamily& s = n.seq[i];
    if (!contains_scc(*s.pattern)) continue;
    if (s.pattern->is_zero_dim_wild()) {
      throw UnstableExpressionError(family_name(n, i) + ": zerodimwild pattern has a disconnected wild set");
    }
    const auto inner = wild_pieces(*s.pattern);
    if (inner.empty()) {
      parts.push_back({s.k, std::nullopt});
    } else if (inner.size() == 1) {
      parts.push_back({s.k, SeqFamily{s.k, inner[0].expr, s.anchor}});
    } else {
      throw UnstableExpressionError(family_name(n, i) + ": the wild set of the pattern has " +
                                    std::to_string(inner.size()) + " pieces");
    }
  }
  std::vector<Piece> out = merge_on_base(n, parts);
  for (const auto& a : n.fin) {
    for (auto& p : wild_pieces(*a.child)) out.push_back({std::move(p.expr), false});
  }
  return out;
}

Stability check_stable(const SpaceExpr& e) {
  if (e.is_self_wild()) return {};
  if (e.is_zero_dim_wild()) return {false, "handled by the zero-dimensional special case"};
  const Node& n = *e.node();
  for (std::size_t i = 0; i < n.fin.size(); ++i) {
    const auto& child = *n.fin[i].child;
    if (child.is_zero_dim_wild()) {
      return {false, "attachment " + std::to_string(i) + " on '" + n.base_name +
                         "': zerodimwild is only handled as a whole space"};
    }
    auto s = check_stable(child);
    if (!s.stable) return {false, "attachment " + std::to_string(i) + " on '" + n.base_name + "': " + s.diagnostic};
  }
  for (std::size_t i = 0; i < n.seq.size(); ++i) {
    const SeqFamily& f = n.seq[i];
    if (f.pattern->is_zero_dim_wild()) {
      return {false, family_name(n, i) + ": zerodimwild is only handled as a whole space"};
    }
    auto s = check_stable(*f.pattern);
    if (!s.stable) return {false, family_name(n, i) + ": " + s.diagnostic};
    if (contains_self_wild(*f.pattern)) continue;  // vacuous: the rank is infinite
    std::vector<Piece> w;
    try {
      w = wild_pieces(*f.pattern);
    } catch (const UnstableExpressionError& err) {
      return {false, family_name(n, i) + ": " + err.what()};
    }
    if (w.empty()) continue;
    if (w.size() != 1) {
      return {false, family_name(n, i) + ": the wild set of the pattern has " + std::to_string(w.size()) +
                         " pieces, so copies accumulate without touching it"};
    }
    if (!w[0].on_base || !anchor_in_piece(f.anchor, *f.pattern->node()->base, *w[0].expr->node())) {
      return {false, family_name(n, i) + ": anchor " + point_text(f.anchor) +
                         " is not in the wild set of the pattern"};
    }
  }
  std::vector<Piece> w;
  try {
    w = wild_pieces(e);
  } catch (const UnstableExpressionError& err) {
    return {false, err.what()};
  }
  for (const auto& p : w) {
    auto s = check_stable(*p.expr);
    if (!s.stable) return {false, "in w('" + n.base_name + "'): " + s.diagnostic};
  }
  return {};
}

ExtNat level_betti1(const std::vector<ExprPtr>& level) {
  std::size_t total = 0;
  for (const auto& p : level) {
    const ExtNat b = betti1_expr(*p);
    if (b.is_infinite()) return b;
    total += *b;
  }
  return ExtNat::of(total);
}

void require_path_connected(const SpaceExpr& e) {
  if (const Node* n = e.node()) require_connected(*n->base, "space expression");
}

}  // namespace

std::string to_string(SccClass c) {
  switch (c) {
    case SccClass::kNone:
      return "none";
    case SccClass::kOne:
      return "one";
    case SccClass::kMany:
      return "many";
  }
  return "";
}

SccClass scc_class_of(const ExtNat& top_b1) {
  if (top_b1.is_infinite() || *top_b1 >= 2) return SccClass::kMany;
  return *top_b1 == 0 ? SccClass::kNone : SccClass::kOne;
}

Stability is_w_stable(const SpaceExpr& e) { return check_stable(e); }

bool contains_scc(const SpaceExpr& e) {
  const Node* n = e.node();
  if (!n) return true;
  if (betti1(*n->base) > 0) return true;
  for (const auto& a : n->fin) {
    if (contains_scc(*a.child)) return true;
  }
  for (const auto& s : n->seq) {
    if (contains_scc(*s.pattern)) return true;
  }
  return false;
}

ExtNat betti1_expr(const SpaceExpr& e) {
  const Node* n = e.node();
  if (!n) return ExtNat::infinite();
  std::size_t total = betti1(*n->base);
  for (const auto& s : n->seq) {
    if (contains_scc(*s.pattern)) return ExtNat::infinite();
  }
  for (const auto& a : n->fin) {
    const ExtNat b = betti1_expr(*a.child);
    if (b.is_infinite()) return b;
    total += *b;
  }
  return ExtNat::of(total);
}

std::vector<ExprPtr> wild_set(const SpaceExpr& e) {
  if (!e.is_zero_dim_wild()) {
    const Stability s = check_stable(e);
    if (!s.stable) throw UnstableExpressionError(s.diagnostic);
  }
  std::vector<ExprPtr> out;
  for (auto& p : wild_pieces(e)) out.push_back(std::move(p.expr));
  return out;
}

WildProfile profile(const SpaceExpr& e) {
  require_path_connected(e);
  WildProfile p;
  const Stability s = check_stable(e);
  p.stable = s.stable;
  p.diagnostic = s.diagnostic;

  if (e.is_zero_dim_wild()) {
    p.tower = {{ExtNat::of(1), ExtNat::infinite(), {}}, {ExtNat::infinite(), ExtNat::of(0), {}}};
    p.wrk = ExtNat::of(2);
    p.top_b1 = ExtNat::of(0);
    p.scc = SccClass::kNone;
    return p;
  }
  const bool self_similar = contains_self_wild(e);
  if (!self_similar && !s.stable) throw UnstableExpressionError(s.diagnostic);

  std::vector<ExprPtr> level{std::make_shared<const SpaceExpr>(e)};
  while (!level.empty()) {
    p.tower.push_back({ExtNat::of(level.size()), level_betti1(level), level});
    const bool fixed = std::all_of(level.begin(), level.end(), [](const ExprPtr& x) { return x->is_self_wild(); });
    if (fixed) break;
    std::vector<ExprPtr> next;
    try {
      for (const auto& piece : level) {
        for (auto& w : wild_pieces(*piece)) next.push_back(std::move(w.expr));
      }
    } catch (const Error&) {
      if (!self_similar) throw;
      break;  // the rank is infinite either way
    }
    level = std::move(next);
  }
  if (self_similar) {
    p.wrk = ExtNat::infinite();
    p.top_b1 = ExtNat::infinite();
  } else {
    p.wrk = ExtNat::of(p.tower.size());
    p.top_b1 = p.tower.back().betti1;
  }
  p.scc = scc_class_of(p.top_b1);
  return p;
}

ExtNat wrk(const SpaceExpr& e) { return profile(e).wrk; }

ExtNat cat_of(const WildProfile& p, const SpaceExpr& e) {
  if (e.is_zero_dim_wild()) return ExtNat::of(1);
  if (p.wrk.is_infinite()) return ExtNat::infinite();
  const std::size_t n = *p.wrk;
  return ExtNat::of(p.scc == SccClass::kNone ? n - 1 : n);
}

ExtNat tc_of(const WildProfile& p, const SpaceExpr& e) {
  if (e.is_zero_dim_wild()) return ExtNat::of(2);
  if (p.wrk.is_infinite()) return ExtNat::infinite();
  const std::size_t n = *p.wrk;
  switch (p.scc) {
    case SccClass::kNone:
      return ExtNat::of(2 * n - 2);
    case SccClass::kOne:
      return ExtNat::of(2 * n - 1);
    case SccClass::kMany:
      break;
  }
  return ExtNat::of(2 * n);
}

ExtNat cat(const SpaceExpr& e) { return cat_of(profile(e), e); }
ExtNat tc(const SpaceExpr& e) { return tc_of(profile(e), e); }

}  // namespace wildcat
