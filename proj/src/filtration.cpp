#include "wildcat/filtration.hpp"

#include <numeric>

#include "wildcat/graph_algorithms.hpp"

namespace wildcat {

namespace {

struct Forest {
  std::vector<std::size_t> parent;
  explicit Forest(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Open cells of g in a fixed order: vertices first, then edge interiors.
std::vector<GraphPoint> representatives(const MultiGraph& g) {
  std::vector<GraphPoint> reps;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) reps.push_back(GraphPoint::at_vertex(v));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    reps.push_back(GraphPoint::on_edge(g, e, ratio(1, 2)));
  }
  return reps;
}

// The open cell itself and the vertices in its closure.
std::vector<GraphPoint> faces(const MultiGraph& g, const GraphPoint& rep) {
  if (rep.is_vertex()) return {rep};
  const auto& e = g.edge(rep.edge());
  return {rep, GraphPoint::at_vertex(e.v0), GraphPoint::at_vertex(e.v1)};
}

std::string pair_text(const MultiGraph& gx, const GraphPoint& x, const MultiGraph& gy,
                      const GraphPoint& y) {
  return "(" + format_point(gx, x) + ", " + format_point(gy, y) + ")";
}

void fail(bool& flag, std::string& witness, const std::string& text) {
  if (flag && witness.empty()) witness = text;
  flag = false;
}

}  // namespace

std::size_t GraphFiltration::level_of(const GraphPoint& p) const {
  for (std::size_t j = 0; j < levels.size(); ++j) {
    for (const auto& cell : levels[j]) {
      if (cell.contains(*graph, p)) return j;
    }
  }
  return levels.size();
}

GraphFiltration cat_filtration(const MultiGraph& g) {
  require_connected(g, "cat_filtration");
  GraphFiltration f{std::make_shared<const MultiGraph>(g), {}};
  EdgeSubset all(g.edge_count());
  std::iota(all.begin(), all.end(), EdgeIndex{0});
  if (betti1(g) > 0) f.levels.push_back(closed_cells(g, spanning_forest(g), true));
  f.levels.push_back(closed_cells(g, all, true));
  return f;
}

FiltrationCheck check_cat_filtration(const GraphFiltration& f) {
  FiltrationCheck out;
  if (!f.graph || f.levels.empty()) {
    fail(out.covers, out.witness, "filtration has no levels");
    return out;
  }
  const MultiGraph& g = *f.graph;
  for (const auto& level : f.levels) {
    for (const auto& cell : level) {
      const std::size_t bound = cell.kind == Cell::Kind::kVertex ? g.vertex_count() : g.edge_count();
      if (cell.index >= bound) {
        fail(out.closed, out.witness, "cell index out of range");
      } else if (cell.kind == Cell::Kind::kOpenEdge) {
        fail(out.closed, out.witness, "open edge " + g.edge_id(cell.index));
      } else if (cell.kind == Cell::Kind::kSubArc) {
        fail(out.closed, out.witness, "sub-arc of " + g.edge_id(cell.index) + " is not a subcomplex");
      }
    }
  }
  if (!out.closed) return out;

  const auto reps = representatives(g);
  std::vector<std::size_t> level(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    level[c] = f.level_of(reps[c]);
    if (level[c] == f.levels.size()) {
      fail(out.covers, out.witness, "uncovered " + format_point(g, reps[c]));
      continue;
    }
    for (std::size_t j = level[c] + 1; j < f.levels.size(); ++j) {
      bool inside = false;
      for (const auto& cell : f.levels[j]) inside = inside || cell.contains(g, reps[c]);
      if (!inside) fail(out.nested, out.witness, format_point(g, reps[c]) + " leaves F_" + std::to_string(j));
    }
  }

  const std::size_t nv = g.vertex_count();
  for (std::size_t j = 0; j < f.levels.size(); ++j) {
    Forest forest(nv);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (level[nv + e] != j) continue;
      const auto& edge = g.edge(e);
      if (level[edge.v0] != j || level[edge.v1] != j) continue;  // an arc hanging off the piece
      if (!forest.unite(edge.v0, edge.v1)) {
        fail(out.categorical, out.witness,
             "difference " + std::to_string(j) + " contains a cycle through " + g.edge_id(e));
      }
    }
  }
  return out;
}

ProductFiltration product_cat_filtration(const GraphFiltration& f, const GraphFiltration& g) {
  for (const auto* factor : {&f, &g}) {
    const auto check = check_cat_filtration(*factor);
    if (!check.ok()) throw FiltrationError("malformed factor filtration: " + check.witness);
  }
  ProductFiltration h{f, g, {}, {}};
  const std::size_t n = f.length() + g.length();
  for (std::size_t k = 0; k <= n; ++k) {
    Region level;
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    for (std::size_t i = 0; i <= f.length(); ++i) {
      if (k < i || k - i > g.length()) continue;
      level = level.united(Region::product(f.levels[i], g.levels[k - i]));
      pieces.emplace_back(i, k - i);
    }
    h.levels.push_back(std::move(level));
    h.pieces.push_back(std::move(pieces));
  }
  return h;
}

FiltrationCheck check_product_filtration(const ProductFiltration& h) {
  FiltrationCheck out;
  if (h.levels.empty()) {
    fail(out.covers, out.witness, "filtration has no levels");
    return out;
  }
  for (std::size_t k = 0; k < h.levels.size(); ++k) {
    if (!h.levels[k].closed()) fail(out.closed, out.witness, "H_" + std::to_string(k) + " is not closed");
  }
  for (const auto* factor : {&h.first, &h.second}) {
    const auto check = check_cat_filtration(*factor);
    if (!check.categorical) fail(out.categorical, out.witness, "factor: " + check.witness);
    if (!check.ok() && out.witness.empty()) out.witness = "factor: " + check.witness;
    out.closed = out.closed && check.closed;
  }
  if (!out.ok()) return out;

  const MultiGraph& gx = *h.first.graph;
  const MultiGraph& gy = *h.second.graph;
  const auto xs = representatives(gx);
  const auto ys = representatives(gy);
  for (const auto& x : xs) {
    const std::size_t i = h.first.level_of(x);
    for (const auto& y : ys) {
      const std::size_t j = h.second.level_of(y);
      std::size_t first_hit = h.levels.size();
      for (std::size_t k = 0; k < h.levels.size(); ++k) {
        const bool in = h.levels[k].contains(gx, gy, x, y);
        if (in && first_hit == h.levels.size()) first_hit = k;
        if (!in && first_hit < k) fail(out.nested, out.witness, pair_text(gx, x, gy, y));
      }
      if (first_hit == h.levels.size()) {
        fail(out.covers, out.witness, "uncovered " + pair_text(gx, x, gy, y));
      } else if (first_hit != i + j) {
        fail(out.levels_match, out.witness, pair_text(gx, x, gy, y) + " enters at level " +
                                                std::to_string(first_hit));
      }
      // The closure of the (i, j) piece must stay in F_i x G_j.
      for (const auto& fx : faces(gx, x)) {
        for (const auto& fy : faces(gy, y)) {
          if (h.first.level_of(fx) > i || h.second.level_of(fy) > j) {
            fail(out.categorical, out.witness, "pieces not separated at " + pair_text(gx, fx, gy, fy));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace wildcat
