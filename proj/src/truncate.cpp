#include "wildcat/truncate.hpp"

#include <algorithm>
#include <map>

namespace wildcat {

namespace {

std::string cut_id(const std::string& edge, const Rational& t) {
  return edge + "#" + t.get_num().get_str() + ":" + t.get_den().get_str();
}

class Builder {
 public:
  explicit Builder(std::size_t depth) : depth_(depth) {}

  // Emits e under `prefix` and returns the id of the vertex at `anchor`.
  std::string emit(const SpaceExpr& e, const std::string& prefix, const PointRef& anchor) {
    const Node* n = e.node();
    if (!n) throw AtomError("cannot truncate an expression containing selfwild or zerodimwild");
    const MultiGraph& g = *n->base;

    // Cut parameters per edge, and the vertex every point of interest lands on.
    std::vector<std::vector<Rational>> cuts(g.edge_count());
    const auto note = [&](const GraphPoint& p) {
      if (!p.is_vertex()) cuts[p.edge()].push_back(p.param());
    };
    const GraphPoint anchor_point = anchor.resolve(g);
    note(anchor_point);
    std::vector<GraphPoint> fin_points;
    for (const auto& a : n->fin) {
      fin_points.push_back(a.at.resolve(g));
      note(fin_points.back());
    }
    std::vector<std::vector<GraphPoint>> copy_points(n->seq.size());
    for (std::size_t i = 0; i < n->seq.size(); ++i) {
      copy_points[i] = copy_positions(g, n->seq[i].k);
      for (const auto& p : copy_points[i]) note(p);
    }

    for (VertexIndex v = 0; v < g.vertex_count(); ++v) add_vertex(prefix + g.vertex_id(v));
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      auto& c = cuts[e];
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      const std::string id = prefix + g.edge_id(e);
      const std::string a = prefix + g.vertex_id(g.edge(e).v0);
      const std::string b = prefix + g.vertex_id(g.edge(e).v1);
      if (c.empty()) {
        spec_.edges.push_back({id, a, b});
        continue;
      }
      std::string from = a;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const std::string mid = cut_id(id, c[k]);
        add_vertex(mid);
        spec_.edges.push_back({id + "#" + std::to_string(k), from, mid});
        from = mid;
      }
      spec_.edges.push_back({id + "#" + std::to_string(c.size()), from, b});
    }
    const auto vertex_at = [&](const GraphPoint& p) {
      if (p.is_vertex()) return prefix + g.vertex_id(p.vertex());
      return cut_id(prefix + g.edge_id(p.edge()), p.param());
    };

    for (std::size_t i = 0; i < n->fin.size(); ++i) {
      const auto& a = n->fin[i];
      const std::string child = emit(*a.child, prefix + "f" + std::to_string(i) + ".", a.anchor);
      glue(vertex_at(fin_points[i]), child);
    }
    for (std::size_t i = 0; i < n->seq.size(); ++i) {
      const auto& s = n->seq[i];
      for (std::size_t c = 0; c < copy_points[i].size(); ++c) {
        const std::string copy =
            emit(*s.pattern, prefix + "s" + std::to_string(i) + "." + std::to_string(c) + ".", s.anchor);
        glue(vertex_at(copy_points[i][c]), copy);
      }
    }
    return vertex_at(anchor_point);
  }

  MultiGraph finish() {
    GraphSpec out;
    for (const auto& v : spec_.vertices) {
      if (find(v) == v) out.vertices.push_back(v);
    }
    for (const auto& e : spec_.edges) out.edges.push_back({e.id, find(e.v0), find(e.v1)});
    return MultiGraph::build(out);
  }

 private:
  // Slots are the edges of K and the listed vertices, in id order.
  std::vector<GraphPoint> copy_positions(const MultiGraph& g, const Subcomplex& k) const {
    std::vector<std::pair<std::string, std::pair<bool, std::size_t>>> slots;
    for (VertexIndex v : k.vertices) slots.push_back({g.vertex_id(v), {false, v}});
    for (EdgeIndex e : k.edges) slots.push_back({g.edge_id(e), {true, e}});
    std::sort(slots.begin(), slots.end());
    std::vector<std::size_t> per_slot(slots.size(), 0);
    for (std::size_t j = 0; j < depth_; ++j) ++per_slot[j % slots.size()];
    std::vector<std::size_t> used(slots.size(), 0);
    std::vector<GraphPoint> out;
    for (std::size_t j = 0; j < depth_; ++j) {
      const std::size_t s = j % slots.size();
      const auto [is_edge, index] = slots[s].second;
      if (is_edge) {
        out.push_back(GraphPoint::on_edge(g, index, ratio(static_cast<long>(++used[s]), per_slot[s] + 1)));
      } else {
        out.push_back(GraphPoint::at_vertex(index));
      }
    }
    return out;
  }

  void add_vertex(const std::string& v) {
    spec_.vertices.push_back(v);
    parent_[v] = v;
  }

  std::string find(const std::string& v) {
    std::string r = v;
    while (parent_[r] != r) r = parent_[r];
    parent_[v] = r;
    return r;
  }

  void glue(const std::string& keep, const std::string& drop) {
    const std::string a = find(keep);
    const std::string b = find(drop);
    if (a != b) parent_[b] = a;
  }

  std::size_t depth_;
  GraphSpec spec_;
  std::map<std::string, std::string> parent_;
};

}  // namespace

MultiGraph truncate(const SpaceExpr& e, std::size_t depth) {
  const Node* n = e.node();
  if (!n) throw AtomError("cannot truncate an expression containing selfwild or zerodimwild");
  Builder b(depth);
  b.emit(e, "", PointRef::vertex(n->base->vertex_id(0)));
  return b.finish();
}

}  // namespace wildcat
