#include "wildcat/region.hpp"

#include <algorithm>

namespace wildcat {

namespace {

// Interval of the segment parameter lambda, a subset of [0,1].
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed;
  bool hi_closed;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
};

using IntervalSet = std::vector<Interval>;

const Interval kUnit{0, 1, true, true};

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

bool sets_meet(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (!intersect(x, y).empty()) return true;
    }
  }
  return false;
}

// Pieces of a cell: vertices, plus parameter intervals on one edge restricted
// to the open interior (0,1).
struct CellAtoms {
  std::vector<VertexIndex> vertices;
  std::optional<EdgeIndex> edge;
  Interval params{0, 1, false, false};
};

CellAtoms atoms(const MultiGraph& g, const Cell& cell) {
  CellAtoms out;
  switch (cell.kind) {
    case Cell::Kind::kVertex:
      out.vertices.push_back(cell.index);
      break;
    case Cell::Kind::kClosedEdge:
      out.vertices = {g.edge(cell.index).v0, g.edge(cell.index).v1};
      out.edge = cell.index;
      break;
    case Cell::Kind::kOpenEdge:
      out.edge = cell.index;
      break;
    case Cell::Kind::kSubArc:
      if (cell.lo == 0) out.vertices.push_back(g.edge(cell.index).v0);
      if (cell.hi == 1) out.vertices.push_back(g.edge(cell.index).v1);
      out.edge = cell.index;
      out.params = {cell.lo, cell.hi, cell.lo > 0, cell.hi < 1};
      break;
  }
  return out;
}

// Preimage of a parameter interval under lambda -> t0 + lambda (t1 - t0).
Interval pull_back(const Interval& params, const Rational& t0, const Rational& t1) {
  const Rational slope = t1 - t0;
  Interval out;
  if (slope > 0) {
    out = {(params.lo - t0) / slope, (params.hi - t0) / slope, params.lo_closed, params.hi_closed};
  } else {
    out = {(params.hi - t0) / slope, (params.lo - t0) / slope, params.hi_closed, params.lo_closed};
  }
  return intersect(out, kUnit);
}

IntervalSet lambda_set(const MultiGraph& g, const Cell& cell, const CoordMotion& m) {
  if (!m.edge) {
    if (cell.contains(g, m.start)) return {kUnit};
    return {};
  }
  IntervalSet out;
  const auto cell_atoms = atoms(g, cell);
  const auto& e = g.edge(*m.edge);
  const Rational slope = m.t1 - m.t0;
  for (VertexIndex v : cell_atoms.vertices) {
    for (int end = 0; end < 2; ++end) {
      if ((end == 0 ? e.v0 : e.v1) != v) continue;
      const Rational lambda = (Rational(end) - m.t0) / slope;
      if (lambda >= 0 && lambda <= 1) out.push_back({lambda, lambda, true, true});
    }
  }
  if (cell_atoms.edge && *cell_atoms.edge == *m.edge) {
    Interval pulled = pull_back(cell_atoms.params, m.t0, m.t1);
    if (!pulled.empty()) out.push_back(pulled);
  }
  return out;
}

bool any_contains(const MultiGraph& g, const std::vector<Cell>& cells, const GraphPoint& p) {
  return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.contains(g, p); });
}

IntervalSet lambda_set(const MultiGraph& g, const std::vector<Cell>& cells, const CoordMotion& m) {
  if (!m.edge) return any_contains(g, cells, m.start) ? IntervalSet{kUnit} : IntervalSet{};
  IntervalSet out;
  for (const auto& cell : cells) {
    auto part = lambda_set(g, cell, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Cheap guard against evaluating a region on the wrong graph.
bool same_shape(const MultiGraph& a, const MultiGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count();
}

// Coordinate along the cycle as an affine function of lambda: value at 0 and 1.
std::pair<Rational, Rational> coordinate_ends(const CycleParam& cycle, const CoordMotion& m) {
  if (!m.edge) {
    const Rational c = cycle.coordinate(m.start);
    return {c, c};
  }
  const std::size_t arc = cycle.arc_of(*m.edge);
  return {cycle.arc_coordinate(arc, m.t0), cycle.arc_coordinate(arc, m.t1)};
}

bool shift_meets(const MultiGraph& gx, const MultiGraph& gy, const ShiftPrimitive& shift,
                 const PairMotion& motion) {
  if (!same_shape(shift.cycle->graph(), gx) || !same_shape(shift.cycle->graph(), gy)) {
    throw GraphError(GraphError::Kind::kMismatch, "", "shift region evaluated on another graph");
  }
  const Rational L = shift.cycle->perimeter();
  const auto [x0, x1] = coordinate_ends(*shift.cycle, motion.first);
  const auto [y0, y1] = coordinate_ends(*shift.cycle, motion.second);
  const Rational d0 = y0 - x0;
  const Rational d1 = y1 - x1;
  const Rational lo = std::min(d0, d1);
  const Rational hi = std::max(d0, d1);
  // Is offset + m L in [lo, hi] for some integer m?
  const Rational m = ceil(Rational((lo - shift.offset) / L));
  return shift.offset + m * L <= hi;
}

CoordMotion push_forward(const CollapseHomotopy& h, const CoordMotion& m) {
  if (m.edge) {
    if (auto core_e = h.core_edge(*m.edge)) {
      return CoordMotion{h.to_core(m.start), *core_e, m.t0, m.t1};
    }
  }
  return CoordMotion::stationary(h.retract(m.start));
}

bool primitive_meets(const MultiGraph& gx, const MultiGraph& gy, const Primitive& p,
                     const PairMotion& motion) {
  return std::visit(
      [&](const auto& prim) -> bool {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, BoxPrimitive>) {
          if (!motion.first.edge && !motion.second.edge) {
            return any_contains(gx, prim.first, motion.first.start) &&
                   any_contains(gy, prim.second, motion.second.start);
          }
          const auto a = lambda_set(gx, prim.first, motion.first);
          if (a.empty()) return false;
          return sets_meet(a, lambda_set(gy, prim.second, motion.second));
        } else if constexpr (std::is_same_v<T, ShiftPrimitive>) {
          return shift_meets(gx, gy, prim, motion);
        } else {
          if (!same_shape(prim.map->graph(), gx) || !same_shape(prim.map->graph(), gy)) {
            throw GraphError(GraphError::Kind::kMismatch, "",
                             "preimage region evaluated on another graph");
          }
          const PairMotion pushed{push_forward(*prim.map, motion.first),
                                  push_forward(*prim.map, motion.second)};
          return prim.inner->meets(prim.map->core(), pushed);
        }
      },
      p);
}

bool primitive_closed(const Primitive& p) {
  return std::visit(
      [](const auto& prim) -> bool {
        using T = std::decay_t<decltype(prim)>;
        if constexpr (std::is_same_v<T, BoxPrimitive>) {
          const auto closed = [](const Cell& c) { return c.closed(); };
          return std::all_of(prim.first.begin(), prim.first.end(), closed) &&
                 std::all_of(prim.second.begin(), prim.second.end(), closed);
        } else if constexpr (std::is_same_v<T, ShiftPrimitive>) {
          return true;
        } else {
          return prim.inner->closed();
        }
      },
      p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Cell

Cell Cell::sub_arc(EdgeIndex e, Rational lo, Rational hi) {
  if (lo < 0 || hi > 1 || lo > hi) {
    throw GraphError(GraphError::Kind::kInvalidPoint, "", "sub-arc bounds must satisfy 0<=lo<=hi<=1");
  }
  return {Kind::kSubArc, e, std::move(lo), std::move(hi)};
}

bool Cell::contains(const MultiGraph& g, const GraphPoint& p) const {
  switch (kind) {
    case Kind::kVertex:
      return p.is_vertex() && p.vertex() == index;
    case Kind::kClosedEdge:
      return p.on_closed_edge(g, index);
    case Kind::kOpenEdge:
      return !p.is_vertex() && p.edge() == index;
    case Kind::kSubArc: {
      if (!p.is_vertex()) return p.edge() == index && p.param() >= lo && p.param() <= hi;
      const auto& e = g.edge(index);
      return (lo == 0 && e.v0 == p.vertex()) || (hi == 1 && e.v1 == p.vertex());
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// CycleParam

CycleParam::CycleParam(std::shared_ptr<const MultiGraph> graph) : g_(std::move(graph)) {
  const MultiGraph& g = *g_;
  const bool all_degree_two = [&] {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 2) return false;
    }
    return true;
  }();
  if (g.vertex_count() == 0 || !g.connected() || !all_degree_two) {
    throw GraphError(GraphError::Kind::kNotACycle, "", "graph is not a single cycle");
  }
  arc_of_edge_.assign(g.edge_count(), 0);
  position_of_vertex_.assign(g.vertex_count(), 0);

  VertexIndex v = 0;
  EdgeIndex e = *std::min_element(g.incident(0).begin(), g.incident(0).end());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    position_of_vertex_[v] = k;
    const bool forward = g.edge(e).v0 == v;
    arcs_.push_back({e, forward});
    arc_of_edge_[e] = k;
    v = forward ? g.edge(e).v1 : g.edge(e).v0;
    if (k + 1 == g.edge_count()) break;
    // Leave v through its other incidence.
    const auto inc = g.incident(v);
    e = inc[0] == e ? inc[1] : inc[0];
  }
}

Rational CycleParam::arc_coordinate(std::size_t arc, const Rational& t) const {
  const Rational base(static_cast<unsigned long>(arc));
  return arcs_[arc].forward ? Rational(base + t) : Rational(base + 1 - t);
}

Rational CycleParam::coordinate(const GraphPoint& p) const {
  if (p.is_vertex()) return Rational(static_cast<unsigned long>(position_of_vertex_[p.vertex()]));
  return arc_coordinate(arc_of_edge_[p.edge()], p.param());
}

GraphPoint CycleParam::point_at(const Rational& coordinate) const {
  const Rational L = perimeter();
  Rational c = coordinate - L * floor(Rational(coordinate / L));
  const Rational k = floor(c);
  const Rational frac = c - k;
  const std::size_t arc = static_cast<std::size_t>(k.get_num().get_ui());
  const Arc& a = arcs_[arc];
  if (frac == 0) {
    const auto& edge = g_->edge(a.edge);
    return GraphPoint::at_vertex(a.forward ? edge.v0 : edge.v1);
  }
  return GraphPoint::on_edge(*g_, a.edge, a.forward ? frac : Rational(1 - frac));
}

PLPath CycleParam::walk(const GraphPoint& p, const Rational& distance) const {
  PathBuilder path(*g_, p);
  const Rational L = perimeter();
  Rational c = coordinate(p);
  Rational remaining = abs(distance);
  const bool ahead = distance > 0;
  while (remaining > 0) {
    std::size_t arc;
    Rational local;  // position within the arc, in walking order along the arc
    if (ahead) {
      const Rational k = floor(c);
      arc = static_cast<std::size_t>(k.get_num().get_ui());
      local = c - k;
    } else {
      Rational k = ceil(c) - 1;
      if (k < 0) k += L;
      arc = static_cast<std::size_t>(k.get_num().get_ui());
      local = c - k;
      if (local <= 0) local += L;
    }
    const Arc& a = arcs_[arc];
    Rational next_local;
    if (ahead) {
      next_local = std::min(Rational(1), Rational(local + remaining));
      remaining -= next_local - local;
    } else {
      next_local = std::max(Rational(0), Rational(local - remaining));
      remaining -= local - next_local;
    }
    const Rational from = a.forward ? local : Rational(1 - local);
    const Rational to = a.forward ? next_local : Rational(1 - next_local);
    path.move(a.edge, from, to);
    c = Rational(static_cast<unsigned long>(arc)) + next_local;
    if (c >= L) c -= L;
  }
  return path.build();
}

// ---------------------------------------------------------------------------
// Motions and regions

CoordMotion CoordMotion::along(const MultiGraph& g, EdgeIndex e, const Rational& t0,
                               const Rational& t1) {
  if (t0 == t1) return stationary(GraphPoint::on_edge(g, e, t0));
  return {GraphPoint::on_edge(g, e, t0), e, t0, t1};
}

GraphPoint CoordMotion::at(const MultiGraph& g, const Rational& lambda) const {
  if (!edge) return start;
  return GraphPoint::on_edge(g, *edge, t0 + lambda * (t1 - t0));
}

Region Region::product(const std::vector<Cell>& first, const std::vector<Cell>& second) {
  Region r;
  if (!first.empty() && !second.empty()) r.primitives_.push_back(BoxPrimitive{first, second});
  return r;
}

Region Region::whole(const MultiGraph& g) {
  EdgeSubset all(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) all[e] = e;
  const auto cells = closed_cells(g, all, true);
  return product(cells, cells);
}

Region& Region::add(Primitive p) {
  primitives_.push_back(std::move(p));
  return *this;
}

Region Region::united(const Region& other) const {
  Region out = *this;
  out.primitives_.insert(out.primitives_.end(), other.primitives_.begin(), other.primitives_.end());
  return out;
}

bool Region::closed() const {
  return std::all_of(primitives_.begin(), primitives_.end(), primitive_closed);
}

bool Region::contains(const MultiGraph& gx, const MultiGraph& gy, const GraphPoint& x,
                      const GraphPoint& y) const {
  return meets(gx, gy, {CoordMotion::stationary(x), CoordMotion::stationary(y)});
}

bool Region::meets(const MultiGraph& gx, const MultiGraph& gy, const PairMotion& motion) const {
  return std::any_of(primitives_.begin(), primitives_.end(),
                     [&](const Primitive& p) { return primitive_meets(gx, gy, p, motion); });
}

std::vector<Cell> closed_cells(const MultiGraph& g, const EdgeSubset& edges, bool include_isolated) {
  std::vector<Cell> cells;
  std::vector<bool> covered(g.vertex_count(), false);
  for (EdgeIndex e : edges) {
    cells.push_back(Cell::closed_edge(e));
    covered[g.edge(e).v0] = covered[g.edge(e).v1] = true;
  }
  if (include_isolated) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (!covered[v]) cells.push_back(Cell::vertex(v));
    }
  }
  return cells;
}

}  // namespace wildcat
