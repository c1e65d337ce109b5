#include "wildcat/plan_json.hpp"

#include <algorithm>

namespace wildcat {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string cell_text(const MultiGraph& g, const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::kVertex:
      return "vertex " + g.vertex_id(c.index);
    case Cell::Kind::kClosedEdge:
      return "edge " + g.edge_id(c.index);
    case Cell::Kind::kOpenEdge:
      return "open " + g.edge_id(c.index);
    case Cell::Kind::kSubArc:
      return "arc " + g.edge_id(c.index) + " " + to_string(c.lo) + " " + to_string(c.hi);
  }
  return "";
}

ordered_json cells_json(const MultiGraph& g, const std::vector<Cell>& cells) {
  ordered_json out = ordered_json::array();
  for (const auto& c : cells) out.push_back(cell_text(g, c));
  return out;
}

ordered_json collapses_json(const CollapseHomotopy& h) {
  ordered_json out = ordered_json::array();
  const MultiGraph& g = h.graph();
  for (const auto& c : h.collapses()) {
    out.push_back({{"edge", g.edge_id(c.edge)}, {"retained", g.vertex_id(c.retained)}});
  }
  return out;
}

ordered_json edges_json(const MultiGraph& g, const EdgeSubset& edges) {
  ordered_json out = ordered_json::array();
  for (EdgeIndex e : edges) out.push_back(g.edge_id(e));
  return out;
}

ordered_json region_json(const MultiGraph& g, const Region& r);

ordered_json primitive_json(const MultiGraph& g, const Primitive& p) {
  if (const auto* box = std::get_if<BoxPrimitive>(&p)) {
    return {{"box", {{"first", cells_json(g, box->first)}, {"second", cells_json(g, box->second)}}}};
  }
  if (const auto* shift = std::get_if<ShiftPrimitive>(&p)) return {{"shift", to_string(shift->offset)}};
  const auto& pre = std::get<PreimagePrimitive>(p);
  return {{"preimage",
           {{"collapses", collapses_json(*pre.map)}, {"region", region_json(pre.map->core(), *pre.inner)}}}};
}

ordered_json region_json(const MultiGraph& g, const Region& r) {
  ordered_json out = ordered_json::array();
  for (const auto& p : r.primitives()) out.push_back(primitive_json(g, p));
  return out;
}

ordered_json rule_json(const PlanRule& rule) {
  return std::visit(
      [](const auto& r) -> ordered_json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, TreeRule>) {
          return {{"tree", edges_json(r.router->graph(), r.router->forest())}};
        } else if constexpr (std::is_same_v<T, EdgeEvacuate>) {
          return {{"edge-evacuate", edges_json(r.router->graph(), r.router->forest())}};
        } else if constexpr (std::is_same_v<T, CycleRotate>) {
          return {{"cycle-rotate", ordered_json::object()}};
        } else if constexpr (std::is_same_v<T, CycleGeodesic>) {
          return {{"cycle-geodesic", ordered_json::object()}};
        } else {
          return {{"lifted", {{"collapses", collapses_json(*r.homotopy)}, {"inner", rule_json(*r.inner)}}}};
        }
      },
      rule.rule);
}

// ---------------------------------------------------------------------------
// Loading

[[noreturn]] void bad(const std::string& what) { throw PlanFormatError("plan file: " + what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing '") + key + "'");
  return obj.at(key);
}

std::string text(const json& v) {
  if (!v.is_string()) bad("expected a string, got " + v.dump());
  return v.get<std::string>();
}

// The single key of a one-entry object.
std::pair<std::string, const json*> tagged(const json& obj) {
  if (!obj.is_object() || obj.size() != 1) bad("expected a one-key object, got " + obj.dump());
  return {obj.begin().key(), &obj.begin().value()};
}

VertexIndex vertex_named(const MultiGraph& g, const std::string& id) {
  auto v = g.find_vertex(id);
  if (!v) throw GraphError(GraphError::Kind::kUnknownIdentifier, id, "unknown vertex '" + id + "'");
  return *v;
}

EdgeIndex edge_named(const MultiGraph& g, const std::string& id) {
  auto e = g.find_edge(id);
  if (!e) throw GraphError(GraphError::Kind::kUnknownIdentifier, id, "unknown edge '" + id + "'");
  return *e;
}

Cell parse_cell(const MultiGraph& g, const std::string& s) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t j = s.find(' ', i);
    const std::size_t end = j == std::string::npos ? s.size() : j;
    if (end > i) words.push_back(s.substr(i, end - i));
    i = end + 1;
  }
  if (words.size() == 2 && words[0] == "vertex") return Cell::vertex(vertex_named(g, words[1]));
  if (words.size() == 2 && words[0] == "edge") return Cell::closed_edge(edge_named(g, words[1]));
  if (words.size() == 2 && words[0] == "open") return Cell::open_edge(edge_named(g, words[1]));
  if (words.size() == 4 && words[0] == "arc") {
    try {
      return Cell::sub_arc(edge_named(g, words[1]), parse_rational(words[2]), parse_rational(words[3]));
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  bad("malformed cell '" + s + "'");
}

std::vector<Cell> parse_cells(const MultiGraph& g, const json& arr) {
  if (!arr.is_array()) bad("cell list must be an array");
  std::vector<Cell> out;
  for (const auto& c : arr) out.push_back(parse_cell(g, text(c)));
  return out;
}

EdgeSubset parse_edges(const MultiGraph& g, const json& arr) {
  if (!arr.is_array()) bad("edge list must be an array");
  EdgeSubset out;
  for (const auto& e : arr) out.push_back(edge_named(g, text(e)));
  std::sort(out.begin(), out.end());
  return out;
}

struct Context {
  std::shared_ptr<const MultiGraph> graph;
  std::shared_ptr<const CycleParam> cycle;

  const std::shared_ptr<const CycleParam>& cycle_param() {
    if (!cycle) cycle = std::make_shared<const CycleParam>(graph);
    return cycle;
  }
};

std::shared_ptr<const CollapseHomotopy> parse_homotopy(const MultiGraph& g, const json& arr) {
  if (!arr.is_array()) bad("collapses must be an array");
  std::vector<CollapseHomotopy::Collapse> collapses;
  for (const auto& c : arr) {
    const EdgeIndex e = edge_named(g, text(field(c, "edge")));
    const VertexIndex kept = vertex_named(g, text(field(c, "retained")));
    if (g.edge(e).v0 != kept && g.edge(e).v1 != kept) bad("collapse keeps a vertex off its edge");
    collapses.push_back({e, kept, g.opposite(e, kept)});
  }
  return std::make_shared<const CollapseHomotopy>(CollapseHomotopy::from_collapses(g, std::move(collapses)));
}

Region parse_region(Context& ctx, const json& arr) {
  if (!arr.is_array()) bad("region must be an array of primitives");
  Region out;
  for (const auto& p : arr) {
    const auto [tag, body] = tagged(p);
    if (tag == "box") {
      out.add(BoxPrimitive{parse_cells(*ctx.graph, field(*body, "first")),
                           parse_cells(*ctx.graph, field(*body, "second"))});
    } else if (tag == "shift") {
      try {
        out.add(ShiftPrimitive{ctx.cycle_param(), parse_rational(text(*body))});
      } catch (const std::invalid_argument& e) {
        bad(e.what());
      }
    } else if (tag == "preimage") {
      auto h = parse_homotopy(*ctx.graph, field(*body, "collapses"));
      Context inner{std::make_shared<const MultiGraph>(h->core()), nullptr};
      out.add(PreimagePrimitive{h, std::make_shared<const Region>(parse_region(inner, field(*body, "region")))});
    } else {
      bad("unknown region primitive '" + tag + "'");
    }
  }
  return out;
}

PlanRule parse_rule(Context& ctx, const json& obj) {
  const auto [tag, body] = tagged(obj);
  if (tag == "tree" || tag == "edge-evacuate") {
    auto router = std::make_shared<const TreeRouter>(ctx.graph, parse_edges(*ctx.graph, *body));
    if (tag == "tree") return {TreeRule{router}};
    return {EdgeEvacuate{router}};
  }
  if (tag == "cycle-rotate") return {CycleRotate{ctx.cycle_param()}};
  if (tag == "cycle-geodesic") return {CycleGeodesic{ctx.cycle_param()}};
  if (tag == "lifted") {
    auto h = parse_homotopy(*ctx.graph, field(*body, "collapses"));
    Context inner{std::make_shared<const MultiGraph>(h->core()), nullptr};
    return {LiftedRule{h, std::make_shared<const PlanRule>(parse_rule(inner, field(*body, "inner")))}};
  }
  bad("unknown rule '" + tag + "'");
}

}  // namespace

ordered_json graph_to_json(const MultiGraph& g) {
  ordered_json vertices = ordered_json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_id(v));
  ordered_json edges = ordered_json::array();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    edges.push_back({g.edge_id(e), g.vertex_id(g.edge(e).v0), g.vertex_id(g.edge(e).v1)});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

ordered_json plan_to_json(const MotionPlan& plan) {
  ordered_json strata = ordered_json::array();
  for (const auto& s : plan.strata()) {
    strata.push_back({{"region", region_json(plan.graph(), s.region)}, {"rule", rule_json(s.rule)}});
  }
  return {{"graph", graph_to_json(plan.graph())}, {"strata", strata}};
}

MotionPlan plan_from_json(const json& doc, const MultiGraph& g) {
  if (doc.contains("graph")) {
    const json& stored = doc.at("graph");
    const ordered_json expected = graph_to_json(g);
    if (json::parse(expected.dump()) != stored) {
      throw GraphError(GraphError::Kind::kMismatch, "", "plan file was written for another graph");
    }
  }
  const json& strata = field(doc, "strata");
  if (!strata.is_array() || strata.empty()) bad("'strata' must be a non-empty array");
  Context ctx{std::make_shared<const MultiGraph>(g), nullptr};
  std::vector<Stratum> out;
  for (const auto& s : strata) {
    Region region = parse_region(ctx, field(s, "region"));
    out.push_back({std::move(region), parse_rule(ctx, field(s, "rule"))});
  }
  return MotionPlan(ctx.graph, std::move(out));
}

}  // namespace wildcat
