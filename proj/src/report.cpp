#include "wildcat/report.hpp"

#include <algorithm>
#include <sstream>

namespace wildcat {

using nlohmann::ordered_json;

namespace {

ordered_json ext(const ExtNat& n) {
  if (n.is_infinite()) return "inf";
  return *n;
}

std::string quoted(const std::string& id) { return "\"" + id + "\""; }

}  // namespace

ordered_json report_json(const WildProfile& p, const SpaceExpr& e) {
  ordered_json tower = ordered_json::array();
  for (const auto& l : p.tower) tower.push_back({{"pieces", ext(l.pieces)}, {"betti1", ext(l.betti1)}});
  return {{"wrk", ext(p.wrk)},
          {"cat", ext(cat_of(p, e))},
          {"tc", ext(tc_of(p, e))},
          {"stable", p.stable},
          {"scc_class", to_string(p.scc)},
          {"tower", tower}};
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json levels = ordered_json::array();
  for (const auto& l : c.levels) levels.push_back({{"label", l.label}, {"description", l.description}});
  return {{"kind", to_string(c.kind)}, {"length", c.length}, {"levels", levels}};
}

ordered_json verification_json(const VerificationReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  return {{"passed", r.passed()},
          {"strata", r.strata_count},
          {"expected_strata", r.expected_strata},
          {"samples", r.samples},
          {"continuity_pairs", r.continuity_pairs},
          {"checks", checks}};
}

bool is_report_key(const std::string& key) {
  static const char* keys[] = {"wrk", "cat", "tc", "stable", "scc_class", "tower", "certificates", "verification"};
  return std::any_of(std::begin(keys), std::end(keys), [&](const char* k) { return key == k; });
}

std::string graph_dot(const MultiGraph& g, const std::vector<EdgeIndex>& highlight) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.vertex_id(v)) << ";\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out << "  " << quoted(g.vertex_id(g.edge(e).v0)) << " -- " << quoted(g.vertex_id(g.edge(e).v1))
        << " [label=" << quoted(g.edge_id(e));
    if (std::find(highlight.begin(), highlight.end(), e) != highlight.end()) out << ", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wildcat
