#include "wildcat/motion_plan.hpp"

namespace wildcat {

namespace {

using Kind = GraphError::Kind;

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

PLPath evacuate(const TreeRouter& router, const GraphPoint& x) {
  if (router.contains(x)) return PLPath::constant(x);
  const MultiGraph& g = router.graph();
  const auto& e = g.edge(x.edge());
  const Rational target = (e.is_loop() || e.v0 < e.v1) ? 0 : 1;
  return PathBuilder(g, x).move(x.edge(), x.param(), target).build();
}

PLPath geodesic(const CycleParam& cycle, const GraphPoint& x, const GraphPoint& y) {
  const Rational L = cycle.perimeter();
  Rational d = cycle.coordinate(y) - cycle.coordinate(x);
  if (d < 0) d += L;
  if (d * 2 > L) d -= L;
  return cycle.walk(x, d);
}

std::shared_ptr<const MultiGraph> share(const MultiGraph& g) {
  return std::make_shared<const MultiGraph>(g);
}

EdgeSubset all_edges(const MultiGraph& g) {
  EdgeSubset all(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) all[e] = e;
  return all;
}

}  // namespace

std::string PlanRule::name() const {
  return std::visit(overloaded{[](const TreeRule&) -> std::string { return "tree"; },
                               [](const CycleRotate&) -> std::string { return "cycle-rotate"; },
                               [](const CycleGeodesic&) -> std::string { return "cycle-geodesic"; },
                               [](const EdgeEvacuate&) -> std::string { return "edge-evacuate"; },
                               [](const LiftedRule& r) -> std::string {
                                 return "lifted(" + r.inner->name() + ")";
                               }},
                    rule);
}

const MultiGraph& PlanRule::graph() const {
  return std::visit(
      overloaded{[](const TreeRule& r) -> const MultiGraph& { return r.router->graph(); },
                 [](const CycleRotate& r) -> const MultiGraph& { return r.cycle->graph(); },
                 [](const CycleGeodesic& r) -> const MultiGraph& { return r.cycle->graph(); },
                 [](const EdgeEvacuate& r) -> const MultiGraph& { return r.router->graph(); },
                 [](const LiftedRule& r) -> const MultiGraph& { return r.homotopy->graph(); }},
      rule);
}

PLPath apply_rule(const PlanRule& rule, const GraphPoint& x, const GraphPoint& y) {
  return std::visit(
      overloaded{
          [&](const TreeRule& r) { return r.router->route(x, y); },
          [&](const CycleRotate& r) { return r.cycle->walk(x, r.cycle->perimeter() / 2); },
          [&](const CycleGeodesic& r) { return geodesic(*r.cycle, x, y); },
          [&](const EdgeEvacuate& r) {
            const PLPath out = evacuate(*r.router, x);
            const PLPath in = evacuate(*r.router, y).reversed();
            return out.then(r.router->route(out.end(), in.start())).then(in);
          },
          [&](const LiftedRule& r) {
            const CollapseHomotopy& h = *r.homotopy;
            const PLPath core = apply_rule(*r.inner, h.retract(x), h.retract(y));
            return h.slide(x).then(h.path_to_graph(core)).then(h.slide(y).reversed());
          }},
      rule.rule);
}

void require_point_on(const MultiGraph& g, const GraphPoint& p) {
  const bool ok = p.is_vertex() ? p.vertex() < g.vertex_count() : p.edge() < g.edge_count();
  if (!ok) throw GraphError(Kind::kInvalidPoint, "", "point does not lie on the graph");
}

MotionPlan::MotionPlan(std::shared_ptr<const MultiGraph> g, std::vector<Stratum> strata)
    : g_(std::move(g)), strata_(std::move(strata)) {
  if (strata_.empty()) throw GraphError(Kind::kMismatch, "", "a motion plan needs a stratum");
}

std::size_t MotionPlan::stratum_of(const GraphPoint& x, const GraphPoint& y) const {
  require_point_on(*g_, x);
  require_point_on(*g_, y);
  for (std::size_t j = 0; j + 1 < strata_.size(); ++j) {
    if (strata_[j].region.contains(*g_, x, y)) return j;
  }
  return strata_.size() - 1;
}

Execution MotionPlan::execute(const GraphPoint& x, const GraphPoint& y) const {
  const std::size_t j = stratum_of(x, y);
  return {j, apply_rule(strata_[j].rule, x, y)};
}

MotionPlan plan_tree(const MultiGraph& t) {
  require_connected(t, "plan_tree");
  if (betti1(t) != 0) throw GraphError(Kind::kHasCycle, "", "plan_tree: input has a cycle");
  auto g = share(t);
  auto router = std::make_shared<const TreeRouter>(g, all_edges(t));
  return MotionPlan(g, {{Region::whole(t), {TreeRule{router}}}});
}

MotionPlan plan_circle(const MultiGraph& c) {
  auto g = share(c);
  auto cycle = std::make_shared<const CycleParam>(g);
  Region antidiagonal({ShiftPrimitive{cycle, cycle->perimeter() / 2}});
  return MotionPlan(g, {{std::move(antidiagonal), {CycleRotate{cycle}}},
                        {Region::whole(c), {CycleGeodesic{cycle}}}});
}

MotionPlan plan_graph(const MultiGraph& g) {
  require_connected(g, "plan_graph");
  const std::size_t b = betti1(g);
  if (b == 0) return plan_tree(g);
  if (b == 1) {
    const Deforestation d = deforest(g);
    return lift_plan(plan_circle(d.core), d.homotopy);
  }
  auto shared = share(g);
  const EdgeSubset tree = spanning_forest(g);
  auto router = std::make_shared<const TreeRouter>(shared, tree);
  const auto tree_cells = closed_cells(g, tree, true);
  const auto all_cells = closed_cells(g, all_edges(g), true);
  Region f0 = Region::product(tree_cells, tree_cells);
  Region f1 = Region::product(all_cells, tree_cells).united(Region::product(tree_cells, all_cells));
  return MotionPlan(shared, {{std::move(f0), {TreeRule{router}}},
                             {std::move(f1), {EdgeEvacuate{router}}},
                             {Region::whole(g), {EdgeEvacuate{router}}}});
}

MotionPlan lift_plan(const MotionPlan& plan, std::shared_ptr<const CollapseHomotopy> h) {
  if (!(h->core() == plan.graph())) {
    throw GraphError(Kind::kMismatch, "", "lift_plan: plan does not live on the homotopy's core");
  }
  if (h->is_identity()) return plan;
  std::vector<Stratum> strata;
  for (const auto& s : plan.strata()) {
    Region lifted({PreimagePrimitive{h, std::make_shared<const Region>(s.region)}});
    strata.push_back({std::move(lifted), {LiftedRule{h, std::make_shared<const PlanRule>(s.rule)}}});
  }
  return MotionPlan(share(h->graph()), std::move(strata));
}

}  // namespace wildcat
