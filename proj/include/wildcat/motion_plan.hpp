#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wildcat/graph.hpp"
#include "wildcat/graph_algorithms.hpp"
#include "wildcat/region.hpp"

namespace wildcat {

struct PlanRule;

/// Unique reduced path inside a spanning tree.
struct TreeRule {
  std::shared_ptr<const TreeRouter> router;
};

/// Move forward along the cycle by half the perimeter.
struct CycleRotate {
  std::shared_ptr<const CycleParam> cycle;
};

/// The strictly shorter arc.
struct CycleGeodesic {
  std::shared_ptr<const CycleParam> cycle;
};

/// A coordinate off the tree slides to the smaller endpoint of its edge
/// (toward parameter 0 on a loop); the rest is the tree route.
struct EdgeEvacuate {
  std::shared_ptr<const TreeRouter> router;
};

/// slide(x), then the inner rule on the core at (r x, r y), then slide(y)
/// backwards.
struct LiftedRule {
  std::shared_ptr<const CollapseHomotopy> homotopy;
  std::shared_ptr<const PlanRule> inner;
};

struct PlanRule {
  std::variant<TreeRule, CycleRotate, CycleGeodesic, EdgeEvacuate, LiftedRule> rule;

  std::string name() const;
  /// Graph the rule's inputs and outputs live on.
  const MultiGraph& graph() const;
};

/// Path produced by `rule` for the pair (x, y). Points outside the rule's
/// domain give a path anyway; its endpoints are only guaranteed on the domain.
PLPath apply_rule(const PlanRule& rule, const GraphPoint& x, const GraphPoint& y);

struct Stratum {
  Region region;
  PlanRule rule;
};

struct Execution {
  std::size_t stratum;
  PLPath path;
};

/// Closed filtration F_0 c ... c F_n = G x G with one rule per difference.
class MotionPlan {
 public:
  MotionPlan(std::shared_ptr<const MultiGraph> g, std::vector<Stratum> strata);

  const MultiGraph& graph() const { return *g_; }
  const std::shared_ptr<const MultiGraph>& graph_ptr() const { return g_; }
  const std::vector<Stratum>& strata() const { return strata_; }
  /// Filtration length n (strata count minus one).
  std::size_t length() const { return strata_.size() - 1; }

  /// Smallest j with (x, y) in F_j.
  std::size_t stratum_of(const GraphPoint& x, const GraphPoint& y) const;
  Execution execute(const GraphPoint& x, const GraphPoint& y) const;

 private:
  std::shared_ptr<const MultiGraph> g_;
  std::vector<Stratum> strata_;
};

/// Throws GraphError(kHasCycle) or (kDisconnected).
MotionPlan plan_tree(const MultiGraph& t);
/// Throws GraphError(kNotACycle).
MotionPlan plan_circle(const MultiGraph& c);
MotionPlan plan_graph(const MultiGraph& g);
/// Conjugates a plan on h's core by the homotopy. Throws GraphError(kMismatch)
/// if the plan does not live on the core.
MotionPlan lift_plan(const MotionPlan& plan, std::shared_ptr<const CollapseHomotopy> h);

/// Throws GraphError(kInvalidPoint) unless p names a vertex or edge of g.
void require_point_on(const MultiGraph& g, const GraphPoint& p);

}  // namespace wildcat
