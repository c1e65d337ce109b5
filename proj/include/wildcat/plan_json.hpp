#pragma once

#include <json.hpp>

#include "wildcat/motion_plan.hpp"

namespace wildcat {

/// Malformed plan document.
class PlanFormatError : public Error {
 public:
  using Error::Error;
};

/// Plan document: {"graph": {...}, "strata": [{"region": [...], "rule": {...}}]}.
/// Regions and rules name vertices and edges by id; cycles are the graph the
/// primitive is evaluated on, and homotopies are stored as collapse lists.
nlohmann::ordered_json plan_to_json(const MotionPlan& plan);

/// Rebuilds a plan on g. Throws PlanFormatError on schema problems and
/// GraphError when ids do not resolve.
MotionPlan plan_from_json(const nlohmann::json& doc, const MultiGraph& g);

nlohmann::ordered_json graph_to_json(const MultiGraph& g);

}  // namespace wildcat
