#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "wildcat/cli.hpp"
#include "wildcat/cohomology.hpp"
#include "wildcat/graph_algorithms.hpp"
#include "wildcat/motion_plan.hpp"
#include "wildcat/plan_json.hpp"
#include "wildcat/report.hpp"
#include "wildcat/space_file.hpp"
#include "wildcat/truncate.hpp"
#include "wildcat/wild.hpp"

namespace py = pybind11;
using namespace wildcat;

namespace {

using GraphPtr = std::shared_ptr<MultiGraph>;

struct Space {
  SpaceFile file;
  ExprPtr expr;
};

GraphPtr graph_from_text(const std::string& text) {
  const SpaceFile f = parse_space_file(text);
  return std::const_pointer_cast<MultiGraph>(f.plain_graph(f.main));
}

GraphPtr graph_from_records(const std::vector<std::string>& vertices,
                            const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  GraphSpec spec;
  spec.vertices = vertices;
  for (const auto& [id, a, b] : edges) spec.edges.push_back({id, a, b});
  return std::make_shared<MultiGraph>(MultiGraph::build(spec));
}

std::shared_ptr<Space> parse_space(const std::string& text) {
  auto s = std::make_shared<Space>();
  s->file = parse_space_file(text);
  s->expr = s->file.main_expr();
  return s;
}

py::object ext(const ExtNat& n) {
  if (n.is_infinite()) return py::str("inf");
  return py::int_(*n);
}

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict execute(const MotionPlan& plan, const std::string& from, const std::string& to) {
  const MultiGraph& g = plan.graph();
  const GraphPoint x = parse_point(g, from);
  const GraphPoint y = parse_point(g, to);
  const Execution ex = plan.execute(x, y);
  py::list steps;
  for (const auto& s : ex.path.steps()) {
    steps.append(py::make_tuple(g.edge_id(s.edge), s.from.get_str(), s.to.get_str()));
  }
  py::dict d;
  d["stratum"] = ex.stratum;
  d["rule"] = plan.strata()[ex.stratum].rule.name();
  d["length"] = ex.path.length().get_str();
  d["start"] = format_point(g, ex.path.start());
  d["end"] = format_point(g, ex.path.end());
  d["steps"] = steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wildcat, m) {
  m.doc() = "Cat and TC of graphs and wild one-dimensional spaces";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<GraphError>(m, "GraphError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PlanFormatError>(m, "PlanFormatError", base.ptr());
  py::register_exception<UnstableExpressionError>(m, "UnstableExpressionError", base.ptr());
  py::register_exception<InfiniteRankError>(m, "InfiniteRankError", base.ptr());
  py::register_exception<AtomError>(m, "AtomError", base.ptr());

  py::class_<MultiGraph, GraphPtr>(m, "Graph")
      .def(py::init(&graph_from_text), py::arg("text"))
      .def(py::init(&graph_from_records), py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("vertices",
                             [](const MultiGraph& g) {
                               std::vector<std::string> ids;
                               for (VertexIndex v = 0; v < g.vertex_count(); ++v) ids.push_back(g.vertex_id(v));
                               return ids;
                             })
      .def_property_readonly("edges",
                             [](const MultiGraph& g) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
                                 out.emplace_back(g.edge_id(e), g.vertex_id(g.edge(e).v0),
                                                  g.vertex_id(g.edge(e).v1));
                               }
                               return out;
                             })
      .def_property_readonly("connected", &MultiGraph::connected)
      .def("to_text", &format_graph)
      .def("to_dot", [](const MultiGraph& g) { return graph_dot(g); })
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__repr__", [](const MultiGraph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<MotionPlan, std::shared_ptr<MotionPlan>>(m, "Plan")
      .def_property_readonly("length", &MotionPlan::length)
      .def_property_readonly("rules",
                             [](const MotionPlan& p) {
                               std::vector<std::string> names;
                               for (const auto& s : p.strata()) names.push_back(s.rule.name());
                               return names;
                             })
      .def_property_readonly("graph", [](const MotionPlan& p) { return std::const_pointer_cast<MultiGraph>(p.graph_ptr()); })
      .def("execute", &execute, py::arg("source"), py::arg("target"))
      .def("to_json", [](const MotionPlan& p) { return to_python(plan_to_json(p)); });

  py::class_<Space, std::shared_ptr<Space>>(m, "Space")
      .def_property_readonly("main", [](const Space& s) { return s.file.main; })
      .def("__str__", [](const Space& s) { return print_expr(*s.expr); });

  m.def("parse_space", &parse_space, py::arg("text"));

  m.def("betti1", [](const MultiGraph& g) { return betti1(g); });
  m.def("cat_graph", [](const MultiGraph& g) { return cat_graph(g); });
  m.def("tc_graph", [](const MultiGraph& g) { return tc_graph(g); });
  m.def("zero_divisor_cuplength", [](const MultiGraph& g) { return zero_divisor_cuplength(g); });
  m.def("plan_graph", [](const MultiGraph& g) { return std::make_shared<MotionPlan>(plan_graph(g)); });

  m.def("wrk", [](const Space& s) { return ext(wrk(*s.expr)); });
  m.def("cat", [](const Space& s) { return ext(cat(*s.expr)); });
  m.def("tc", [](const Space& s) { return ext(tc(*s.expr)); });
  m.def("info", [](const Space& s) { return to_python(report_json(profile(*s.expr), *s.expr)); });
  m.def("truncate", [](const Space& s, std::size_t depth) {
    return std::make_shared<MultiGraph>(truncate(*s.expr, depth));
  }, py::arg("space"), py::arg("depth"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status;
    {
      py::gil_scoped_release release;
      status = run_cli(args, out, err);
    }
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"), "Runs the command line tool; returns (status, stdout, stderr).");
}
