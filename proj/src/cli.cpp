#include "wildcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "wildcat/cohomology.hpp"
#include "wildcat/filtration.hpp"
#include "wildcat/plan_json.hpp"
#include "wildcat/report.hpp"
#include "wildcat/space_file.hpp"
#include "wildcat/truncate.hpp"

namespace wildcat {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string graph;
  std::string from;
  std::string to;
  std::string export_path;
  std::string dot_path;
  std::string plan_path;
  std::string output;
  std::size_t depth = 0;
  VerifyParams verify;
};

// Text for stdout plus the exit status.
struct Outcome {
  std::string out;
  int status = kExitOk;
};

Outcome json_outcome(const ordered_json& doc, int status = kExitOk) { return {doc.dump(2) + "\n", status}; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

std::shared_ptr<const MultiGraph> target_graph(const SpaceFile& file, const Options& o) {
  return file.plain_graph(o.graph.empty() ? file.main : o.graph);
}

std::string target_name(const SpaceFile& file, const Options& o) { return o.graph.empty() ? file.main : o.graph; }

void summary(std::ostream& err, const ordered_json& r) {
  err << "wrk " << r["wrk"].dump() << ", cat " << r["cat"].dump() << ", tc " << r["tc"].dump() << ", scc "
      << r["scc_class"].get<std::string>() << (r["stable"].get<bool>() ? "" : ", not w-stable") << "\n";
}

Outcome cmd_info(const Options& o, std::ostream& err) {
  const SpaceFile file = read_space_file(o.file);
  const ExprPtr e = file.main_expr();
  const WildProfile p = profile(*e);
  ordered_json r = report_json(p, *e);
  summary(err, r);
  if (!p.stable) err << "note: " << p.diagnostic << "\n";
  return json_outcome(r);
}

Outcome cmd_certify(const Options& o, std::ostream& err) {
  const SpaceFile file = read_space_file(o.file);
  const ExprPtr e = file.main_expr();
  const WildProfile p = profile(*e);
  const Certificate c = cat_certificate(p, *e);
  const Certificate t = tc_certificate(p, *e);
  ordered_json r = report_json(p, *e);
  r["certificates"] = {{"cat", certificate_json(c)}, {"tc", certificate_json(t)}};
  summary(err, r);
  err << "cat certificate: " << c.levels.size() << " levels, tc certificate: " << t.levels.size() << " levels\n";
  return json_outcome(r);
}

Outcome cmd_plan(const Options& o, std::ostream& err) {
  const SpaceFile file = read_space_file(o.file);
  const auto g = target_graph(file, o);
  const MotionPlan plan = plan_graph(*g);
  if (!o.export_path.empty()) write_file(o.export_path, plan_to_json(plan).dump(2) + "\n");

  ordered_json rules = ordered_json::array();
  for (const auto& s : plan.strata()) rules.push_back(s.rule.name());
  ordered_json r = {{"graph", target_name(file, o)}, {"strata", plan.strata().size()}, {"rules", rules}};
  err << "plan on '" << target_name(file, o) << "': " << plan.strata().size() << " strata\n";

  std::vector<EdgeIndex> used;
  if (o.from.empty() != o.to.empty()) throw Error("--from and --to go together");
  if (!o.from.empty()) {
    const GraphPoint x = parse_point(*g, o.from);
    const GraphPoint y = parse_point(*g, o.to);
    const Execution ex = plan.execute(x, y);
    ordered_json steps = ordered_json::array();
    for (const auto& s : ex.path.steps()) {
      steps.push_back({{"edge", g->edge_id(s.edge)}, {"from", to_string(s.from)}, {"to", to_string(s.to)}});
      used.push_back(s.edge);
    }
    r["query"] = {{"from", format_point(*g, x)},
                  {"to", format_point(*g, y)},
                  {"stratum", ex.stratum},
                  {"rule", plan.strata()[ex.stratum].rule.name()},
                  {"length", to_string(ex.path.length())},
                  {"steps", steps}};
    err << "stratum " << ex.stratum << ", " << steps.size() << " steps, length " << to_string(ex.path.length())
        << "\n";
  }
  if (!o.dot_path.empty()) write_file(o.dot_path, graph_dot(*g, used));
  return json_outcome(r);
}

CheckResult filtration_check(const std::string& name, const FiltrationCheck& f) {
  return {name, f.ok(), f.witness};
}

Outcome cmd_verify(const Options& o, std::ostream& err) {
  const SpaceFile file = read_space_file(o.file);
  const auto g = target_graph(file, o);
  std::optional<MotionPlan> plan;
  if (o.plan_path.empty()) {
    plan.emplace(plan_graph(*g));
  } else {
    std::ifstream in(o.plan_path);
    if (!in) throw Error("cannot read '" + o.plan_path + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw PlanFormatError(std::string("plan file: ") + e.what());
    }
    plan.emplace(plan_from_json(doc, *g));
  }
  VerificationReport v = verify_plan(*plan, *g, o.verify);
  if (g->connected()) {
    const GraphFiltration f = cat_filtration(*g);
    v.checks.push_back(filtration_check("cat-filtration", check_cat_filtration(f)));
    v.checks.push_back(filtration_check("product-filtration", check_product_filtration(product_cat_filtration(f, f))));
  }
  const ExprPtr e = make_graph_expr(target_name(file, o), g);
  const WildProfile p = profile(*e);
  ordered_json r = report_json(p, *e);
  r["verification"] = verification_json(v);
  for (const auto& c : v.checks) {
    err << (c.passed ? "pass " : "FAIL ") << c.name << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
  }
  err << (v.passed() ? "verification passed\n" : "verification FAILED\n");
  return json_outcome(r, v.passed() ? kExitOk : kExitVerification);
}

Outcome cmd_truncate(const Options& o, std::ostream& err) {
  const SpaceFile file = read_space_file(o.file);
  const MultiGraph g = truncate(*file.main_expr(), o.depth);
  err << "truncated at depth " << o.depth << ": " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges, betti1 " << betti1(g) << "\n";
  if (!o.dot_path.empty()) write_file(o.dot_path, graph_dot(g));
  if (o.output.empty()) return {format_graph(g)};
  write_file(o.output, format_graph(g));
  return {};
}

Outcome cmd_cuplength(const Options& o, std::ostream& err) {
  const SpaceFile file = read_space_file(o.file);
  const auto g = target_graph(file, o);
  const std::size_t b1 = betti1(*g);
  const std::size_t cup = zero_divisor_cuplength(*g);
  ordered_json r = {{"graph", target_name(file, o)},
                    {"betti1", b1},
                    {"zero_divisor_cuplength", cup},
                    {"tc_lower_bound", tc_lower_bound(*g)},
                    {"tc", tc_graph(*g)}};
  err << "betti1 " << b1 << ", zero-divisor cup-length " << cup << "\n";
  return json_outcome(r);
}

int status_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const PlanFormatError*>(&e)) return kExitParse;
  if (dynamic_cast<const UnstableExpressionError*>(&e)) return kExitUnstable;
  if (dynamic_cast<const InfiniteRankError*>(&e)) return kExitInfiniteRank;
  return kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Category and topological complexity of graphs and wild one-dimensional spaces", "wildcat"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "Report wildness rank, cat and TC of the main definition");
  info->add_option("file", o.file, "space file")->required();

  auto* plan = app.add_subcommand("plan", "Build the motion plan of a graph and answer a query");
  plan->add_option("file", o.file, "space file")->required();
  plan->add_option("--graph", o.graph, "definition to plan on (default: main)");
  plan->add_option("--from", o.from, "start point, e.g. \"vertex a\" or \"edge e 1/3\"");
  plan->add_option("--to", o.to, "end point");
  plan->add_option("--export", o.export_path, "write the plan as JSON");
  plan->add_option("--dot", o.dot_path, "write the graph as Graphviz text, query path in bold");

  auto* verify = app.add_subcommand("verify", "Check a motion plan and the cat filtrations of a graph");
  verify->add_option("file", o.file, "space file")->required();
  verify->add_option("--graph", o.graph, "definition to verify (default: main)");
  verify->add_option("--plan", o.plan_path, "plan JSON to check instead of the built-in plan");
  verify->add_option("--samples", o.verify.samples, "random queries")->capture_default_str();
  verify->add_option("--delta", o.verify.delta, "perturbation size")->capture_default_str();
  verify->add_option("--eps", o.verify.epsilon, "allowed path deviation")->capture_default_str();
  verify->add_option("--seed", o.verify.seed, "sampling seed")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "Report with cat and TC filtration certificates");
  certify->add_option("file", o.file, "space file")->required();

  auto* trunc = app.add_subcommand("truncate", "Finite graph approximation of the main expression");
  trunc->add_option("file", o.file, "space file")->required();
  trunc->add_option("--depth", o.depth, "copies per sequence family")->required();
  trunc->add_option("-o,--output", o.output, "write the graph here instead of stdout");
  trunc->add_option("--dot", o.dot_path, "write the graph as Graphviz text");

  auto* cup = app.add_subcommand("cuplength", "Zero-divisor cup-length of a graph");
  cup->add_option("file", o.file, "space file")->required();
  cup->add_option("--graph", o.graph, "definition to use (default: main)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    Outcome r;
    if (*info) r = cmd_info(o, err);
    if (*plan) r = cmd_plan(o, err);
    if (*verify) r = cmd_verify(o, err);
    if (*certify) r = cmd_certify(o, err);
    if (*trunc) r = cmd_truncate(o, err);
    if (*cup) r = cmd_cuplength(o, err);
    out << r.out;
    return r.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return status_of(e);
  }
}

}  // namespace wildcat
