#include "wildcat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace wildcat {

namespace {

using Rng = std::mt19937_64;

constexpr unsigned long kGrid = 1UL << 20;  // sample parameters are k / 2^20

struct Sample {
  GraphPoint point;
  CoordMotion motion;  // from the unperturbed point to `point`
};

GraphPoint random_point(const MultiGraph& g, Rng& rng) {
  const bool vertex = g.edge_count() == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0;
  if (vertex) {
    return GraphPoint::at_vertex(std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng));
  }
  const EdgeIndex e = std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng);
  const unsigned long k = std::uniform_int_distribution<unsigned long>(1, kGrid - 1)(rng);
  return GraphPoint::on_edge(g, e, ratio(static_cast<long>(k), kGrid));
}

// Moves p by at most `reach` along one closed edge through p.
Sample perturb(const MultiGraph& g, const GraphPoint& p, unsigned long reach, Rng& rng) {
  const Rational u =
      ratio(static_cast<long>(std::uniform_int_distribution<unsigned long>(1, reach)(rng)), kGrid);
  EdgeIndex e;
  Rational t;
  if (p.is_vertex()) {
    const auto incident = g.incident(p.vertex());
    if (incident.empty()) return {p, CoordMotion::stationary(p)};
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, incident.size() - 1)(rng);
    e = incident[pick];
    // A loop appears twice in the incidence list: once per end.
    const bool from_v0 = g.edge(e).is_loop() ? pick % 2 == 0 : g.edge(e).v0 == p.vertex();
    t = from_v0 ? 0 : 1;
  } else {
    e = p.edge();
    t = p.param();
  }
  Rational t2 = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Rational(t + u) : Rational(t - u);
  if (t2 < 0) t2 = 0;
  if (t2 > 1) t2 = 1;
  const CoordMotion m = CoordMotion::along(g, e, t, t2);
  return {m.at(g, 1), m};
}

// Straight motion between two points on a common closed edge.
std::optional<CoordMotion> motion_between(const MultiGraph& g, const GraphPoint& a, const GraphPoint& b) {
  if (a == b) return CoordMotion::stationary(a);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!a.on_closed_edge(g, e) || !b.on_closed_edge(g, e)) continue;
    Rational ta = *a.param_along(g, e);
    Rational tb = *b.param_along(g, e);
    if (g.edge(e).is_loop()) {
      if (a.is_vertex() && tb > ratio(1, 2)) ta = 1;
      if (b.is_vertex() && ta > ratio(1, 2)) tb = 1;
    }
    return CoordMotion::along(g, e, ta, tb);
  }
  return std::nullopt;
}

// Second coordinate forced by the first on a thin (shift-type) stratum.
std::optional<GraphPoint> thin_partner(const Region& r, const GraphPoint& x) {
  for (const auto& p : r.primitives()) {
    if (const auto* shift = std::get_if<ShiftPrimitive>(&p)) {
      const CycleParam& c = *shift->cycle;
      Rational s = c.coordinate(x) + shift->offset;
      const Rational L = c.perimeter();
      s -= floor(Rational(s / L)) * L;
      return c.point_at(s);
    }
    if (const auto* pre = std::get_if<PreimagePrimitive>(&p)) {
      if (auto inner = thin_partner(*pre->inner, pre->map->retract(x))) {
        return pre->map->to_graph(*inner);
      }
    }
  }
  return std::nullopt;
}

std::string pair_text(const MultiGraph& g, const GraphPoint& x, const GraphPoint& y) {
  return "(" + format_point(g, x) + ", " + format_point(g, y) + ")";
}

class Checker {
 public:
  Checker(const MotionPlan& plan, const VerifyParams& params)
      : plan_(plan), g_(plan.graph()), params_(params), table_(g_) {}

  void pair(const GraphPoint& x, const GraphPoint& y, CheckResult& partition, CheckResult& section) {
    const auto& strata = plan_.strata();
    bool inside = false;
    for (std::size_t j = 0; j < strata.size(); ++j) {
      const bool in = strata[j].region.contains(g_, x, y);
      if (inside && !in) record(partition, pair_text(g_, x, y) + " leaves F_" + std::to_string(j));
      inside = inside || in;
    }
    if (!inside) record(partition, pair_text(g_, x, y) + " is not covered");
    try {
      const Execution ex = plan_.execute(x, y);
      if (!(ex.path.start() == x) || !(ex.path.end() == y)) {
        record(section, pair_text(g_, x, y) + " stratum " + std::to_string(ex.stratum) +
                            " path runs " + format_point(g_, ex.path.start()) + " -> " +
                            format_point(g_, ex.path.end()));
      }
    } catch (const Error& e) {
      record(section, pair_text(g_, x, y) + " rule failed: " + e.what());
    }
  }

  // Compares the plan at (x, y) and at a perturbed pair in the same difference
  // whose connecting segment avoids the previous stratum and stays in F_j
  // (checked at the midpoint; membership is constant on the open segment).
  bool continuity(const GraphPoint& x, const GraphPoint& y, const Sample& x2, const Sample& y2,
                  CheckResult& result) {
    const std::size_t j = plan_.stratum_of(x, y);
    if (plan_.stratum_of(x2.point, y2.point) != j) return false;
    if (j > 0 && plan_.strata()[j - 1].region.meets(g_, {x2.motion, y2.motion})) return false;
    const Rational half = ratio(1, 2);
    if (!plan_.strata()[j].region.contains(g_, x2.motion.at(g_, half), y2.motion.at(g_, half))) {
      return false;
    }
    const double d = std::max(table_.distance(x, x2.point), table_.distance(y, y2.point));
    if (!(d < params_.delta)) return false;
    std::optional<PLPath> a, b;
    try {
      a = plan_.execute(x, y).path;
      b = plan_.execute(x2.point, y2.point).path;
    } catch (const Error&) {
      return false;  // reported by the section check
    }
    const std::size_t n = std::max<std::size_t>(params_.time_samples, 2);
    const auto sa = table_.sample(*a, n);
    const auto sb = table_.sample(*b, n);
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, table_.distance(sa[k], sb[k]));
    if (worst > params_.epsilon) {
      record(result, pair_text(g_, x, y) + " vs " + pair_text(g_, x2.point, y2.point) +
                         " in stratum " + std::to_string(j) + ": paths differ by " +
                         std::to_string(worst));
    }
    return true;
  }

 private:
  static void record(CheckResult& r, const std::string& witness) {
    if (r.passed) r.witness = witness;
    r.passed = false;
  }

  const MotionPlan& plan_;
  const MultiGraph& g_;
  const VerifyParams& params_;
  DistanceTable table_;
};

std::vector<GraphPoint> representatives(const MultiGraph& g) {
  std::vector<GraphPoint> reps;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) reps.push_back(GraphPoint::at_vertex(v));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (int k = 1; k <= 3; ++k) reps.push_back(GraphPoint::on_edge(g, e, ratio(k, 4)));
  }
  return reps;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

VerificationReport verify_plan(const MotionPlan& plan, const MultiGraph& g, const VerifyParams& params) {
  VerificationReport report;
  report.strata_count = plan.strata().size();
  report.samples = params.samples;

  CheckResult graph{"graph", plan.graph() == g, ""};
  if (!graph.passed) graph.witness = "plan was built for another graph";
  report.checks.push_back(graph);

  CheckResult count{"strata-count", true, ""};
  if (!g.connected()) {
    count = {"strata-count", false, "graph is disconnected"};
  } else {
    report.expected_strata = tc_graph(g) + 1;
    if (report.strata_count != report.expected_strata) {
      count = {"strata-count", false,
               std::to_string(report.strata_count) + " strata, expected " +
                   std::to_string(report.expected_strata)};
    }
  }
  report.checks.push_back(count);

  CheckResult closed{"closed", true, ""};
  for (std::size_t j = 0; j < plan.strata().size(); ++j) {
    if (!plan.strata()[j].region.closed() && closed.passed) {
      closed = {"closed", false, "F_" + std::to_string(j) + " has an open primitive"};
    }
  }
  report.checks.push_back(closed);

  CheckResult partition{"partition", true, ""};
  CheckResult section{"section", true, ""};
  CheckResult continuity{"continuity", true, ""};
  if (!graph.passed) {
    for (auto* c : {&partition, &section, &continuity}) {
      c->passed = false;
      c->witness = "skipped: graph mismatch";
    }
  } else {
    Checker checker(plan, params);
    const auto reps = representatives(g);
    for (const auto& x : reps) {
      for (const auto& y : reps) checker.pair(x, y, partition, section);
    }

    bool thin = false;
    for (const auto& s : plan.strata()) {
      thin = thin || thin_partner(s.region, GraphPoint::at_vertex(0)).has_value();
    }
    const double scaled = std::floor(params.delta / 2 * static_cast<double>(kGrid));
    const unsigned long reach =
        scaled < 1 ? 1UL : static_cast<unsigned long>(std::min(scaled, static_cast<double>(kGrid - 1)));
    Rng rng(params.seed);
    for (std::size_t i = 0; i < params.samples; ++i) {
      const GraphPoint x = random_point(g, rng);
      // Every fourth sample targets a thin stratum when the plan has one.
      const Region* target = nullptr;
      if (thin && i % 4 == 3) {
        for (const auto& s : plan.strata()) {
          if (thin_partner(s.region, x)) {
            target = &s.region;
            break;
          }
        }
      }
      const GraphPoint y = target ? *thin_partner(*target, x) : random_point(g, rng);
      checker.pair(x, y, partition, section);

      const Sample x2 = perturb(g, x, reach, rng);
      std::optional<Sample> y2;
      if (target) {
        const GraphPoint partner = *thin_partner(*target, x2.point);
        if (auto m = motion_between(g, y, partner)) y2 = Sample{partner, *m};
      } else {
        y2 = perturb(g, y, reach, rng);
      }
      if (y2 && checker.continuity(x, y, x2, *y2, continuity)) ++report.continuity_pairs;
    }
  }
  report.checks.push_back(partition);
  report.checks.push_back(section);
  report.checks.push_back(continuity);
  return report;
}

}  // namespace wildcat
