#pragma once

#include <json.hpp>

#include "wildcat/certificate.hpp"
#include "wildcat/verify.hpp"
#include "wildcat/wild.hpp"

namespace wildcat {

/// Report keys, in output order: wrk, cat, tc, stable, scc_class, tower, and
/// optionally certificates and verification. Infinite values print as "inf".
nlohmann::ordered_json report_json(const WildProfile& p, const SpaceExpr& e);
nlohmann::ordered_json certificate_json(const Certificate& c);
nlohmann::ordered_json verification_json(const VerificationReport& r);

/// The keys a report may carry.
bool is_report_key(const std::string& key);

/// Graphviz text; edges listed in `highlight` are drawn bold.
std::string graph_dot(const MultiGraph& g, const std::vector<EdgeIndex>& highlight = {});

}  // namespace wildcat
