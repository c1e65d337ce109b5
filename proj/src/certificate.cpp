#include "wildcat/certificate.hpp"

#include <algorithm>

namespace wildcat {

namespace {

const char* kContractible = "contractible-pieces";
const char* kDendrite = "dendrite-pieces";
const char* kSpanningTree = "spanning-tree-pieces";
const char* kGraphMinusTree = "graph-minus-tree-pieces";
const char* kProductBox = "product-box";
const char* kAntidiagonal = "circle-antidiagonal";

std::size_t finite_rank(const WildProfile& p) {
  if (p.wrk.is_infinite()) throw InfiniteRankError("wildness rank is infinite, so no finite filtration exists");
  return *p.wrk;
}

std::string level_text(const WildProfile& p, std::size_t k) {
  const auto& l = p.tower[k];
  return "w^" + std::to_string(k) + "(X): " + l.pieces.str() + " piece(s), b1 " + l.betti1.str();
}

// The cat tower as a list of differences, lowest level first.
std::vector<CertificateLevel> cat_levels(const WildProfile& p, const SpaceExpr& e) {
  std::vector<CertificateLevel> out;
  if (e.is_zero_dim_wild()) {
    out.push_back({kDendrite, "neighbourhood of the zero-dimensional wild set inside a dendrite"});
    out.push_back({kContractible, "complement: disjoint open contractible sets"});
    return out;
  }
  const std::size_t n = finite_rank(p);
  const std::size_t top = n - 1;
  if (p.scc == SccClass::kNone) {
    out.push_back({kDendrite, "neighbourhood retracting onto " + level_text(p, top)});
  } else {
    out.push_back({kSpanningTree, "spanning trees of the cores of " + level_text(p, top)});
    out.push_back({kGraphMinusTree, "open edges off the spanning trees of " + level_text(p, top)});
  }
  for (std::size_t k = top; k-- > 0;) {
    out.push_back({kContractible, "neighbourhood of " + level_text(p, k) + " minus the previous level"});
  }
  return out;
}

}  // namespace

std::string to_string(CertificateKind k) { return k == CertificateKind::kCat ? "cat" : "tc"; }

bool is_reason_label(const std::string& label) {
  for (const char* l : {kContractible, kDendrite, kSpanningTree, kGraphMinusTree, kProductBox, kAntidiagonal}) {
    if (label == l) return true;
  }
  return false;
}

Certificate cat_certificate(const WildProfile& p, const SpaceExpr& e) {
  Certificate c{CertificateKind::kCat, cat_levels(p, e), 0};
  c.length = c.levels.size() - 1;
  return c;
}

Certificate tc_certificate(const WildProfile& p, const SpaceExpr& e) {
  const auto f = cat_levels(p, e);
  const std::size_t m = f.size() - 1;  // H_k = union of F_i x F_j over i+j = k, k <= 2m
  std::vector<CertificateLevel> out;
  if (e.is_zero_dim_wild() || p.scc == SccClass::kNone) {
    out.push_back({kDendrite, "H_0 = F_0 x F_0, both factors retract onto dendrites"});
  } else if (p.scc == SccClass::kOne) {
    // F_0 and F_1 are spanning-tree and off-tree pieces of the one circle.
    out.push_back({kAntidiagonal, "pairs on the circle that are not antipodal, with F_0 x F_0"});
    out.push_back({kAntidiagonal, "antipodal pairs on the circle, with F_0 x F_1 and F_1 x F_0"});
  } else {
    out.push_back({kSpanningTree, "K^0 = T x T"});
    out.push_back({kGraphMinusTree, "K^1 = (G - T) x T and T x (G - T)"});
    out.push_back({kGraphMinusTree, "K^2 = (G - T) x (G - T)"});
  }
  // The antidiagonal splitting saves one level when the top has one circle.
  const std::size_t count = !e.is_zero_dim_wild() && p.scc == SccClass::kOne ? 2 * m : 2 * m + 1;
  for (std::size_t k = out.size(); k < count; ++k) {
    out.push_back({kProductBox, "H_" + std::to_string(k) + " = union of F_i x F_j with i + j = " + std::to_string(k)});
  }
  Certificate c{CertificateKind::kTc, std::move(out), 0};
  c.length = c.levels.size() - 1;
  return c;
}

Certificate cat_certificate(const SpaceExpr& e) { return cat_certificate(profile(e), e); }
Certificate tc_certificate(const SpaceExpr& e) { return tc_certificate(profile(e), e); }

}  // namespace wildcat
