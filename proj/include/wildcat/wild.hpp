#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wildcat/space_expr.hpp"

namespace wildcat {

/// A natural number or infinity.
struct ExtNat {
  std::optional<std::size_t> value;  // empty means infinite

  static ExtNat of(std::size_t n) { return {n}; }
  static ExtNat infinite() { return {std::nullopt}; }
  bool is_infinite() const { return !value.has_value(); }
  std::size_t operator*() const { return *value; }
  std::string str() const { return value ? std::to_string(*value) : "inf"; }
  friend bool operator==(const ExtNat&, const ExtNat&) = default;
};

enum class SccClass { kNone, kOne, kMany };
std::string to_string(SccClass c);
SccClass scc_class_of(const ExtNat& top_b1);

struct Stability {
  bool stable = true;
  std::string diagnostic;
};

/// Every sequence family whose pattern has a non-empty wild set needs that
/// wild set to be one piece of the pattern's base containing the anchor; the
/// same must hold on every iterated wild set.
Stability is_w_stable(const SpaceExpr& e);

/// Some base or nested pattern has a cycle; atoms count as containing one.
bool contains_scc(const SpaceExpr& e);

/// First Betti number, infinite as soon as the space has wild points.
ExtNat betti1_expr(const SpaceExpr& e);

/// w(e) as a list of connected pieces. Pieces coming from the sequence
/// families of a node live on subgraphs of its base and keep its ids. Throws
/// UnstableExpressionError or AtomError (for zerodimwild).
std::vector<ExprPtr> wild_set(const SpaceExpr& e);

struct LevelSummary {
  ExtNat pieces;
  ExtNat betti1;
  std::vector<ExprPtr> exprs;  // empty for levels with no symbolic form
};

struct WildProfile {
  std::vector<LevelSummary> tower;  // w^0, w^1, ... ; cut after one repeat when self-similar
  ExtNat wrk;
  ExtNat top_b1;
  SccClass scc = SccClass::kNone;
  bool stable = true;
  std::string diagnostic;
};

/// Throws UnstableExpressionError for unstable expressions without
/// special-case coverage.
WildProfile profile(const SpaceExpr& e);
ExtNat wrk(const SpaceExpr& e);
ExtNat cat(const SpaceExpr& e);
ExtNat tc(const SpaceExpr& e);

/// cat and tc read from a profile.
ExtNat cat_of(const WildProfile& p, const SpaceExpr& e);
ExtNat tc_of(const WildProfile& p, const SpaceExpr& e);

}  // namespace wildcat
