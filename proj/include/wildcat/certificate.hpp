#pragma once

#include <string>
#include <vector>

#include "wildcat/wild.hpp"

namespace wildcat {

enum class CertificateKind { kCat, kTc };
std::string to_string(CertificateKind k);

/// Reason labels: contractible-pieces, dendrite-pieces, spanning-tree-pieces,
/// graph-minus-tree-pieces, product-box, circle-antidiagonal.
struct CertificateLevel {
  std::string label;
  std::string description;
};

/// A filtration F_0 ⊆ ... ⊆ F_length written symbolically, one entry per
/// difference F_j \ F_{j-1}.
struct Certificate {
  CertificateKind kind;
  std::vector<CertificateLevel> levels;
  std::size_t length = 0;
};

bool is_reason_label(const std::string& label);

/// Throw InfiniteRankError when the rank is infinite and
/// UnstableExpressionError for unstable expressions.
Certificate cat_certificate(const SpaceExpr& e);
Certificate tc_certificate(const SpaceExpr& e);
Certificate cat_certificate(const WildProfile& p, const SpaceExpr& e);
Certificate tc_certificate(const WildProfile& p, const SpaceExpr& e);

}  // namespace wildcat
