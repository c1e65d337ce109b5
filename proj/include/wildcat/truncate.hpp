#pragma once

#include "wildcat/space_expr.hpp"

namespace wildcat {

/// Finite approximation: every sequence family becomes `depth` copies of its
/// truncated pattern, spread round-robin over the edges and listed vertices
/// of K (in id order) at evenly spaced parameters. Finite attachments are
/// expanded recursively.
///
/// Generated ids: attachment i of a node gets the prefix "f<i>.", copy c of
/// family i the prefix "s<i>.<c>."; an edge cut at t becomes vertices
/// "<edge>#<num>:<den>" and pieces "<edge>#0", "<edge>#1", ... Glued vertices
/// keep the id on the parent side. Throws AtomError on selfwild/zerodimwild.
MultiGraph truncate(const SpaceExpr& e, std::size_t depth);

}  // namespace wildcat
