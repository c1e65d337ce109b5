#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wildcat/space_expr.hpp"

namespace wildcat {

/// Space-description document:
///
///   graph NAME            # graph records up to `end`
///   vertex a
///   edge e a a
///   end
///   expr NAME (node (base NAME) (seqfam (a) (graph C) (vertex x)))
///   main NAME
///
/// A file holding only vertex/edge records is read as one graph named "main".
struct SpaceFile {
  struct NamedGraph {
    std::string name;
    std::shared_ptr<const MultiGraph> graph;
  };
  struct NamedExpr {
    std::string name;
    ExprPtr expr;
  };

  std::vector<NamedGraph> graphs;
  std::vector<NamedExpr> exprs;
  std::string main;

  std::shared_ptr<const MultiGraph> find_graph(std::string_view name) const;
  ExprPtr find_expr(std::string_view name) const;
  /// The main definition as an expression; a graph becomes (graph NAME).
  ExprPtr main_expr() const;
  /// The named graph, or an expression without attachments over one. Throws
  /// Error for any other target.
  std::shared_ptr<const MultiGraph> plain_graph(std::string_view name) const;
};

/// Throws ParseError with the position of the first problem.
SpaceFile parse_space_file(std::string_view text);
SpaceFile read_space_file(const std::filesystem::path& path);

std::string print_space_file(const SpaceFile& file);
std::string print_expr(const SpaceExpr& e);
/// `vertex` and `edge` records, one per line, in id order.
std::string format_graph(const MultiGraph& g);

bool structurally_equal(const SpaceFile& a, const SpaceFile& b);

}  // namespace wildcat
