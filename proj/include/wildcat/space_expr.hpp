#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wildcat/graph.hpp"

namespace wildcat {

/// A point written against some graph by id: (vertex a) or (edge e 1/3).
/// Resolution is deferred so that anchors on atoms can be carried along.
struct PointRef {
  bool on_edge = false;
  std::string id;
  Rational t = 0;

  static PointRef vertex(std::string id) { return {false, std::move(id), 0}; }
  static PointRef edge(std::string id, Rational t) { return {true, std::move(id), std::move(t)}; }

  /// Throws GraphError if the id does not name a vertex / edge of g or t is
  /// outside [0,1].
  GraphPoint resolve(const MultiGraph& g) const;

  friend bool operator==(const PointRef&, const PointRef&) = default;
};

/// Closed subcomplex: listed vertices plus listed edges with their endpoints.
struct Subcomplex {
  std::vector<VertexIndex> vertices;  // sorted, only those listed
  std::vector<EdgeIndex> edges;       // sorted

  bool empty() const { return vertices.empty() && edges.empty(); }
  /// Every vertex of the closure, sorted.
  std::vector<VertexIndex> closure_vertices(const MultiGraph& g) const;
  friend bool operator==(const Subcomplex&, const Subcomplex&) = default;
};

/// Resolves a list of vertex/edge ids. Throws GraphError(kUnknownIdentifier).
Subcomplex make_subcomplex(const MultiGraph& g, const std::vector<std::string>& ids);
std::vector<std::string> subcomplex_ids(const MultiGraph& g, const Subcomplex& k);
/// The closure of k as a graph, keeping ids.
MultiGraph subcomplex_graph(const MultiGraph& g, const Subcomplex& k);

struct SpaceExpr;
using ExprPtr = std::shared_ptr<const SpaceExpr>;

struct Attachment {
  PointRef at;      // on the parent base
  ExprPtr child;
  PointRef anchor;  // on the child
};

/// Null sequence of shrinking copies of `pattern` accumulating on `k`.
struct SeqFamily {
  Subcomplex k;
  ExprPtr pattern;
  PointRef anchor;  // on the pattern
};

struct Node {
  std::string base_name;
  std::shared_ptr<const MultiGraph> base;
  std::vector<Attachment> fin;
  std::vector<SeqFamily> seq;
};

/// A space equal to its own wild set.
struct SelfWild {};
/// A space whose wild set is non-empty, zero-dimensional and inside a dendrite.
struct ZeroDimWild {};

struct SpaceExpr {
  std::variant<Node, SelfWild, ZeroDimWild> value;

  const Node* node() const { return std::get_if<Node>(&value); }
  bool is_self_wild() const { return std::holds_alternative<SelfWild>(value); }
  bool is_zero_dim_wild() const { return std::holds_alternative<ZeroDimWild>(value); }
};

/// Validates attach points, anchors on node children and subcomplexes, and
/// rejects empty subcomplexes. Throws GraphError.
ExprPtr make_node(std::string base_name, std::shared_ptr<const MultiGraph> base,
                  std::vector<Attachment> fin = {}, std::vector<SeqFamily> seq = {});
ExprPtr make_graph_expr(std::string name, std::shared_ptr<const MultiGraph> base);
ExprPtr make_self_wild();
ExprPtr make_zero_dim_wild();

/// Same tree shape, base names and graphs, points and subcomplexes.
bool structurally_equal(const SpaceExpr& a, const SpaceExpr& b);

bool contains_self_wild(const SpaceExpr& e);
bool contains_zero_dim_wild(const SpaceExpr& e);
/// Maximal nesting of sequence families.
std::size_t seq_depth(const SpaceExpr& e);

}  // namespace wildcat
