#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wildcat/graph.hpp"
#include "wildcat/region.hpp"

namespace wildcat {

/// Filtration F_0 c ... c F_n = G by closed subcomplexes, each listed as
/// vertex and closed-edge cells.
struct GraphFiltration {
  std::shared_ptr<const MultiGraph> graph;
  std::vector<std::vector<Cell>> levels;

  std::size_t length() const { return levels.size() - 1; }
  /// Smallest j with p in F_j, or levels.size() if p is in none.
  std::size_t level_of(const GraphPoint& p) const;
};

/// [T, G] for a spanning tree T, or [G] for a tree.
GraphFiltration cat_filtration(const MultiGraph& g);

struct FiltrationCheck {
  bool closed = true;
  bool nested = true;
  bool covers = true;
  bool categorical = true;
  /// Product filtrations only: H_k is hit exactly at level i + j.
  bool levels_match = true;
  std::string witness;

  bool ok() const { return closed && nested && covers && categorical && levels_match; }
};

/// Exact check over cells: each difference must contain no cycle, which for a
/// union of cells of a graph is the same as being null-homotopic in G.
FiltrationCheck check_cat_filtration(const GraphFiltration& f);

/// H_k = union of F_i x G_j over i + j = k.
struct ProductFiltration {
  GraphFiltration first;
  GraphFiltration second;
  std::vector<Region> levels;
  /// (i, j) pairs making up each level.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pieces;

  std::size_t length() const { return levels.size() - 1; }
};

/// Throws FiltrationError if either input fails check_cat_filtration.
ProductFiltration product_cat_filtration(const GraphFiltration& f, const GraphFiltration& g);

/// Exhaustive over pairs of open cells. Differences are categorical when the
/// factor differences are and the pieces of each difference are separated.
FiltrationCheck check_product_filtration(const ProductFiltration& h);

}  // namespace wildcat
