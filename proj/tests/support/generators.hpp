#pragma once

// Hand-rolled generators and independent oracles shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wildcat/graph.hpp"
#include "wildcat/space_expr.hpp"
#include "wildcat/wild.hpp"

namespace wildcat::testing {

using Rng = std::mt19937_64;

inline std::string padded(char prefix, std::size_t i) {
  std::string n = std::to_string(i);
  return std::string(1, prefix) + std::string(n.size() < 2 ? 2 - n.size() : 0, '0') + n;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Connected multigraph: a random spanning tree plus extra edges (loops and
/// parallel edges included), at most `max_edges` edges in total.
inline MultiGraph random_connected_graph(Rng& rng, std::size_t max_edges = 20, std::size_t max_vertices = 9) {
  const std::size_t n = uniform(rng, 1, std::min(max_vertices, max_edges + 1));
  GraphSpec spec;
  for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back(padded('v', v));
  std::size_t id = 0;
  for (std::size_t v = 1; v < n; ++v) {
    spec.edges.push_back({padded('e', id++), spec.vertices[v], spec.vertices[uniform(rng, 0, v - 1)]});
  }
  const std::size_t extra = uniform(rng, 0, max_edges - (n - 1));
  for (std::size_t k = 0; k < extra; ++k) {
    spec.edges.push_back({padded('e', id++), spec.vertices[uniform(rng, 0, n - 1)],
                          spec.vertices[uniform(rng, 0, n - 1)]});
  }
  return MultiGraph::build(spec);
}

/// Any multigraph, possibly disconnected or with isolated vertices.
inline MultiGraph random_graph(Rng& rng, std::size_t max_edges = 20) {
  const std::size_t n = uniform(rng, 1, 10);
  GraphSpec spec;
  for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back(padded('v', v));
  const std::size_t m = uniform(rng, 0, max_edges);
  for (std::size_t k = 0; k < m; ++k) {
    spec.edges.push_back({padded('e', k), spec.vertices[uniform(rng, 0, n - 1)],
                          spec.vertices[uniform(rng, 0, n - 1)]});
  }
  return MultiGraph::build(spec);
}

inline MultiGraph named_graph(const std::string& name) {
  GraphSpec s;
  if (name == "point") {
    s = {{"v"}, {}};
  } else if (name == "path") {
    s = {{"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}}};
  } else if (name == "C3") {
    s = {{"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}}};
  } else if (name == "circle") {
    s = {{"a"}, {{"c", "a", "a"}}};
  } else if (name == "circle-with-hair") {
    s = {{"a", "b", "h"}, {{"loop", "a", "a"}, {"ab", "a", "b"}, {"hair", "b", "h"}}};
  } else if (name == "figure-eight") {
    s = {{"o"}, {{"l1", "o", "o"}, {"l2", "o", "o"}}};
  } else if (name == "theta") {
    s = {{"n", "s"}, {{"e1", "n", "s"}, {"e2", "n", "s"}, {"e3", "n", "s"}}};
  } else if (name == "K4") {
    s = {{"a", "b", "c", "d"},
         {{"ab", "a", "b"}, {"ac", "a", "c"}, {"ad", "a", "d"}, {"bc", "b", "c"}, {"bd", "b", "d"}, {"cd", "c", "d"}}};
  }
  return MultiGraph::build(s);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"point", "path", "C3", "circle-with-hair", "figure-eight", "theta", "K4"};
  return names;
}

/// Rank over Q of a dense matrix, by fraction-free elimination on integers.
inline std::size_t integer_rank(std::vector<std::vector<long long>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const long long a = m[rank][c];
      const long long b = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * a - m[rank][k] * b;
      long long g = 0;
      for (long long x : m[r]) g = std::gcd(g, x < 0 ? -x : x);
      if (g > 1) {
        for (long long& x : m[r]) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

/// First Betti number as the nullity of the incidence matrix over Q, with no
/// spanning forest involved.
inline std::size_t betti1_oracle(const MultiGraph& g) {
  std::vector<std::vector<long long>> incidence(g.vertex_count(), std::vector<long long>(g.edge_count(), 0));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) continue;
    incidence[g.edge(e).v0][e] -= 1;
    incidence[g.edge(e).v1][e] += 1;
  }
  return g.edge_count() - integer_rank(incidence);
}

/// Breadth-first distances between vertices (unit edges).
inline std::vector<std::size_t> bfs_distances(const MultiGraph& g, VertexIndex from) {
  std::vector<std::size_t> d(g.vertex_count(), static_cast<std::size_t>(-1));
  std::vector<VertexIndex> queue{from};
  d[from] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexIndex v = queue[i];
    for (EdgeIndex e : g.incident(v)) {
      const VertexIndex w = g.opposite(e, v);
      if (d[w] == static_cast<std::size_t>(-1)) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

inline GraphPoint random_point(Rng& rng, const MultiGraph& g) {
  if (g.edge_count() == 0 || uniform(rng, 0, 3) == 0) return GraphPoint::at_vertex(uniform(rng, 0, g.vertex_count() - 1));
  const long den = static_cast<long>(uniform(rng, 2, 12));
  return GraphPoint::on_edge(g, uniform(rng, 0, g.edge_count() - 1), ratio(static_cast<long>(uniform(rng, 1, den - 1)), den));
}

// ---------------------------------------------------------------------------
// Space expressions

/// Small base graphs: point, arc, circle, figure-eight, theta, circle with a hair.
inline std::shared_ptr<const MultiGraph> random_base(Rng& rng, std::string& name) {
  static const char* names[] = {"point", "path", "circle", "figure-eight", "theta", "circle-with-hair", "C3"};
  name = names[uniform(rng, 0, 6)];
  return std::make_shared<const MultiGraph>(named_graph(name));
}

inline PointRef random_point_ref(Rng& rng, const MultiGraph& g) {
  if (g.edge_count() == 0 || uniform(rng, 0, 1) == 0) {
    return PointRef::vertex(g.vertex_id(uniform(rng, 0, g.vertex_count() - 1)));
  }
  return PointRef::edge(g.edge_id(uniform(rng, 0, g.edge_count() - 1)), ratio(1, 2));
}

inline Subcomplex random_subcomplex(Rng& rng, const MultiGraph& g) {
  std::vector<std::string> ids;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (uniform(rng, 0, 3) == 0) ids.push_back(g.vertex_id(v));
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (uniform(rng, 0, 2) == 0) ids.push_back(g.edge_id(e));
  }
  if (ids.empty()) ids.push_back(g.vertex_id(0));
  return make_subcomplex(g, ids);
}

/// A w-stable expression with sequence nesting at most `depth`. Anchors of
/// families whose pattern has wild points are put on the pattern's wild set;
/// patterns with a disconnected wild set are only used as finite attachments.
inline ExprPtr random_stable_expr(Rng& rng, std::size_t depth);

inline ExprPtr random_expr_attempt(Rng& rng, std::size_t depth) {
  std::string name;
  auto base = random_base(rng, name);
  std::vector<Attachment> fin;
  std::vector<SeqFamily> seq;
  if (depth > 0) {
    const std::size_t families = uniform(rng, 0, 2);
    for (std::size_t i = 0; i < families; ++i) {
      ExprPtr pattern = random_stable_expr(rng, depth - 1);
      const auto w = wild_set(*pattern);
      const MultiGraph& pb = *pattern->node()->base;
      if (w.size() > 1) {
        fin.push_back({random_point_ref(rng, *base), pattern, random_point_ref(rng, pb)});
        continue;
      }
      PointRef anchor = random_point_ref(rng, pb);
      if (w.size() == 1) {
        const MultiGraph& wb = *w[0]->node()->base;
        anchor = PointRef::vertex(wb.vertex_id(uniform(rng, 0, wb.vertex_count() - 1)));
        if (!pb.find_vertex(anchor.id)) {  // the wild piece sits on an attachment
          fin.push_back({random_point_ref(rng, *base), pattern, random_point_ref(rng, pb)});
          continue;
        }
      }
      seq.push_back({random_subcomplex(rng, *base), pattern, anchor});
    }
    if (uniform(rng, 0, 2) == 0) {
      ExprPtr child = random_stable_expr(rng, depth - 1);
      fin.push_back({random_point_ref(rng, *base), child, random_point_ref(rng, *child->node()->base)});
    }
  }
  return make_node(name, base, std::move(fin), std::move(seq));
}

inline ExprPtr random_stable_expr(Rng& rng, std::size_t depth) {
  for (;;) {
    ExprPtr e = random_expr_attempt(rng, depth);
    if (is_w_stable(*e).stable) return e;
  }
}

}  // namespace wildcat::testing
