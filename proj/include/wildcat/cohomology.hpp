#pragma once

#include <vector>

#include "wildcat/graph.hpp"
#include "wildcat/rational.hpp"

namespace wildcat {

/// Dense matrix over the rationals, just large enough for the Kunneth
/// computations on graphs.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t rank() const;
  /// Basis of {x : A x = 0}, one vector per free column of the reduced form.
  std::vector<std::vector<Rational>> nullspace() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of H^1(g; Q): one class per edge outside the canonical spanning
/// forest, dual to that edge's fundamental cycle. Ordered by edge id.
struct CocycleBasis {
  std::vector<EdgeIndex> generators;
  std::size_t dimension() const { return generators.size(); }
};

CocycleBasis h1_basis(const MultiGraph& g);

/// Homogeneous element of H^*(g x g; Q) in degree 1 or 2. Degree 1 lives in
/// H^1 (x) H^0 + H^0 (x) H^1 (vectors `left`, `right`); degree 2 is H^1 (x) H^1
/// (matrix), the only degree-2 summand for graphs.
class KunnethElement {
 public:
  static KunnethElement degree_one(std::vector<Rational> left, std::vector<Rational> right);
  static KunnethElement degree_two(RationalMatrix h1h1);

  int degree() const { return degree_; }
  const std::vector<Rational>& left() const { return left_; }
  const std::vector<Rational>& right() const { return right_; }
  const RationalMatrix& h1h1() const { return h1h1_; }
  bool is_zero() const;

  /// Cup product. (a(x)1)(1(x)b) = a(x)b and (1(x)a)(b(x)1) = -b(x)a; all
  /// products landing in degree 3 or higher vanish.
  KunnethElement cup(const KunnethElement& other) const;

 private:
  int degree_ = 1;
  std::vector<Rational> left_;
  std::vector<Rational> right_;
  RationalMatrix h1h1_;
};

/// a(x)1 - 1(x)a for a class a given in the h1_basis coordinates.
KunnethElement zero_divisor(const std::vector<Rational>& a);

/// Degree-1 part of the kernel of the diagonal map, computed as a nullspace.
std::vector<KunnethElement> diagonal_kernel_degree_one(std::size_t dimension);

/// Longest non-vanishing product of zero-divisors (0, 1 or 2 for graphs).
std::size_t zero_divisor_cuplength(const MultiGraph& g);

/// Cohomological lower bound for TC; equals tc_graph(g) on every graph.
std::size_t tc_lower_bound(const MultiGraph& g);

}  // namespace wildcat
