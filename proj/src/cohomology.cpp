#include "wildcat/cohomology.hpp"

#include <algorithm>

#include "wildcat/graph_algorithms.hpp"

namespace wildcat {

namespace {

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> as_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  return rows;
}

}  // namespace

bool RationalMatrix::is_zero() const { return all_zero(data_); }

std::size_t RationalMatrix::rank() const {
  auto rows = as_rows(*this);
  return row_reduce(rows, cols_).size();
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  auto rows = as_rows(*this);
  const auto pivots = row_reduce(rows, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

CocycleBasis h1_basis(const MultiGraph& g) {
  require_connected(g, "h1_basis");
  return {complement(g, spanning_forest(g))};
}

KunnethElement KunnethElement::degree_one(std::vector<Rational> left, std::vector<Rational> right) {
  KunnethElement x;
  x.degree_ = 1;
  x.left_ = std::move(left);
  x.right_ = std::move(right);
  return x;
}

KunnethElement KunnethElement::degree_two(RationalMatrix h1h1) {
  KunnethElement x;
  x.degree_ = 2;
  x.h1h1_ = std::move(h1h1);
  return x;
}

bool KunnethElement::is_zero() const {
  return degree_ == 1 ? all_zero(left_) && all_zero(right_) : h1h1_.is_zero();
}

KunnethElement KunnethElement::cup(const KunnethElement& other) const {
  const std::size_t n = degree_ == 1 ? left_.size() : h1h1_.rows();
  RationalMatrix m(n, n);
  if (degree_ == 1 && other.degree_ == 1) {
    // x y = sum_ij (l_i r'_j - r_j l'_i) e_i (x) e_j
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = left_[i] * other.right_[j] - other.left_[i] * right_[j];
      }
    }
  }
  // Anything else has degree >= 3 and vanishes; it is reported as a zero
  // degree-2 matrix, which is enough for non-vanishing tests.
  return degree_two(std::move(m));
}

KunnethElement zero_divisor(const std::vector<Rational>& a) {
  std::vector<Rational> minus(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) minus[i] = -a[i];
  return KunnethElement::degree_one(a, std::move(minus));
}

std::vector<KunnethElement> diagonal_kernel_degree_one(std::size_t dimension) {
  // The diagonal pulls a(x)1 and 1(x)a back to a, so on degree 1 it is [I | I].
  RationalMatrix diagonal(dimension, 2 * dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    diagonal(i, i) = 1;
    diagonal(i, dimension + i) = 1;
  }
  std::vector<KunnethElement> kernel;
  for (auto& v : diagonal.nullspace()) {
    std::vector<Rational> left(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dimension));
    std::vector<Rational> right(v.begin() + static_cast<std::ptrdiff_t>(dimension), v.end());
    kernel.push_back(KunnethElement::degree_one(std::move(left), std::move(right)));
  }
  return kernel;
}

std::size_t zero_divisor_cuplength(const MultiGraph& g) {
  const CocycleBasis basis = h1_basis(g);
  const auto kernel = diagonal_kernel_degree_one(basis.dimension());
  const bool any_nonzero =
      std::any_of(kernel.begin(), kernel.end(), [](const auto& k) { return !k.is_zero(); });
  if (!any_nonzero) return 0;
  // Products are bilinear, so a non-zero product exists iff one exists among
  // basis elements. Longer products live in degree >= 3.
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = i; j < kernel.size(); ++j) {
      if (!kernel[i].cup(kernel[j]).is_zero()) return 2;
    }
  }
  return 1;
}

std::size_t tc_lower_bound(const MultiGraph& g) { return zero_divisor_cuplength(g); }

}  // namespace wildcat
