#include "bisp/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace bisp {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("PolyMatrix: dimensions must be positive");
}

PolyMatrix PolyMatrix::minor(std::size_t i, std::size_t j) const {
  if (rows_ < 2 || cols_ < 2) throw std::invalid_argument("PolyMatrix::minor of a single row or column");
  PolyMatrix r(rows_ - 1, cols_ - 1);
  for (std::size_t a = 0, ra = 0; a < rows_; ++a) {
    if (a == i) continue;
    for (std::size_t b = 0, rb = 0; b < cols_; ++b) {
      if (b == j) continue;
      r(ra, rb++) = (*this)(a, b);
    }
    ++ra;
  }
  return r;
}

Poly det_bareiss(PolyGrid m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_bareiss: non-square matrix");
  bool negate = false;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.degree() == 0 ? t * (Rational(1) / prev.lead()) : exact_divide(t, prev);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly d = std::move(m[n - 1][n - 1]);
  return negate ? -d : d;
}

namespace {

std::vector<std::size_t> symbolic_columns(const PolyMatrix& m) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_pure_x()) {
        cols.push_back(j);
        break;
      }
    }
  }
  return cols;
}

TriPoly det_bareiss_tri(const PolyMatrix& src) {
  const std::size_t n = src.rows();
  std::vector<std::vector<TriPoly>> m(n, std::vector<TriPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = src(i, j);
  bool negate = false;
  TriPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = TriPoly();
    }
    prev = m[k][k];
  }
  TriPoly d = std::move(m[n - 1][n - 1]);
  return negate ? -d : d;
}

}  // namespace

TriPoly det_fraction_free(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_fraction_free: non-square matrix");
  const std::size_t n = m.rows();
  auto sym = symbolic_columns(m);
  if (sym.empty()) {
    PolyGrid g(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i][j] = m(i, j).to_poly_x();
    return TriPoly::from_x(det_bareiss(std::move(g)));
  }
  if (sym.size() > 2) return det_bareiss_tri(m);
  if (n == 1) return m(0, 0);
  const std::size_t j = sym.front();
  TriPoly det;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, j).is_zero()) continue;
    TriPoly cof = m(i, j) * det_fraction_free(m.minor(i, j));
    if ((i + j) % 2 == 1) det -= cof;
    else det += cof;
  }
  return det;
}

std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t k = col; k < a[i].size(); ++k) a[i][k] -= f * a[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LinearSolution solve_linear(const RatMatrix& a, const RatVector& b, std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row count of A differs from length of b");
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug, cols + 1);
  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == cols) return sol;
  sol.consistent = true;
  sol.particular.assign(cols, Rational());
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug[r][cols];
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t cols) {
  return solve_linear(a, RatVector(a.size()), cols).nullspace;
}

std::size_t rank(RatMatrix a, std::size_t cols) { return rref(a, cols).size(); }

}  // namespace bisp
