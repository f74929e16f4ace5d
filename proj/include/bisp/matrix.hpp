#pragma once

#include "bisp/poly.hpp"
#include "bisp/tripoly.hpp"

#include <cstddef>
#include <vector>

namespace bisp {

/// Rectangular matrix of polynomials in x, z, xi. Dimensions are positive.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  TriPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const TriPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  /// Matrix with row i and column j removed.
  PolyMatrix minor(std::size_t i, std::size_t j) const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<TriPoly> e_;
};

using PolyGrid = std::vector<std::vector<Poly>>;

/// Determinant over Q[x] by Bareiss fraction-free elimination.
Poly det_bareiss(PolyGrid m);

/// Exact determinant over Q[x, z, xi]. Columns free of z and xi are eliminated
/// fraction-free over Q[x]; up to two symbolic columns are removed by cofactor
/// expansion first, otherwise Bareiss runs over the trivariate ring.
/// Throws std::invalid_argument for a non-square matrix.
TriPoly det_fraction_free(const PolyMatrix& m);

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

/// Solution set of A x = b: empty `particular` with consistent = false when
/// no solution exists; otherwise x = particular + span(nullspace).
struct LinearSolution {
  bool consistent = false;
  RatVector particular;
  std::vector<RatVector> nullspace;
};

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols);

/// Exact solve over Q. `cols` is needed when A has no rows. Throws
/// std::invalid_argument on dimension mismatch.
LinearSolution solve_linear(const RatMatrix& a, const RatVector& b, std::size_t cols);

/// Basis of {v : A v = 0}, one vector per free column, with a 1 in that column.
std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t cols);

/// Rank over Q.
std::size_t rank(RatMatrix a, std::size_t cols);

}  // namespace bisp
