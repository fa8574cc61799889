#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "skewbi/rational.hpp"

namespace skewbi {

// Dense matrix over exact rationals, row-major. All arithmetic is exact;
// there is no floating point anywhere in this library.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols,
         std::initializer_list<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Rational trace() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator-() const;
  Matrix operator*(const Rational& scalar) const;
  bool operator==(const Matrix& other) const = default;

  // Appends the columns of `other` on the right (row counts must match).
  Matrix hcat(const Matrix& other) const;
  Matrix column(std::size_t c) const;

  friend Matrix operator*(const Rational& scalar, const Matrix& m) {
    return m * scalar;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

// Reduced row echelon form via plain Gaussian elimination with exact
// pivoting; first nonzero pivot by row order. Returns pivot column indices.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(Matrix m);

// Basis of the right null space, as columns of the returned matrix
// (cols == nullity; empty matrix for trivial kernel).
Matrix kernel_basis(const Matrix& m);

// kernel_basis(m - lambda * I); m must be square.
Matrix eigenspace(const Matrix& m, const Rational& lambda);

// Solves a * x = b columnwise. Returns std::nullopt if any column of b is
// outside the column span of a. When the solution is underdetermined the
// free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Inverse of a square matrix; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// Characteristic polynomial coefficients c[0..n] with
// det(xI - m) = sum c[k] x^k (monic: c[n] = 1). Faddeev--LeVerrier.
std::vector<Rational> characteristic_polynomial(const Matrix& m);

// All rational roots of the polynomial sum c[k] x^k with multiplicities,
// obtained by candidate enumeration (denominators 1 and 2 first, then the
// full rational-root candidates) and repeated deflation. Returns
// std::nullopt when a nonconstant factor without rational roots remains.
struct RationalRoots {
  std::vector<std::pair<Rational, std::size_t>> roots;  // (root, multiplicity)
};
std::optional<RationalRoots> rational_roots(std::vector<Rational> coeffs);

// Dimension of the unital matrix algebra generated by `gens` (all square
// of equal size), computed by saturating the span of words.
std::size_t generated_algebra_dimension(const std::vector<Matrix>& gens);

// Given the symmetric off-diagonal support of a square relation, returns an
// index ordering under which the support is exactly tridiagonal, i.e. the
// support graph is a simple path. std::nullopt when a vertex has degree > 2
// or the graph is disconnected.
std::optional<std::vector<std::size_t>> path_order(
    const std::vector<std::vector<bool>>& offdiag_support);

}  // namespace skewbi
