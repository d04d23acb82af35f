#pragma once
#include <optional>
#include <vector>

#include "canrel/rational.hpp"

namespace canrel {

/* Dense row-major matrix over Q.  Dimensions up to a few hundred; everything
 * downstream is O(n^3) exact elimination, kept honest by zero-skipping. */
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols_if_empty = 0);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Vec row(size_t i) const;
  void set_row(size_t i, const Vec& v);
  bool is_zero() const;

  Matrix transpose() const;
  /* columns [lo, hi) */
  Matrix col_slice(size_t lo, size_t hi) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y);
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

/* Reduced row echelon form; same shape, row space preserved.  If pivots is
 * non-null it receives the pivot column of each nonzero row. */
Matrix rref(Matrix m, std::vector<size_t>* pivots = nullptr);
size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);  // PreconditionError if not square invertible

/* Basis rows of the right kernel {v : m v = 0}, one per free column; raw
 * (not canonicalized).  Shape (cols - rank) x cols. */
Matrix kernel_rows(const Matrix& m);

/* Particular solution of A x = b (free variables set to 0), if consistent. */
std::optional<Vec> solve(const Matrix& A, const Vec& b);
/* Columnwise: X with A X = B. */
std::optional<Matrix> solve_matrix(const Matrix& A, const Matrix& B);

}  // namespace canrel
