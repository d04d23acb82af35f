#include "canrel/matrix.hpp"

#include <utility>

#include "canrel/errors.hpp"

namespace canrel {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols_if_empty) {
  size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw TypeMismatchError("ragged row list");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(size_t i) const {
  Vec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
  if (v.size() != cols_) throw TypeMismatchError("set_row: length mismatch");
  for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::col_slice(size_t lo, size_t hi) const {
  if (lo > hi || hi > cols_) throw TypeMismatchError("col_slice out of range");
  Matrix m(rows_, hi - lo);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = lo; j < hi; ++j) m.at(i, j - lo) = at(i, j);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw TypeMismatchError("apply: length mismatch");
  Vec out(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw TypeMismatchError("matrix product shape mismatch");
  Matrix z(x.rows_, y.cols_);
  for (size_t i = 0; i < x.rows_; ++i)
    for (size_t k = 0; k < x.cols_; ++k) {
      const Rat& f = x.at(i, k);
      if (f == 0) continue;
      for (size_t j = 0; j < y.cols_; ++j)
        if (y.at(k, j) != 0) z.at(i, j) += f * y.at(k, j);
    }
  return z;
}

bool operator==(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  for (size_t i = 0; i < x.a_.size(); ++i)
    if (x.a_[i] != y.a_[i]) return false;
  return true;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw TypeMismatchError("vstack width mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  for (size_t i = 0; i < top.rows(); ++i)
    for (size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
  for (size_t i = 0; i < bottom.rows(); ++i)
    for (size_t j = 0; j < top.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
  return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw TypeMismatchError("hstack height mismatch");
  Matrix m(left.rows(), left.cols() + right.cols());
  for (size_t i = 0; i < left.rows(); ++i) {
    for (size_t j = 0; j < left.cols(); ++j) m.at(i, j) = left.at(i, j);
    for (size_t j = 0; j < right.cols(); ++j) m.at(i, left.cols() + j) = right.at(i, j);
  }
  return m;
}

Matrix rref(Matrix m, std::vector<size_t>* pivots) {
  if (pivots) pivots->clear();
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    if (m.at(r, c) != 1) {
      Rat inv = 1 / m.at(r, c);
      m.at(r, c) = 1;
      for (size_t j = c + 1; j < m.cols(); ++j)
        if (m.at(r, j) != 0) m.at(r, j) *= inv;
    }
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      m.at(i, c) = 0;
      for (size_t j = c + 1; j < m.cols(); ++j)
        if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

size_t rank(const Matrix& m) {
  std::vector<size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse: not square");
  size_t n = m.rows();
  std::vector<size_t> piv;
  Matrix r = rref(hstack(m, Matrix::identity(n)), &piv);
  if (piv.size() != n || (n > 0 && piv[n - 1] >= n))
    throw PreconditionError("inverse: singular matrix");
  return r.col_slice(n, 2 * n);
}

Matrix kernel_rows(const Matrix& m) {
  std::vector<size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : piv) is_pivot[c] = true;
  Matrix out(m.cols() - piv.size(), m.cols());
  size_t k = 0;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    out.at(k, fc) = 1;
    for (size_t i = 0; i < piv.size(); ++i)
      if (r.at(i, fc) != 0) out.at(k, piv[i]) = -r.at(i, fc);
    ++k;
  }
  return out;
}

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
  if (b.size() != A.rows()) throw TypeMismatchError("solve: rhs length mismatch");
  Matrix col(A.rows(), 1);
  for (size_t i = 0; i < A.rows(); ++i) col.at(i, 0) = b[i];
  std::vector<size_t> piv;
  Matrix r = rref(hstack(A, col), &piv);
  if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;  // inconsistent
  Vec x(A.cols());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, A.cols());
  return x;
}

std::optional<Matrix> solve_matrix(const Matrix& A, const Matrix& B) {
  if (B.rows() != A.rows()) throw TypeMismatchError("solve_matrix: shape mismatch");
  std::vector<size_t> piv;
  Matrix r = rref(hstack(A, B), &piv);
  Matrix x(A.cols(), B.cols());
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= A.cols()) return std::nullopt;  // inconsistent column
    for (size_t j = 0; j < B.cols(); ++j) x.at(piv[i], j) = r.at(i, A.cols() + j);
  }
  /* a pivot may be missing from a column yet the system still consistent;
   * verify the candidate exactly */
  if (!(A * x == B)) return std::nullopt;
  return x;
}

}  // namespace canrel
