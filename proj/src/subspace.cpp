#include "canrel/subspace.hpp"

#include "canrel/errors.hpp"

namespace canrel {

Subspace Subspace::zero(size_t ambient) {
  return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(size_t ambient) {
  std::vector<size_t> piv(ambient);
  for (size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, Matrix::identity(ambient), std::move(piv));
}

Subspace Subspace::span(size_t ambient, const Matrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw TypeMismatchError("span: ambient dimension mismatch");
  std::vector<size_t> piv;
  Matrix r = rref(rows.rows() > 0 ? rows : Matrix(0, ambient), &piv);
  Matrix basis(piv.size(), ambient);
  for (size_t i = 0; i < piv.size(); ++i)
    for (size_t j = 0; j < ambient; ++j) basis.at(i, j) = r.at(i, j);
  return Subspace(ambient, std::move(basis), std::move(piv));
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& rows) {
  return span(ambient, Matrix::from_rows(rows, ambient));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw TypeMismatchError("contains: dimension mismatch");
  Vec w = v;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    const Rat& c = w[pivots_[i]];
    if (c == 0) continue;
    Rat f = c;
    for (size_t j = 0; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) w[j] -= f * basis_.at(i, j);
  }
  return is_zero_vec(w);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw TypeMismatchError("subspace_sum: ambient dimension mismatch");
  return Subspace::span(a.ambient(), vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

Subspace kernel(const Matrix& m) {
  return Subspace::span(m.cols(), kernel_rows(m));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw TypeMismatchError("subspace_intersect: ambient dimension mismatch");
  /* a cap b = ann(ann a + ann b); the dot form is nondegenerate over Q */
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw TypeMismatchError("subspace_leq: ambient dimension mismatch");
  for (size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis().row(i))) return false;
  return true;
}

Subspace map_subspace(const Matrix& T, const Subspace& s) {
  if (T.cols() != s.ambient())
    throw TypeMismatchError("map_subspace: dimension mismatch");
  return Subspace::span(T.rows(), s.basis() * T.transpose());
}

Matrix complement_rows(const Subspace& s, const Subspace& t) {
  if (!subspace_leq(t, s)) throw PreconditionError("complement_rows: t not inside s");
  std::vector<Vec> out;
  Subspace cur = t;
  for (size_t i = 0; i < s.dim() && cur.dim() < s.dim(); ++i) {
    Vec v = s.basis().row(i);
    if (!cur.contains(v)) {
      out.push_back(v);
      cur = subspace_sum(cur, Subspace::span(s.ambient(), {v}));
    }
  }
  return Matrix::from_rows(out, s.ambient());
}

Subspace subspace_direct_sum(const Subspace& a, const Subspace& b) {
  size_t na = a.ambient(), nb = b.ambient();
  std::vector<Vec> rows;
  for (size_t i = 0; i < a.dim(); ++i) {
    Vec r(na + nb);
    for (size_t j = 0; j < na; ++j) r[j] = a.basis().at(i, j);
    rows.push_back(std::move(r));
  }
  for (size_t i = 0; i < b.dim(); ++i) {
    Vec r(na + nb);
    for (size_t j = 0; j < nb; ++j) r[na + j] = b.basis().at(i, j);
    rows.push_back(std::move(r));
  }
  return Subspace::span(na + nb, Matrix::from_rows(rows, na + nb));
}

}  // namespace canrel
