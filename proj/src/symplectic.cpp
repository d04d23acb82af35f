#include "canrel/symplectic.hpp"

#include "canrel/errors.hpp"

namespace canrel {

SymplecticSpace SymplecticSpace::standard(size_t n) {
  SymplecticSpace x;
  x.dim = 2 * n;
  x.form = Matrix(2 * n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    x.form.at(i, n + i) = 1;
    x.form.at(n + i, i) = -1;
  }
  return x;
}

bool SymplecticSpace::is_standard() const {
  return *this == standard(dim / 2);
}

void validate_space(const SymplecticSpace& x) {
  if (x.dim % 2 != 0) throw PreconditionError("space dimension must be even");
  if (x.form.rows() != x.dim || x.form.cols() != x.dim)
    throw PreconditionError("form shape does not match dimension");
  for (size_t i = 0; i < x.dim; ++i)
    for (size_t j = 0; j <= i; ++j)
      if (x.form.at(i, j) != -x.form.at(j, i))
        throw PreconditionError("form is not antisymmetric");
  if (rank(x.form) != x.dim) throw PreconditionError("form is degenerate");
}

Rat form_eval(const SymplecticSpace& x, const Vec& u, const Vec& v) {
  if (u.size() != x.dim || v.size() != x.dim)
    throw TypeMismatchError("form_eval: dimension mismatch");
  return dot(u, x.form.apply(v));
}

SymplecticSpace dual_space(const SymplecticSpace& x) {
  SymplecticSpace d = x;
  for (size_t i = 0; i < d.dim; ++i)
    for (size_t j = 0; j < d.dim; ++j) d.form.at(i, j) = -x.form.at(i, j);
  return d;
}

SymplecticSpace product_space(const SymplecticSpace& x, const SymplecticSpace& y) {
  SymplecticSpace p;
  p.dim = x.dim + y.dim;
  p.form = Matrix(p.dim, p.dim);
  for (size_t i = 0; i < x.dim; ++i)
    for (size_t j = 0; j < x.dim; ++j) p.form.at(i, j) = x.form.at(i, j);
  for (size_t i = 0; i < y.dim; ++i)
    for (size_t j = 0; j < y.dim; ++j) p.form.at(x.dim + i, x.dim + j) = y.form.at(i, j);
  return p;
}

Subspace symp_complement(const SymplecticSpace& x, const Subspace& w) {
  if (w.ambient() != x.dim)
    throw TypeMismatchError("symp_complement: ambient mismatch");
  /* rows of basis * form give the functionals w(w_i, .) */
  return kernel(w.basis() * x.form);
}

SubspaceClass classify_subspace(const SymplecticSpace& x, const Subspace& w) {
  Subspace perp = symp_complement(x, w);
  SubspaceClass c;
  c.is_isotropic = subspace_leq(w, perp);
  c.is_coisotropic = subspace_leq(perp, w);
  c.is_lagrangian = c.is_isotropic && c.is_coisotropic;
  c.is_symplectic = subspace_intersect(w, perp).dim() == 0;
  return c;
}

static ReductionData build_reduction(const SymplecticSpace& x, const Subspace& c,
                                     const Subspace& perp, const Matrix& j_rows) {
  size_t rdim = j_rows.rows();

  SymplecticSpace reduced;
  reduced.dim = rdim;
  reduced.form = Matrix(rdim, rdim);
  for (size_t i = 0; i < rdim; ++i) {
    Vec wi = x.form.apply(j_rows.row(i));
    for (size_t j = 0; j < rdim; ++j)
      if (i != j) reduced.form.at(j, i) = dot(j_rows.row(j), wi);
  }

  Matrix section = j_rows.transpose();

  /* left inverse of [J-rows; perp-rows]^T; its top block sends c in C to its
   * J-coordinates mod C~ */
  Matrix m = vstack(j_rows, perp.basis());
  size_t d = m.rows();
  Matrix aug = rref(hstack(m.transpose(), Matrix::identity(x.dim)));
  Matrix projection(rdim, x.dim);
  for (size_t i = 0; i < rdim; ++i)
    for (size_t jj = 0; jj < x.dim; ++jj) projection.at(i, jj) = aug.at(i, d + jj);

  if (!(projection * section == Matrix::identity(rdim)))
    throw std::logic_error("reduction chart: projection . section != id");
  if (rank(reduced.form) != rdim)
    throw std::logic_error("reduction chart: induced form degenerate");
  return ReductionData{x, c, perp, reduced, projection, section};
}

ReductionData reduction_data(const SymplecticSpace& x, const Subspace& c) {
  validate_space(x);
  Subspace perp = symp_complement(x, c);
  if (!subspace_leq(perp, c))
    throw PreconditionError("reduction_data: subspace is not coisotropic");
  return build_reduction(x, c, perp, complement_rows(c, perp));
}

ReductionData reduction_data_with_complement(const SymplecticSpace& x,
                                             const Subspace& c, const Subspace& j) {
  validate_space(x);
  Subspace perp = symp_complement(x, c);
  if (!subspace_leq(perp, c))
    throw PreconditionError("reduction_data: subspace is not coisotropic");
  if (!subspace_leq(j, c) || subspace_intersect(j, perp).dim() != 0 ||
      j.dim() != c.dim() - perp.dim())
    throw PreconditionError("reduction_data: not a complement of C~ in C");
  return build_reduction(x, c, perp, j.basis());
}

Subspace reduce_lagrangian(const ReductionData& rd, const Subspace& l) {
  if (l.ambient() != rd.ambient.dim)
    throw TypeMismatchError("reduce_lagrangian: ambient mismatch");
  if (!classify_subspace(rd.ambient, l).is_lagrangian)
    throw PreconditionError("reduce_lagrangian: subspace is not Lagrangian");
  return map_subspace(rd.projection, subspace_intersect(l, rd.coisotropic));
}

size_t excess_of_reduction(const ReductionData& rd, const Subspace& l) {
  if (l.ambient() != rd.ambient.dim)
    throw TypeMismatchError("excess_of_reduction: ambient mismatch");
  if (!classify_subspace(rd.ambient, l).is_lagrangian)
    throw PreconditionError("excess_of_reduction: subspace is not Lagrangian");
  size_t via_perp = subspace_intersect(l, rd.perp).dim();
  size_t via_sum = rd.ambient.dim - subspace_sum(l, rd.coisotropic).dim();
  if (via_perp != via_sum)
    throw std::logic_error("excess formulas disagree on a Lagrangian input");
  return via_perp;
}

size_t chow_distance(const Subspace& l1, const Subspace& l2) {
  if (l1.ambient() != l2.ambient())
    throw TypeMismatchError("chow_distance: ambient mismatch");
  if (l1.dim() != l2.dim())
    throw TypeMismatchError("chow_distance: dimension mismatch");
  return l1.dim() - subspace_intersect(l1, l2).dim();
}

/* subtract the pair components so that v becomes w-orthogonal to all chosen
 * canonical pairs (a_i, b_i) */
static Vec correct_against_pairs(const SymplecticSpace& x, Vec v,
                                 const std::vector<Vec>& as,
                                 const std::vector<Vec>& bs) {
  for (size_t i = 0; i < as.size(); ++i) {
    Rat alpha = form_eval(x, v, bs[i]);  // component along a_i
    Rat beta = form_eval(x, v, as[i]);   // minus component along b_i
    for (size_t j = 0; j < v.size(); ++j) {
      if (alpha != 0) v[j] -= alpha * as[i][j];
      if (beta != 0) v[j] += beta * bs[i][j];
    }
  }
  return v;
}

Matrix darboux_basis(const SymplecticSpace& x) {
  validate_space(x);
  size_t n = x.dim / 2;
  std::vector<Vec> as, bs;
  Subspace span = Subspace::zero(x.dim);
  for (size_t i = 0; i < x.dim && as.size() < n; ++i) {
    Vec e(x.dim);
    e[i] = 1;
    if (span.contains(e)) continue;
    Vec u = correct_against_pairs(x, e, as, bs);
    Vec partner;
    for (size_t k = 0; k < x.dim; ++k) {
      Vec f(x.dim);
      f[k] = 1;
      Rat p = form_eval(x, u, f);
      if (p == 0) continue;
      Vec v = correct_against_pairs(x, f, as, bs);
      Rat scale = 1 / form_eval(x, u, v);
      for (auto& c : v) c *= scale;
      partner = v;
      break;
    }
    if (partner.empty()) throw std::logic_error("darboux: no partner found");
    as.push_back(u);
    bs.push_back(partner);
    span = subspace_sum(span, Subspace::span(x.dim, {u, partner}));
  }
  if (as.size() != n) throw std::logic_error("darboux: incomplete basis");
  Matrix u_cols(x.dim, x.dim);
  for (size_t i = 0; i < n; ++i)
    for (size_t r = 0; r < x.dim; ++r) {
      u_cols.at(r, i) = as[i][r];
      u_cols.at(r, n + i) = bs[i][r];
    }
  if (!(u_cols.transpose() * x.form * u_cols == SymplecticSpace::standard(n).form))
    throw std::logic_error("darboux: basis not canonical");
  return u_cols;
}

Subspace lagrangian_complement(const SymplecticSpace& x, const Subspace& l,
                               const Subspace& j) {
  size_t n = x.dim / 2;
  if (l.ambient() != x.dim || j.ambient() != x.dim)
    throw TypeMismatchError("lagrangian_complement: ambient mismatch");
  if (!classify_subspace(x, l).is_lagrangian)
    throw PreconditionError("lagrangian_complement: not Lagrangian");
  if (!classify_subspace(x, j).is_isotropic)
    throw PreconditionError("lagrangian_complement: seed not isotropic");
  if (subspace_intersect(j, l).dim() != 0)
    throw PreconditionError("lagrangian_complement: seed meets L");

  std::vector<Vec> m;
  for (size_t i = 0; i < j.dim(); ++i) m.push_back(j.basis().row(i));
  Subspace span_ml = subspace_sum(j, l);
  for (size_t i = 0; i < x.dim && m.size() < n; ++i) {
    Vec e(x.dim);
    e[i] = 1;
    if (span_ml.contains(e)) continue;
    /* find ell in L with w(m_r, ell) = w(m_r, e) for all r; subtracting it
     * keeps the new span isotropic.  The pairing L -> M* is onto because
     * M cap L = 0, so the system is solvable. */
    Matrix a(m.size(), l.dim());
    Vec b(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
      Vec wr = x.form.apply(m[r]);
      b[r] = -dot(wr, e);  // w(m_r, e) = -w(e, m_r)... see below
      for (size_t c = 0; c < l.dim(); ++c) a.at(r, c) = -dot(wr, l.basis().row(c));
    }
    /* note: form.apply(m_r) gives w(., m_r) as a functional; negate for
     * w(m_r, .) */
    auto sol = solve(a, b);
    if (!sol) throw std::logic_error("lagrangian_complement: pairing not onto");
    Vec v = e;
    for (size_t c = 0; c < l.dim(); ++c)
      if ((*sol)[c] != 0)
        for (size_t k = 0; k < x.dim; ++k) v[k] -= (*sol)[c] * l.basis().at(c, k);
    m.push_back(v);
    span_ml = subspace_sum(span_ml, Subspace::span(x.dim, {v}));
  }
  Subspace result = Subspace::span(x.dim, Matrix::from_rows(m, x.dim));
  if (result.dim() != n || !classify_subspace(x, result).is_lagrangian ||
      subspace_intersect(result, l).dim() != 0 || !subspace_leq(j, result))
    throw std::logic_error("lagrangian_complement: postcondition failed");
  return result;
}

Subspace lagrangian_complement(const SymplecticSpace& x, const Subspace& l) {
  return lagrangian_complement(x, l, Subspace::zero(x.dim));
}

std::pair<SymplecticSpace, Matrix> restricted_space(const SymplecticSpace& x,
                                                    const Subspace& w) {
  if (w.ambient() != x.dim) throw TypeMismatchError("restricted_space: ambient mismatch");
  SymplecticSpace sub;
  sub.dim = w.dim();
  sub.form = Matrix(sub.dim, sub.dim);
  for (size_t j = 0; j < sub.dim; ++j) {
    Vec wj = x.form.apply(w.basis().row(j));
    for (size_t i = 0; i < sub.dim; ++i)
      if (i != j) sub.form.at(i, j) = dot(w.basis().row(i), wj);
  }
  if (rank(sub.form) != sub.dim)
    throw PreconditionError("restricted_space: subspace is not symplectic");
  return {sub, w.basis()};
}

Subspace subspace_coords(const Matrix& basis_rows, const Subspace& s) {
  if (s.ambient() != basis_rows.cols())
    throw TypeMismatchError("subspace_coords: ambient mismatch");
  auto x = solve_matrix(basis_rows.transpose(), s.basis().transpose());
  if (!x) throw PreconditionError("subspace_coords: subspace not inside span");
  return Subspace::span(basis_rows.rows(), x->transpose());
}

Matrix adapted_canonical_basis(const SymplecticSpace& x, const Subspace& l,
                               const Subspace& i) {
  validate_space(x);
  if (!x.is_standard())
    throw PreconditionError("adapted_canonical_basis: standard form required");
  if (!classify_subspace(x, l).is_lagrangian)
    throw PreconditionError("adapted_canonical_basis: L not Lagrangian");
  if (!classify_subspace(x, i).is_isotropic)
    throw PreconditionError("adapted_canonical_basis: I not isotropic");
  size_t n = x.dim / 2;

  Subspace il = subspace_intersect(i, l);
  Matrix j_rows = complement_rows(i, il);
  Subspace j_sub = Subspace::span(x.dim, j_rows);

  /* a = {ell in L : w(ell, J) = 0}; the f-block of L is any complement of a,
   * the g-block any complement of (I cap L) inside a */
  Matrix pairing(j_sub.dim(), l.dim());
  for (size_t r = 0; r < j_sub.dim(); ++r) {
    Vec wr = x.form.apply(j_sub.basis().row(r));
    for (size_t c = 0; c < l.dim(); ++c) pairing.at(r, c) = -dot(wr, l.basis().row(c));
  }
  Subspace a = map_subspace(l.basis().transpose(), kernel(pairing));
  Matrix g_rows = complement_rows(a, il);
  Matrix f_rows = complement_rows(l, a);

  std::vector<Vec> l_ordered;
  for (size_t r = 0; r < il.dim(); ++r) l_ordered.push_back(il.basis().row(r));
  for (size_t r = 0; r < f_rows.rows(); ++r) l_ordered.push_back(f_rows.row(r));
  for (size_t r = 0; r < g_rows.rows(); ++r) l_ordered.push_back(g_rows.row(r));

  Subspace m = lagrangian_complement(x, l, j_sub);

  /* dual basis of M against the ordered basis of L */
  Matrix pair_lm(n, n);
  for (size_t r = 0; r < n; ++r) {
    Vec wr = x.form.apply(l_ordered[r]);  // w(., l_r); negate for w(l_r, .)
    for (size_t c = 0; c < n; ++c) pair_lm.at(r, c) = -dot(wr, m.basis().row(c));
  }
  Matrix duals = inverse(pair_lm).transpose() * m.basis();

  /* sanity: the f-duals recover the J-block of I */
  size_t d = il.dim(), jn = j_sub.dim();
  {
    std::vector<Vec> fd;
    for (size_t r = d; r < d + jn; ++r) fd.push_back(duals.row(r));
    if (Subspace::span(x.dim, Matrix::from_rows(fd, x.dim)) != j_sub)
      throw std::logic_error("adapted basis: f-duals do not span the I-complement");
  }

  Matrix u(x.dim, x.dim);
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < x.dim; ++r) {
      u.at(r, c) = l_ordered[c][r];
      u.at(r, n + c) = duals.at(c, r);
    }
  if (!(u.transpose() * x.form * u == x.form))
    throw std::logic_error("adapted basis: U not symplectic");
  return inverse(u);
}

Matrix random_symplectic_matrix(Rng& rng, const SymplecticSpace& x, size_t moves) {
  Matrix s = Matrix::identity(x.dim);
  for (size_t t = 0; t < moves; ++t) {
    Vec u(x.dim);
    bool nonzero = false;
    for (size_t k = 0; k < x.dim; ++k) {
      u[k] = Rat(rng.int_in(-2, 2));
      if (u[k] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    long c = rng.int_in(1, 3) * (rng.coin() ? 1 : -1);
    /* transvection T v = v + c w(v,u) u = (I + c u (form u)^T) v; symplectic
     * for every u, c */
    Vec fu = x.form.apply(u);
    Matrix t_mat = Matrix::identity(x.dim);
    for (size_t r = 0; r < x.dim; ++r)
      if (u[r] != 0)
        for (size_t cc = 0; cc < x.dim; ++cc)
          if (fu[cc] != 0) t_mat.at(r, cc) += Rat(c) * u[r] * fu[cc];
    s = t_mat * s;
  }
  return s;
}

Subspace random_lagrangian(Rng& rng, const SymplecticSpace& x, size_t moves) {
  Matrix u = darboux_basis(x);
  size_t n = x.dim / 2;
  /* seed Lagrangian: span of the first n canonical columns */
  std::vector<Vec> rows;
  for (size_t c = 0; c < n; ++c) {
    Vec v(x.dim);
    for (size_t r = 0; r < x.dim; ++r) v[r] = u.at(r, c);
    rows.push_back(v);
  }
  Subspace seed = Subspace::span(x.dim, Matrix::from_rows(rows, x.dim));
  return map_subspace(random_symplectic_matrix(rng, x, moves), seed);
}

Subspace random_isotropic(Rng& rng, const SymplecticSpace& x, size_t dim) {
  if (dim > x.dim / 2) throw PreconditionError("random_isotropic: dim too large");
  Subspace l = random_lagrangian(rng, x, 2 * x.dim);
  Subspace coeffs = random_subspace(rng, l.dim(), dim);
  return map_subspace(l.basis().transpose(), coeffs);
}

Subspace random_coisotropic(Rng& rng, const SymplecticSpace& x, size_t dim) {
  if (dim < x.dim / 2 || dim > x.dim)
    throw PreconditionError("random_coisotropic: dimension out of range");
  Subspace c = random_lagrangian(rng, x, 2 * x.dim);
  while (c.dim() < dim) {
    Vec v(x.dim);
    for (size_t k = 0; k < x.dim; ++k) v[k] = rng.small_int();
    c = subspace_sum(c, Subspace::span(x.dim, {v}));
  }
  return c;
}

}  // namespace canrel
