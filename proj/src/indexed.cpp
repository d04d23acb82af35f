#include "canrel/indexed.hpp"

#include "canrel/errors.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace canrel {

namespace {

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

IndexMode join(IndexMode a, IndexMode b) {
  return (a == IndexMode::extended || b == IndexMode::extended) ? IndexMode::extended
                                                                : IndexMode::standard;
}

}  // namespace

IndexedCanonicalRelation make_indexed(const CanonicalRelation& f, long long k,
                                      IndexMode mode) {
  if (mode == IndexMode::standard && k < 0)
    throw PreconditionError("standard mode requires a nonnegative index");
  return IndexedCanonicalRelation{f, k, mode};
}

IndexedCanonicalRelation indexed_identity(const SymplecticSpace& x) {
  return IndexedCanonicalRelation{identity_relation(x), 0, IndexMode::standard};
}

IndexedCanonicalRelation icompose(const IndexedCanonicalRelation& a,
                                  const IndexedCanonicalRelation& b) {
  CanonicalRelation fg = compose(a.relation, b.relation);
  long long e = (long long)pair_excess(a.relation, b.relation);
  return IndexedCanonicalRelation{std::move(fg), a.k + b.k + e, join(a.mode, b.mode)};
}

IndexedCanonicalRelation iproduct(const IndexedCanonicalRelation& a,
                                  const IndexedCanonicalRelation& b) {
  return IndexedCanonicalRelation{tensor(a.relation, b.relation), a.k + b.k,
                                  join(a.mode, b.mode)};
}

long long itrace(const IndexedCanonicalRelation& a) {
  if (a.relation.target != a.relation.source)
    throw TypeMismatchError("trace requires an endomorphism");
  return (long long)fixed_space_dim(a.relation) + a.k;
}

IndexedLagrangian make_indexed_lagrangian(const SymplecticSpace& x, const Subspace& l,
                                          long long k) {
  if (l.ambient() != x.dim) throw TypeMismatchError("point lives in a different space");
  if (!classify_subspace(x, l).is_lagrangian)
    throw PreconditionError("indexed point requires a Lagrangian subspace");
  return IndexedLagrangian{x, l, k};
}

bool sabot_leq(const IndexedLagrangian& a, const IndexedLagrangian& b) {
  if (a.space != b.space) throw TypeMismatchError("order compares points of one space");
  return (long long)chow_distance(a.lagrangian, b.lagrangian) <= b.k - a.k;
}

IndexedLagrangian indexed_reduce(const ReductionData& rd, const IndexedLagrangian& a) {
  if (a.space != rd.ambient)
    throw TypeMismatchError("reduction chart is for a different space");
  long long e = (long long)excess_of_reduction(rd, a.lagrangian);
  return IndexedLagrangian{rd.reduced, reduce_lagrangian(rd, a.lagrangian), a.k + e};
}

IndexedLagrangian ishift(const IndexedLagrangian& a, long long j) {
  return IndexedLagrangian{a.space, a.lagrangian, a.k + j};
}

IndexedLagrangian igraph_compose(const IndexedLagrangian& g1, const IndexedLagrangian& g2,
                                 const SymplecticSpace& x, const SymplecticSpace& y,
                                 const SymplecticSpace& z) {
  if (g1.space != product_space(x, dual_space(y)) ||
      g2.space != product_space(y, dual_space(z)))
    throw TypeMismatchError("graph spaces do not match the given factors");
  SymplecticSpace p = product_space(g1.space, g2.space);
  Subspace l = subspace_direct_sum(g1.lagrangian, g2.lagrangian);

  /* C = X x diag(Y) x Zbar inside X x Ybar x Y x Zbar; its radical is the
   * embedded diagonal, and the unit vectors of the outer blocks are a chart
   * whose induced form is exactly that of X x Zbar. */
  const size_t dx = x.dim, dy = y.dim, dz = z.dim;
  const size_t total = dx + 2 * dy + dz;
  std::vector<Vec> crows, jrows;
  for (size_t i = 0; i < dx; ++i) {
    crows.push_back(unit_vec(total, i));
    jrows.push_back(unit_vec(total, i));
  }
  for (size_t i = 0; i < dy; ++i) {
    Vec v(total);
    v[dx + i] = 1;
    v[dx + dy + i] = 1;
    crows.push_back(v);
  }
  for (size_t i = 0; i < dz; ++i) {
    crows.push_back(unit_vec(total, dx + 2 * dy + i));
    jrows.push_back(unit_vec(total, dx + 2 * dy + i));
  }
  Subspace c = Subspace::span(total, Matrix::from_rows(crows, total));
  Subspace j = Subspace::span(total, Matrix::from_rows(jrows, total));
  ReductionData rd = reduction_data_with_complement(p, c, j);
  if (rd.reduced != product_space(x, dual_space(z)))
    throw std::logic_error("diagonal reduction chart mismatch");
  return indexed_reduce(rd, IndexedLagrangian{p, l, g1.k + g2.k});
}

HyperNormalForm normal_form_hyper(const SymplecticSpace& x, const Subspace& lam,
                                  size_t k, size_t r) {
  if (lam.ambient() != x.dim) throw TypeMismatchError("shadow lives in a different space");
  if (!classify_subspace(x, lam).is_lagrangian)
    throw PreconditionError("shadow must be Lagrangian");
  SymplecticSpace q = product_space(
      x, product_space(SymplecticSpace::standard(k), SymplecticSpace::standard(r)));
  const size_t dx = x.dim;
  const size_t total = dx + 2 * k + 2 * r;
  std::vector<Vec> crows, lrows, jrows;
  for (size_t i = 0; i < dx; ++i) {
    crows.push_back(unit_vec(total, i));
    jrows.push_back(unit_vec(total, i));
  }
  for (size_t i = 0; i < k; ++i) crows.push_back(unit_vec(total, dx + i));
  for (size_t i = 0; i < r; ++i) crows.push_back(unit_vec(total, dx + 2 * k + i));
  for (size_t i = 0; i < lam.dim(); ++i) {
    Vec v(total);
    Vec row = lam.basis().row(i);
    for (size_t jcol = 0; jcol < dx; ++jcol) v[jcol] = row[jcol];
    lrows.push_back(v);
  }
  for (size_t i = 0; i < k; ++i) lrows.push_back(unit_vec(total, dx + i));
  for (size_t i = 0; i < r; ++i) lrows.push_back(unit_vec(total, dx + 2 * k + r + i));
  Subspace c = Subspace::span(total, Matrix::from_rows(crows, total));
  Subspace l = Subspace::span(total, Matrix::from_rows(lrows, total));
  Subspace j = Subspace::span(total, Matrix::from_rows(jrows, total));
  ReductionData rd = reduction_data_with_complement(q, c, j);
  if (rd.reduced != x) throw std::logic_error("hyper chart does not reduce to the base");
  return HyperNormalForm{q, c, l, rd};
}

Subspace lift_indexed(const ReductionData& rd, const Subspace& lam, size_t k) {
  if (lam.ambient() != rd.reduced.dim)
    throw TypeMismatchError("shadow lives in a different space");
  if (!classify_subspace(rd.reduced, lam).is_lagrangian)
    throw PreconditionError("lift requires a Lagrangian shadow");
  if (k > rd.perp.dim()) throw PreconditionError("excess exceeds the radical dimension");
  const SymplecticSpace& x = rd.ambient;

  Subspace w = map_subspace(rd.section, lam);
  std::vector<Vec> yrows;
  for (size_t i = 0; i < k; ++i) yrows.push_back(rd.perp.basis().row(i));
  Subspace y = Subspace::span(x.dim, Matrix::from_rows(yrows, x.dim));

  /* Z: annihilator of Y inside a Lagrangian complement D of the radical in
   * the symplectic orthogonal of the chart. */
  Subspace j = map_subspace(rd.section, Subspace::full(rd.reduced.dim));
  Subspace jperp = symp_complement(x, j);
  auto [jp_space, jp_basis] = restricted_space(x, jperp);
  Subspace d0 = lagrangian_complement(jp_space, subspace_coords(jp_basis, rd.perp));
  Subspace d = map_subspace(jp_basis.transpose(), d0);
  Matrix pairing = y.basis() * x.form * d.basis().transpose();
  Subspace z = map_subspace(d.basis().transpose(),
                            Subspace::span(d.dim(), kernel_rows(pairing)));

  Subspace l = subspace_sum(subspace_sum(w, y), z);
  if (!classify_subspace(x, l).is_lagrangian)
    throw std::logic_error("lifted subspace is not Lagrangian");
  return l;
}

Subspace DeformationFamily::eval(const Rat& t) const {
  Matrix rows(base.rows(), base.cols());
  for (size_t i = 0; i < base.rows(); ++i)
    for (size_t j = 0; j < base.cols(); ++j)
      rows.at(i, j) = base.at(i, j) + t * slope.at(i, j);
  return Subspace::span(ambient.dim, rows);
}

DeformationFamily deformation_family(const ReductionData& rd, const Subspace& l,
                                     const Subspace& lam, long long q) {
  const SymplecticSpace& x = rd.ambient;
  if (l.ambient() != x.dim) throw TypeMismatchError("family base in the wrong space");
  if (lam.ambient() != rd.reduced.dim)
    throw TypeMismatchError("family target in the wrong space");
  if (!classify_subspace(x, l).is_lagrangian)
    throw PreconditionError("deformation base must be Lagrangian");
  if (!classify_subspace(rd.reduced, lam).is_lagrangian)
    throw PreconditionError("deformation target must be Lagrangian");

  Subspace y = subspace_intersect(l, rd.perp);
  const long long k = (long long)y.dim();
  Subspace lc = reduce_lagrangian(rd, l);
  const long long r = (long long)chow_distance(lc, lam);
  if (q < r || q > k)
    throw PreconditionError("deformation requires d(shadow, target) <= q <= excess");

  const size_t n2 = x.dim;
  const size_t m = rd.reduced.dim / 2;

  Subspace lcap = subspace_intersect(l, rd.coisotropic);
  Subspace w = Subspace::span(n2, complement_rows(lcap, y));
  Subspace z = Subspace::span(n2, complement_rows(l, lcap));

  /* Adapted chart: a complement of the radical in C that contains W and is
   * symplectically orthogonal to Z, built inside A = Z-orthogonal cap C. */
  Subspace a = subspace_intersect(symp_complement(x, z), rd.coisotropic);
  Subspace j_ad = subspace_sum(w, Subspace::span(n2, complement_rows(a, subspace_sum(w, y))));
  if (j_ad.dim() != 2 * m) throw std::logic_error("adapted chart has wrong dimension");

  /* W' = preimage of the target under the chart identification. */
  Matrix sys = annihilator(lam).basis() * (rd.projection * j_ad.basis().transpose());
  Subspace wprime = map_subspace(j_ad.basis().transpose(),
                                 Subspace::span(j_ad.dim(), kernel_rows(sys)));
  if (wprime.dim() != m) throw std::logic_error("target preimage has wrong dimension");
  Subspace winter = subspace_intersect(w, wprime);
  if ((long long)winter.dim() != (long long)m - r)
    throw std::logic_error("shadow distance disagrees with the preimage overlap");
  Matrix f_rows = winter.basis();
  Matrix e_rows = complement_rows(w, winter);

  Matrix estar(0, n2);
  if (r > 0) {
    Matrix b = e_rows * x.form * wprime.basis().transpose();
    auto sol = solve_matrix(b, Matrix::identity((size_t)r));
    if (!sol) throw std::logic_error("dual solve inside the preimage failed");
    estar = sol->transpose() * wprime.basis();
  }

  /* Lagrangian complement D of the radical in the orthogonal of the adapted
   * chart, forced to contain Z so the fixed block stays orthogonal to the
   * moving ones. */
  Subspace jad_perp = symp_complement(x, j_ad);
  auto [jp_space, jp_basis] = restricted_space(x, jad_perp);
  Subspace d0 = lagrangian_complement(jp_space, subspace_coords(jp_basis, rd.perp),
                                      subspace_coords(jp_basis, z));
  Subspace d = map_subspace(jp_basis.transpose(), d0);

  Matrix duals(0, n2);
  if (q > 0) {
    Matrix p = y.basis() * x.form * d.basis().transpose();
    Matrix rhs((size_t)k, (size_t)q);
    for (size_t i = 0; i < (size_t)q; ++i) rhs.at(i, i) = 1;
    auto sol = solve_matrix(p, rhs);
    if (!sol) throw std::logic_error("dual solve inside the complement failed");
    duals = sol->transpose() * d.basis();
  }

  const size_t n = n2 / 2;
  Matrix base(n, n2), slope(n, n2);
  size_t row = 0;
  auto put = [&](const Matrix& src, size_t i, const Matrix* slp, size_t si) {
    for (size_t jcol = 0; jcol < n2; ++jcol) {
      base.at(row, jcol) = src.at(i, jcol);
      if (slp) slope.at(row, jcol) = slp->at(si, jcol);
    }
    ++row;
  };
  const Matrix& yb = y.basis();
  const Matrix& zb = z.basis();
  for (size_t i = 0; i < (size_t)r; ++i) put(e_rows, i, &duals, i);
  for (size_t i = 0; i < f_rows.rows(); ++i) put(f_rows, i, nullptr, 0);
  for (size_t i = 0; i < (size_t)r; ++i) put(yb, i, &estar, i);
  for (size_t i = (size_t)r; i < (size_t)q; ++i) put(yb, i, &duals, i);
  for (size_t i = (size_t)q; i < (size_t)k; ++i) put(yb, i, nullptr, 0);
  for (size_t i = 0; i < zb.rows(); ++i) put(zb, i, nullptr, 0);
  if (row != n) throw std::logic_error("family row count mismatch");

  DeformationFamily fam{x,    rd.coisotropic, std::move(base), std::move(slope),
                        k,    q,              r,               r + q <= k};
  if (fam.eval(Rat(0)) != l)
    throw std::logic_error("family does not pass through the base point");
  return fam;
}

IndexedCanonicalRelation itranspose_reduction(const ReductionData& rd) {
  return IndexedCanonicalRelation{transpose(reduction_relation(rd)),
                                  -(long long)rd.perp.dim(), IndexMode::extended};
}

IndexedCanonicalRelation iinvert(const IndexedCanonicalRelation& a) {
  if (a.mode != IndexMode::extended)
    throw PreconditionError("inversion requires extended indices");
  MorphismClass c = classify_morphism(a.relation);
  if (!(c.single_valued && c.everywhere_defined && c.surjective && c.injective))
    throw PreconditionError("only isomorphisms invert");
  return IndexedCanonicalRelation{transpose(a.relation), -a.k, IndexMode::extended};
}

IndexedLagrangian random_indexed_lagrangian(Rng& rng, const SymplecticSpace& x,
                                            size_t moves, long long max_k) {
  return IndexedLagrangian{x, random_lagrangian(rng, x, moves), rng.int_in(0, max_k)};
}

}  // namespace canrel
