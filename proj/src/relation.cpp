#include "canrel/relation.hpp"

#include "canrel/errors.hpp"

namespace canrel {

/* Lagrangian = isotropic of half dimension; isotropy via the Gram matrix of
 * the basis rows, cheaper than the double-complement route of
 * classify_subspace. */
static bool is_lagrangian_in(const SymplecticSpace& p, const Subspace& s) {
  if (2 * s.dim() != p.dim) return false;
  Matrix gram = s.basis() * p.form * s.basis().transpose();
  return gram.is_zero();
}

CanonicalRelation make_relation(const SymplecticSpace& x, const SymplecticSpace& y,
                                const Subspace& body) {
  SymplecticSpace p = product_space(x, dual_space(y));
  if (body.ambient() != p.dim)
    throw TypeMismatchError("make_relation: body ambient does not match X x Ybar");
  if (!is_lagrangian_in(p, body))
    throw PreconditionError("make_relation: body is not Lagrangian");
  return CanonicalRelation{x, y, body};
}

static Subspace diagonal_subspace(size_t d) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < d; ++i) {
    Vec r(2 * d);
    r[i] = 1;
    r[d + i] = 1;
    rows.push_back(std::move(r));
  }
  return Subspace::span(2 * d, Matrix::from_rows(rows, 2 * d));
}

CanonicalRelation identity_relation(const SymplecticSpace& x) {
  return make_relation(x, x, diagonal_subspace(x.dim));
}

/* Constraint rows cutting the fibre {(x,y,z) : (x,y) in f, (y,z) in g} out
 * of X + Y + Zbar: f's annihilator padded right, g's padded left. */
static Matrix fibre_constraints(const CanonicalRelation& f, const CanonicalRelation& g) {
  size_t dx = f.target.dim, dy = f.source.dim, dz = g.source.dim;
  Matrix af = annihilator(f.body).basis();
  Matrix ag = annihilator(g.body).basis();
  std::vector<Vec> rows;
  for (size_t i = 0; i < af.rows(); ++i) {
    Vec r(dx + dy + dz);
    for (size_t j = 0; j < dx + dy; ++j) r[j] = af.at(i, j);
    rows.push_back(std::move(r));
  }
  for (size_t i = 0; i < ag.rows(); ++i) {
    Vec r(dx + dy + dz);
    for (size_t j = 0; j < dy + dz; ++j) r[dx + j] = ag.at(i, j);
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows, dx + dy + dz);
}

static void require_composable(const CanonicalRelation& f, const CanonicalRelation& g,
                               const char* who) {
  if (!(f.source == g.target))
    throw TypeMismatchError(std::string(who) + ": source/target mismatch");
}

CanonicalRelation compose(const CanonicalRelation& f, const CanonicalRelation& g) {
  require_composable(f, g, "compose");
  size_t dx = f.target.dim, dy = f.source.dim, dz = g.source.dim;
  Subspace fibre = kernel(fibre_constraints(f, g));
  Matrix proj(dx + dz, dx + dy + dz);
  for (size_t i = 0; i < dx; ++i) proj.at(i, i) = 1;
  for (size_t i = 0; i < dz; ++i) proj.at(dx + i, dx + dy + i) = 1;
  Subspace body = map_subspace(proj, fibre);
  if (!is_lagrangian_in(product_space(f.target, dual_space(g.source)), body))
    throw std::logic_error("compose: image is not Lagrangian");
  return CanonicalRelation{f.target, g.source, body};
}

size_t pair_excess(const CanonicalRelation& f, const CanonicalRelation& g) {
  require_composable(f, g, "pair_excess");
  size_t dx = f.target.dim, dy = f.source.dim;
  /* the fibre conditions at x = 0, z = 0: only the y-columns survive */
  Matrix af = annihilator(f.body).basis();
  Matrix ag = annihilator(g.body).basis();
  return kernel(vstack(af.col_slice(dx, dx + dy), ag.col_slice(0, dy))).dim();
}

Congeniality congeniality(const CanonicalRelation& f, const CanonicalRelation& g) {
  require_composable(f, g, "congeniality");
  bool monic = pair_excess(f, g) == 0;

  size_t dx = f.target.dim, dy = f.source.dim, dz = g.source.dim;
  size_t total = dx + 2 * dy + dz;
  Subspace product_body = subspace_direct_sum(f.body, g.body);
  std::vector<Vec> rows;
  for (size_t i = 0; i < dx; ++i) {
    Vec r(total);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  for (size_t j = 0; j < dy; ++j) {
    Vec r(total);
    r[dx + j] = 1;
    r[dx + dy + j] = 1;
    rows.push_back(std::move(r));
  }
  for (size_t k = 0; k < dz; ++k) {
    Vec r(total);
    r[dx + 2 * dy + k] = 1;
    rows.push_back(std::move(r));
  }
  Subspace graph_slab = Subspace::span(total, Matrix::from_rows(rows, total));
  bool transversal = subspace_sum(product_body, graph_slab).dim() == total;

  if (monic != transversal)
    throw std::logic_error("congeniality: monic and transversal flags disagree");
  return Congeniality{monic, transversal};
}

static Matrix swap_blocks(const Matrix& m, size_t left, size_t right) {
  Matrix out(m.rows(), left + right);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < right; ++j) out.at(i, j) = m.at(i, left + j);
    for (size_t j = 0; j < left; ++j) out.at(i, right + j) = m.at(i, j);
  }
  return out;
}

CanonicalRelation transpose(const CanonicalRelation& f) {
  size_t dx = f.target.dim, dy = f.source.dim;
  Subspace body = Subspace::span(dx + dy, swap_blocks(f.body.basis(), dx, dy));
  return make_relation(f.source, f.target, body);
}

CanonicalRelation dual_morphism(const CanonicalRelation& f) {
  /* Xbar x (Ybar)bar has the negated form of X x Ybar, so the body carries
   * over unchanged. */
  return make_relation(dual_space(f.target), dual_space(f.source), f.body);
}

CanonicalRelation tensor(const CanonicalRelation& f, const CanonicalRelation& g) {
  size_t dx = f.target.dim, dy = f.source.dim;
  size_t dz = g.target.dim, dw = g.source.dim;
  size_t total = dx + dz + dy + dw;
  std::vector<Vec> rows;
  for (size_t i = 0; i < f.body.dim(); ++i) {
    Vec r(total);
    for (size_t j = 0; j < dx; ++j) r[j] = f.body.basis().at(i, j);
    for (size_t j = 0; j < dy; ++j) r[dx + dz + j] = f.body.basis().at(i, dx + j);
    rows.push_back(std::move(r));
  }
  for (size_t i = 0; i < g.body.dim(); ++i) {
    Vec r(total);
    for (size_t j = 0; j < dz; ++j) r[dx + j] = g.body.basis().at(i, j);
    for (size_t j = 0; j < dw; ++j) r[dx + dz + dy + j] = g.body.basis().at(i, dz + j);
    rows.push_back(std::move(r));
  }
  return make_relation(product_space(f.target, g.target),
                       product_space(f.source, g.source),
                       Subspace::span(total, Matrix::from_rows(rows, total)));
}

CanonicalRelation unit_delta(const SymplecticSpace& x) {
  return make_relation(product_space(x, dual_space(x)), SymplecticSpace::unit(),
                       diagonal_subspace(x.dim));
}

CanonicalRelation counit_eps(const SymplecticSpace& x) {
  return make_relation(SymplecticSpace::unit(), product_space(dual_space(x), x),
                       diagonal_subspace(x.dim));
}

CanonicalRelation graph_morphism(const CanonicalRelation& f) {
  return compose(tensor(f, identity_relation(dual_space(f.source))),
                 unit_delta(f.source));
}

static void require_hypergraph(const CanonicalRelation& gamma, const SymplecticSpace& x,
                               const SymplecticSpace& y, const char* who) {
  if (!(gamma.source == SymplecticSpace::unit()) ||
      !(gamma.target == product_space(x, dual_space(y))))
    throw TypeMismatchError(std::string(who) + ": not a graph X x Ybar <- 1");
}

CanonicalRelation ungraph_morphism(const CanonicalRelation& gamma,
                                   const SymplecticSpace& x, const SymplecticSpace& y) {
  require_hypergraph(gamma, x, y, "ungraph_morphism");
  return compose(tensor(identity_relation(x), counit_eps(y)),
                 tensor(gamma, identity_relation(y)));
}

CanonicalRelation reduced_product(const CanonicalRelation& g1, const CanonicalRelation& g2,
                                  const SymplecticSpace& x, const SymplecticSpace& y,
                                  const SymplecticSpace& z) {
  require_hypergraph(g1, x, y, "reduced_product");
  require_hypergraph(g2, y, z, "reduced_product");
  CanonicalRelation contract = tensor(tensor(identity_relation(x), counit_eps(y)),
                                      identity_relation(dual_space(z)));
  return compose(contract, tensor(g1, g2));
}

CanonicalRelation reduction_relation(const ReductionData& rd) {
  size_t dr = rd.reduced.dim, dn = rd.ambient.dim;
  std::vector<Vec> rows;
  for (size_t i = 0; i < rd.coisotropic.dim(); ++i) {
    Vec c = rd.coisotropic.basis().row(i);
    Vec pc = rd.projection.apply(c);
    Vec r(dr + dn);
    for (size_t j = 0; j < dr; ++j) r[j] = pc[j];
    for (size_t j = 0; j < dn; ++j) r[dr + j] = c[j];
    rows.push_back(std::move(r));
  }
  return make_relation(rd.reduced, rd.ambient,
                       Subspace::span(dr + dn, Matrix::from_rows(rows, dr + dn)));
}

CanonicalRelation projector_relation(const ReductionData& rd) {
  CanonicalRelation rho = reduction_relation(rd);
  return compose(transpose(rho), rho);
}

static Subspace coordinate_block(size_t ambient, size_t lo, size_t hi) {
  std::vector<Vec> rows;
  for (size_t i = lo; i < hi; ++i) {
    Vec r(ambient);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return Subspace::span(ambient, Matrix::from_rows(rows, ambient));
}

MorphismClass classify_morphism(const CanonicalRelation& f) {
  size_t dx = f.target.dim, dy = f.source.dim;
  MorphismClass c{};
  c.single_valued =
      subspace_intersect(f.body, coordinate_block(dx + dy, 0, dx)).dim() == 0;
  c.injective =
      subspace_intersect(f.body, coordinate_block(dx + dy, dx, dx + dy)).dim() == 0;
  c.surjective = rank(f.body.basis().col_slice(0, dx)) == dx;
  c.everywhere_defined = rank(f.body.basis().col_slice(dx, dx + dy)) == dy;
  c.is_reduction = c.single_valued && c.surjective;
  c.is_coreduction = c.injective && c.everywhere_defined;
  return c;
}

std::pair<CanonicalRelation, CanonicalRelation> factor(const CanonicalRelation& f) {
  size_t dx = f.target.dim, dy = f.source.dim;
  SymplecticSpace q =
      product_space(product_space(f.target, f.source), dual_space(f.source));

  /* g : X <- Q; in X x Qbar the generators are (x; x, 0, 0) and (0; 0, y, y) */
  std::vector<Vec> grows;
  for (size_t i = 0; i < dx; ++i) {
    Vec r(dx + q.dim);
    r[i] = 1;
    r[dx + i] = 1;
    grows.push_back(std::move(r));
  }
  for (size_t j = 0; j < dy; ++j) {
    Vec r(dx + q.dim);
    r[dx + dx + j] = 1;
    r[dx + dx + dy + j] = 1;
    grows.push_back(std::move(r));
  }
  CanonicalRelation g = make_relation(
      f.target, q, Subspace::span(dx + q.dim, Matrix::from_rows(grows, dx + q.dim)));

  /* h : Q <- Y; in Q x Ybar the f-row (a|b) lands as (a, 0, b; 0) — the
   * f-partner must sit in the Ybar slot of Q or isotropy fails — and the
   * pass-through y as (0, v, 0; v). */
  std::vector<Vec> hrows;
  for (size_t i = 0; i < f.body.dim(); ++i) {
    Vec r(q.dim + dy);
    for (size_t j = 0; j < dx; ++j) r[j] = f.body.basis().at(i, j);
    for (size_t j = 0; j < dy; ++j) r[dx + dy + j] = f.body.basis().at(i, dx + j);
    hrows.push_back(std::move(r));
  }
  for (size_t j = 0; j < dy; ++j) {
    Vec r(q.dim + dy);
    r[dx + j] = 1;
    r[q.dim + j] = 1;
    hrows.push_back(std::move(r));
  }
  CanonicalRelation h = make_relation(
      q, f.source, Subspace::span(q.dim + dy, Matrix::from_rows(hrows, q.dim + dy)));
  return {g, h};
}

size_t fixed_space_dim(const CanonicalRelation& f) {
  if (!(f.source == f.target))
    throw TypeMismatchError("fixed_space_dim: not an endomorphism");
  return subspace_intersect(f.body, diagonal_subspace(f.target.dim)).dim();
}

CanonicalRelation random_relation(Rng& rng, const SymplecticSpace& x,
                                  const SymplecticSpace& y, size_t moves) {
  SymplecticSpace p = product_space(x, dual_space(y));
  return make_relation(x, y, random_lagrangian(rng, p, moves));
}

}  // namespace canrel
