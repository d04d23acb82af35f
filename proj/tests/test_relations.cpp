#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canrel/errors.hpp"
#include "canrel/relation.hpp"

using namespace canrel;

static Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

static Subspace span_of(size_t ambient, std::initializer_list<Vec> rows) {
  std::vector<Vec> vs(rows);
  return Subspace::span(ambient, Matrix::from_rows(vs, ambient));
}

/* L1 x L2 as a morphism between the ambient spaces of the factors */
static CanonicalRelation box(const SymplecticSpace& x, const SymplecticSpace& y,
                             const Subspace& l1, const Subspace& l2) {
  return make_relation(x, y, subspace_direct_sum(l1, l2));
}

TEST_CASE("construction and validation") {
  SymplecticSpace x1 = SymplecticSpace::standard(1);
  CanonicalRelation id = identity_relation(x1);
  CHECK(id.body == span_of(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(make_relation(x1, x1, id.body) == id);

  /* morphisms 1 <- Y are the Lagrangians of Ybar */
  CanonicalRelation from_l =
      make_relation(SymplecticSpace::unit(), x1, span_of(2, {unit_vec(2, 0)}));
  CHECK(from_l.body.dim() == 1);

  CHECK_THROWS_AS(make_relation(x1, x1, span_of(4, {unit_vec(4, 0)})),
                  PreconditionError);
  CHECK_THROWS_AS(make_relation(x1, x1, Subspace::full(4)), PreconditionError);
  CHECK_THROWS_AS(make_relation(x1, x1, span_of(2, {unit_vec(2, 0)})),
                  TypeMismatchError);
}

TEST_CASE("composition with identities and box relations") {
  for (uint64_t t = 0; t < 25; ++t) {
    Rng rng(trial_seed(101, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    CanonicalRelation f = random_relation(rng, x, y, rng.int_in(0, 6));
    CHECK(compose(f, identity_relation(y)) == f);
    CHECK(compose(identity_relation(x), f) == f);
  }

  SymplecticSpace x1 = SymplecticSpace::standard(1);
  Subspace le = span_of(2, {unit_vec(2, 0)}), lp = span_of(2, {unit_vec(2, 1)});
  CanonicalRelation f = box(x1, x1, le, lp), g = box(x1, x1, le, le);
  CHECK(compose(f, g) == box(x1, x1, le, le));
  CHECK(compose(g, f) == box(x1, x1, le, lp));

  CHECK_THROWS_AS(compose(f, identity_relation(SymplecticSpace::standard(2))),
                  TypeMismatchError);
}

TEST_CASE("pair excess and congeniality") {
  SymplecticSpace x1 = SymplecticSpace::standard(1);
  Subspace le = span_of(2, {unit_vec(2, 0)}), lp = span_of(2, {unit_vec(2, 1)});

  /* f = span{e} x span{e}, g = span{e} x span{e*}: the trajectories over
   * (0,0) are the y in span{e}, one dimension of them */
  CanonicalRelation f = box(x1, x1, le, le), g = box(x1, x1, le, lp);
  CHECK(pair_excess(f, g) == 1);
  Congeniality c = congeniality(f, g);
  CHECK_FALSE(c.monic);
  CHECK_FALSE(c.transversal);

  for (uint64_t t = 0; t < 25; ++t) {
    Rng rng(trial_seed(107, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    CanonicalRelation h = random_relation(rng, x, y, rng.int_in(0, 6));
    CHECK(pair_excess(h, identity_relation(y)) == 0);
    CHECK(pair_excess(identity_relation(x), h) == 0);
    Congeniality ci = congeniality(h, identity_relation(y));
    CHECK(ci.monic);
    CHECK(ci.transversal);
  }

  /* transversal pairs found by re-randomizing until the excess vanishes */
  for (uint64_t t = 0; t < 15; ++t) {
    Rng rng(trial_seed(109, t));
    SymplecticSpace x = SymplecticSpace::standard(2);
    CanonicalRelation a = random_relation(rng, x, x, 5);
    CanonicalRelation b = random_relation(rng, x, x, 5);
    while (pair_excess(a, b) != 0) b = random_relation(rng, x, x, 5);
    Congeniality cg = congeniality(a, b);
    CHECK(cg.monic);
    CHECK(cg.transversal);
  }
}

TEST_CASE("transpose and dual are involutive") {
  for (uint64_t t = 0; t < 25; ++t) {
    Rng rng(trial_seed(113, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    CanonicalRelation f = random_relation(rng, x, y, rng.int_in(0, 6));
    CHECK(transpose(transpose(f)) == f);
    CHECK(dual_morphism(dual_morphism(f)) == f);
  }
  SymplecticSpace x1 = SymplecticSpace::standard(1);
  CHECK(transpose(identity_relation(x1)) == identity_relation(x1));
}

TEST_CASE("units, counits and zigzags") {
  CHECK(unit_delta(SymplecticSpace::unit()).body == Subspace::zero(0));
  CHECK(counit_eps(SymplecticSpace::unit()).body == Subspace::zero(0));

  SymplecticSpace x1 = SymplecticSpace::standard(1);
  CanonicalRelation d = unit_delta(x1);
  CHECK(d.target.dim == 4);
  CHECK(d.body.dim() == 2);
  CHECK(d.body == span_of(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));

  /* dual of the unit is the counit of the dual, after the block swap */
  for (size_t n = 0; n <= 2; ++n) {
    SymplecticSpace x = SymplecticSpace::standard(n);
    CanonicalRelation db = dual_morphism(unit_delta(x));
    CanonicalRelation et = transpose(counit_eps(dual_space(x)));
    CHECK(db.body == et.body);
    size_t d2 = 2 * x.dim;
    Matrix s(d2, d2);  // block swap (a,b) -> (b,a)
    for (size_t i = 0; i < x.dim; ++i) {
      s.at(i, x.dim + i) = 1;
      s.at(x.dim + i, i) = 1;
    }
    CHECK(s.transpose() * db.target.form * s == et.target.form);
    CHECK(map_subspace(s, db.body) == et.body);
  }

  for (size_t n = 0; n <= 2; ++n) {
    SymplecticSpace x = SymplecticSpace::standard(n);
    CanonicalRelation idx = identity_relation(x);
    CanonicalRelation idxbar = identity_relation(dual_space(x));
    CanonicalRelation left = compose(tensor(idx, counit_eps(x)),
                                     tensor(unit_delta(x), idx));
    CHECK(left == idx);
    CHECK(pair_excess(tensor(idx, counit_eps(x)), tensor(unit_delta(x), idx)) == 0);
    CanonicalRelation right = compose(tensor(counit_eps(x), idxbar),
                                      tensor(idxbar, unit_delta(x)));
    CHECK(right == idxbar);
    CHECK(pair_excess(tensor(counit_eps(x), idxbar), tensor(idxbar, unit_delta(x))) == 0);
  }
}

TEST_CASE("graph and ungraph") {
  SymplecticSpace x1 = SymplecticSpace::standard(1);
  CHECK(graph_morphism(identity_relation(x1)) == unit_delta(x1));

  /* the empty-space endomorphism is its own graph */
  CanonicalRelation triv =
      make_relation(SymplecticSpace::unit(), SymplecticSpace::unit(), Subspace::zero(0));
  CHECK(graph_morphism(triv) == triv);

  for (uint64_t t = 0; t < 100; ++t) {
    Rng rng(trial_seed(127, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    CanonicalRelation f = random_relation(rng, x, y, rng.int_in(0, 6));
    CanonicalRelation gamma = graph_morphism(f);
    CHECK(gamma.source == SymplecticSpace::unit());
    CHECK(ungraph_morphism(gamma, x, y) == f);
    /* other direction: any Lagrangian of X x Ybar is a graph */
    CanonicalRelation gamma2 = make_relation(product_space(x, dual_space(y)),
                                             SymplecticSpace::unit(),
                                             random_relation(rng, x, y, 4).body);
    CHECK(graph_morphism(ungraph_morphism(gamma2, x, y)) == gamma2);
  }

  CHECK_THROWS_AS(
      ungraph_morphism(identity_relation(x1), x1, SymplecticSpace::unit()),
      TypeMismatchError);
}

TEST_CASE("reduced products") {
  SymplecticSpace x1 = SymplecticSpace::standard(1);
  CanonicalRelation d = unit_delta(x1);
  CHECK(reduced_product(d, d, x1, x1, x1) == d);

  for (uint64_t t = 0; t < 40; ++t) {
    Rng rng(trial_seed(131, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace z = SymplecticSpace::standard(rng.int_in(0, 2));
    CanonicalRelation f = random_relation(rng, x, y, rng.int_in(0, 6));
    CanonicalRelation g = random_relation(rng, y, z, rng.int_in(0, 6));
    CHECK(reduced_product(graph_morphism(f), graph_morphism(g), x, y, z) ==
          graph_morphism(compose(f, g)));
  }

  /* middle = 1: the reduced product is the plain monoidal product */
  Subspace le = span_of(2, {unit_vec(2, 0)}), lp = span_of(2, {unit_vec(2, 1)});
  SymplecticSpace u = SymplecticSpace::unit();
  CanonicalRelation g1 = make_relation(x1, u, le);
  CanonicalRelation g2 = make_relation(dual_space(x1), u, lp);
  CanonicalRelation rp = reduced_product(g1, g2, x1, u, x1);
  CHECK(rp.body == subspace_direct_sum(le, lp));
}

TEST_CASE("reduction relations and projectors") {
  SymplecticSpace x = SymplecticSpace::standard(2);

  SUBCASE("C = X") {
    ReductionData rd = reduction_data(x, Subspace::full(4));
    CanonicalRelation rho = reduction_relation(rd);
    MorphismClass mc = classify_morphism(rho);
    CHECK(mc.is_reduction);
    CHECK(mc.is_coreduction);  // invertible chart
    CHECK(projector_relation(rd) == identity_relation(x));
  }
  SUBCASE("C Lagrangian") {
    SymplecticSpace x1 = SymplecticSpace::standard(1);
    Subspace c = span_of(2, {unit_vec(2, 0)});
    ReductionData rd = reduction_data(x1, c);
    CHECK(projector_relation(rd).body == subspace_direct_sum(c, c));
  }
  SUBCASE("proper coisotropic") {
    Subspace c = span_of(4, {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)});
    ReductionData rd = reduction_data(x, c);
    CanonicalRelation rho = reduction_relation(rd);
    MorphismClass mc = classify_morphism(rho);
    CHECK(mc.is_reduction);
    CHECK_FALSE(mc.is_coreduction);
    CHECK_FALSE(mc.everywhere_defined);  // domain is C only
    MorphismClass mt = classify_morphism(transpose(rho));
    CHECK(mt.is_coreduction);
    CHECK_FALSE(mt.is_reduction);

    CHECK(pair_excess(rho, transpose(rho)) == rd.perp.dim());
    CHECK(compose(rho, transpose(rho)) == identity_relation(rd.reduced));

    CanonicalRelation r = projector_relation(rd);
    CHECK(compose(r, r) == r);
    /* independent description: {(x,y) in C x C : x - y in C~} */
    std::vector<Vec> rows;
    for (size_t i = 0; i < c.dim(); ++i) {
      Vec v(8);
      for (size_t j = 0; j < 4; ++j) v[j] = v[4 + j] = c.basis().at(i, j);
      rows.push_back(v);
    }
    for (size_t i = 0; i < rd.perp.dim(); ++i) {
      Vec v(8);
      for (size_t j = 0; j < 4; ++j) v[j] = rd.perp.basis().at(i, j);
      rows.push_back(v);
    }
    CHECK(r.body == Subspace::span(8, Matrix::from_rows(rows, 8)));
  }
  SUBCASE("random coisotropics") {
    for (uint64_t t = 0; t < 20; ++t) {
      Rng rng(trial_seed(137, t));
      size_t n = rng.int_in(1, 2);
      SymplecticSpace xs = SymplecticSpace::standard(n);
      ReductionData rd =
          reduction_data(xs, random_coisotropic(rng, xs, rng.int_in(n, 2 * n)));
      CanonicalRelation rho = reduction_relation(rd);
      CHECK(classify_morphism(rho).is_reduction);
      CHECK(pair_excess(rho, transpose(rho)) == rd.perp.dim());
      CHECK(compose(rho, transpose(rho)) == identity_relation(rd.reduced));
      CanonicalRelation r = projector_relation(rd);
      CHECK(compose(r, r) == r);
    }
  }
}

TEST_CASE("morphism classification") {
  SymplecticSpace x1 = SymplecticSpace::standard(1);
  MorphismClass mi = classify_morphism(identity_relation(x1));
  CHECK(mi.is_reduction);
  CHECK(mi.is_coreduction);

  /* Lagrangians as morphisms X <- 1 are coreductions, 1 <- X reductions */
  Subspace le = span_of(2, {unit_vec(2, 0)});
  MorphismClass ml = classify_morphism(make_relation(x1, SymplecticSpace::unit(), le));
  CHECK(ml.is_coreduction);
  CHECK_FALSE(ml.surjective);
  MorphismClass mr = classify_morphism(make_relation(SymplecticSpace::unit(), x1, le));
  CHECK(mr.is_reduction);

  for (uint64_t t = 0; t < 30; ++t) {
    Rng rng(trial_seed(139, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    CanonicalRelation f = random_relation(rng, x, y, rng.int_in(0, 6));
    MorphismClass a = classify_morphism(f), b = classify_morphism(transpose(f));
    CHECK(a.is_reduction == b.is_coreduction);
    CHECK(a.is_coreduction == b.is_reduction);
    CHECK(a.single_valued == b.injective);
    CHECK(a.surjective == b.everywhere_defined);
  }
}

TEST_CASE("reduction/coreduction composition laws") {
  for (uint64_t t = 0; t < 30; ++t) {
    Rng rng(trial_seed(149, t));
    size_t n = rng.int_in(1, 2);
    SymplecticSpace xs = SymplecticSpace::standard(n);
    ReductionData rd1 =
        reduction_data(xs, random_coisotropic(rng, xs, rng.int_in(n, 2 * n)));
    CanonicalRelation r1 = reduction_relation(rd1);
    size_t m = rd1.reduced.dim / 2;
    ReductionData rd2 = reduction_data(
        rd1.reduced, random_coisotropic(rng, rd1.reduced, rng.int_in(m, 2 * m)));
    CanonicalRelation r2 = reduction_relation(rd2);
    CHECK(classify_morphism(compose(r2, r1)).is_reduction);
    CHECK(classify_morphism(compose(transpose(r1), transpose(r2))).is_coreduction);
    /* coreduction first or reduction second: always a congenial pair */
    CHECK(pair_excess(transpose(r1), r1) == 0);
    CHECK(pair_excess(r2, r1) == 0);
  }
}

TEST_CASE("congeniality of triples") {
  /* (f,g) and (fg,h) congenial iff (g,h) and (f,gh) congenial */
  size_t seen_both = 0;
  for (uint64_t t = 0; t < 120; ++t) {
    Rng rng(trial_seed(151, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace z = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace w = SymplecticSpace::standard(rng.int_in(0, 2));
    CanonicalRelation f = random_relation(rng, x, y, rng.int_in(0, 5));
    CanonicalRelation g = random_relation(rng, y, z, rng.int_in(0, 5));
    CanonicalRelation h = random_relation(rng, z, w, rng.int_in(0, 5));
    bool left = pair_excess(f, g) == 0 && pair_excess(compose(f, g), h) == 0;
    bool right = pair_excess(g, h) == 0 && pair_excess(f, compose(g, h)) == 0;
    CHECK(left == right);
    if (left) ++seen_both;
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
  CHECK(seen_both > 0);  // the law is exercised on nontrivial instances
}

TEST_CASE("through-the-middle factorization") {
  SymplecticSpace x1 = SymplecticSpace::standard(1);

  auto check_contract = [](const CanonicalRelation& f) {
    auto [g, h] = factor(f);
    CHECK(g.source == h.target);
    CHECK(g.source.dim == f.target.dim + 2 * f.source.dim);
    CHECK(classify_morphism(g).is_reduction);
    CHECK(classify_morphism(h).is_coreduction);
    CHECK(pair_excess(g, h) == 0);
    CHECK(compose(g, h) == f);
  };

  check_contract(identity_relation(x1));
  check_contract(make_relation(x1, SymplecticSpace::unit(),
                               span_of(2, {unit_vec(2, 0)})));
  check_contract(make_relation(SymplecticSpace::unit(), x1,
                               span_of(2, {unit_vec(2, 1)})));

  for (uint64_t t = 0; t < 200; ++t) {
    Rng rng(trial_seed(157, t));
    SymplecticSpace x = SymplecticSpace::standard(rng.int_in(0, 2));
    SymplecticSpace y = SymplecticSpace::standard(rng.int_in(0, 2));
    check_contract(random_relation(rng, x, y, rng.int_in(0, 6)));
  }
}

TEST_CASE("fixed spaces of endomorphisms") {
  SymplecticSpace x = SymplecticSpace::standard(2);
  CHECK(fixed_space_dim(identity_relation(x)) == 4);

  Subspace l1 = span_of(4, {unit_vec(4, 0), unit_vec(4, 1)});
  Subspace l2 = span_of(4, {unit_vec(4, 2), unit_vec(4, 3)});
  CHECK(fixed_space_dim(box(x, x, l1, l2)) == 0);
  CHECK(fixed_space_dim(box(x, x, l1, l1)) == 2);

  for (uint64_t t = 0; t < 20; ++t) {
    Rng rng(trial_seed(163, t));
    Subspace l = random_lagrangian(rng, x, rng.int_in(0, 8));
    CHECK(fixed_space_dim(box(x, x, l, l)) == l.dim());
  }
  Rng rng(1);
  CHECK_THROWS_AS(
      fixed_space_dim(random_relation(rng, x, SymplecticSpace::standard(1), 2)),
      TypeMismatchError);
}
