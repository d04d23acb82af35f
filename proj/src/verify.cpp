#include "canrel/verify.hpp"

#include "canrel/errors.hpp"
#include "canrel/finite_rel.hpp"
#include "canrel/indexed.hpp"
#include "canrel/json_io.hpp"
#include "canrel/wwpath.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <set>

namespace canrel {

namespace {

using Notes = std::vector<std::string>;
using LawFn = std::string (*)(Rng&, const VerifyOptions&, Notes&);

struct Law {
  const char* name;
  LawFn fn;
};
struct SuiteDef {
  const char* name;
  std::vector<Law> laws;
};

uint64_t fnv1a(const char* s) {
  uint64_t h = 1469598103934665603ull;
  for (; *s; ++s) h = (h ^ (uint64_t)(unsigned char)*s) * 1099511628211ull;
  return h;
}

size_t half_dim(Rng& rng, const VerifyOptions& opt, size_t hi) {
  size_t cap = std::max<size_t>(opt.max_dim / 2, 1);
  return (size_t)rng.int_in(1, (long)std::min(hi, cap));
}

std::string dump(const Json& j) { return j.dump(); }

CanonicalRelation box(const SymplecticSpace& x, const SymplecticSpace& y,
                      const Subspace& l1, const Subspace& l2) {
  return make_relation(x, y, subspace_direct_sum(l1, l2));
}

/* ---------------- exact_linalg ---------------- */

std::string law_rref_idempotent(Rng& rng, const VerifyOptions&, Notes&) {
  Matrix a = random_matrix(rng, (size_t)rng.int_in(1, 6), (size_t)rng.int_in(1, 6));
  Matrix r = rref(a);
  if (rref(r) != r)
    return dump({{"law", "rref(rref(a)) == rref(a)"},
                 {"a", subspace_to_json(Subspace::span(a.cols(), a))}});
  return "";
}

std::string law_rank_nullity(Rng& rng, const VerifyOptions&, Notes&) {
  Matrix a = random_matrix(rng, (size_t)rng.int_in(1, 6), (size_t)rng.int_in(1, 6));
  if (rank(a) + kernel(a).dim() != a.cols())
    return dump({{"law", "rank + nullity == cols"},
                 {"rank", rank(a)},
                 {"nullity", kernel(a).dim()},
                 {"cols", a.cols()}});
  return "";
}

std::string law_modular_dimension(Rng& rng, const VerifyOptions&, Notes&) {
  size_t n = (size_t)rng.int_in(1, 8);
  Subspace a = random_subspace(rng, n, (size_t)rng.int_in(0, (long)n));
  Subspace b = random_subspace(rng, n, (size_t)rng.int_in(0, (long)n));
  if (a.dim() + b.dim() != subspace_sum(a, b).dim() + subspace_intersect(a, b).dim())
    return dump({{"law", "dim a + dim b == dim(a+b) + dim(a^b)"},
                 {"a", subspace_to_json(a)},
                 {"b", subspace_to_json(b)}});
  return "";
}

std::string law_canonical_soundness(Rng& rng, const VerifyOptions&, Notes&) {
  size_t n = (size_t)rng.int_in(1, 8);
  Subspace a = random_subspace(rng, n, (size_t)rng.int_in(0, (long)n));
  /* Re-present a through an invertible row mix; spans must collide. */
  Matrix mix = random_matrix(rng, a.dim(), a.dim());
  while (rank(mix) < a.dim()) mix = random_matrix(rng, a.dim(), a.dim());
  Subspace a2 = Subspace::span(n, mix * a.basis());
  Subspace c = random_subspace(rng, n, (size_t)rng.int_in(0, (long)n));
  bool ok = (a == a2) && ((a == c) == (subspace_leq(a, c) && subspace_leq(c, a)));
  if (!ok)
    return dump({{"law", "equality iff mutual containment"},
                 {"a", subspace_to_json(a)},
                 {"c", subspace_to_json(c)}});
  return "";
}

/* ---------------- symplectic ---------------- */

std::string law_double_complement(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 4));
  Subspace w = random_subspace(rng, x.dim, (size_t)rng.int_in(0, (long)x.dim));
  Subspace wp = symp_complement(x, w);
  if (symp_complement(x, wp) != w || w.dim() + wp.dim() != x.dim)
    return dump({{"law", "(W~)~ == W and dim W + dim W~ == dim X"},
                 {"w", subspace_to_json(w)}});
  return "";
}

std::string law_reduced_lagrangian(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 3);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto l = random_lagrangian(rng, x, 8);
  auto lc = reduce_lagrangian(rd, l);
  if (!classify_subspace(rd.reduced, lc).is_lagrangian)
    return dump({{"law", "L^C Lagrangian"},
                 {"c", subspace_to_json(c)},
                 {"l", subspace_to_json(l)}});
  return "";
}

std::string law_excess_two_formulas(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 3);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto l = random_lagrangian(rng, x, 8);
  size_t by_intersection = subspace_intersect(l, rd.perp).dim();
  size_t by_codim = x.dim - subspace_sum(l, c).dim();
  size_t reported = excess_of_reduction(rd, l);
  if (by_intersection != by_codim || reported != by_intersection)
    return dump({{"law", "dim(L^Cperp) == codim(L+C) == excess"},
                 {"intersection", by_intersection},
                 {"codim", by_codim},
                 {"reported", reported}});
  return "";
}

std::string law_chow_metric(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 3));
  auto l1 = random_lagrangian(rng, x, 8);
  auto l2 = random_lagrangian(rng, x, 8);
  auto l3 = random_lagrangian(rng, x, 8);
  bool ok = (chow_distance(l1, l1) == 0) && ((chow_distance(l1, l2) == 0) == (l1 == l2)) &&
            (chow_distance(l1, l2) == chow_distance(l2, l1)) &&
            (chow_distance(l1, l3) <= chow_distance(l1, l2) + chow_distance(l2, l3));
  if (!ok)
    return dump({{"law", "Chow distance is a metric"},
                 {"l1", subspace_to_json(l1)},
                 {"l2", subspace_to_json(l2)},
                 {"l3", subspace_to_json(l3)}});
  return "";
}

std::string law_adapted_basis(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 3));
  auto l = random_lagrangian(rng, x, 8);
  auto i = random_isotropic(rng, x, (size_t)rng.int_in(0, (long)(x.dim / 2)));
  Matrix t = adapted_canonical_basis(x, l, i);
  if (t.transpose() * x.form * t != x.form)
    return dump({{"law", "adapted basis is symplectic"}, {"l", subspace_to_json(l)}});
  /* Symplectically congruent data must land on the identical normal form. */
  Matrix g = random_symplectic_matrix(rng, x, 8);
  auto l2 = map_subspace(g, l);
  auto i2 = map_subspace(g, i);
  Matrix t2 = adapted_canonical_basis(x, l2, i2);
  if (map_subspace(t, l) != map_subspace(t2, l2) ||
      map_subspace(t, i) != map_subspace(t2, i2))
    return dump({{"law", "equal invariants give equal normal forms"},
                 {"l", subspace_to_json(l)},
                 {"i", subspace_to_json(i)}});
  return "";
}

/* ---------------- relations ---------------- */

std::string law_composition_closure(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t hx = half_dim(rng, opt, 2), hy = half_dim(rng, opt, 2), hz = half_dim(rng, opt, 2);
  auto x = SymplecticSpace::standard(hx);
  auto y = SymplecticSpace::standard(hy);
  auto z = SymplecticSpace::standard(hz);
  auto f = random_relation(rng, x, y, 8);
  auto g = random_relation(rng, y, z, 8);
  auto fg = compose(f, g);
  auto p = product_space(x, dual_space(z));
  if (!classify_subspace(p, fg.body).is_lagrangian)
    return dump({{"law", "composition is Lagrangian"},
                 {"f", relation_to_json(f)},
                 {"g", relation_to_json(g)}});
  return "";
}

std::string law_monic_transversal(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t hx = half_dim(rng, opt, 2), hy = half_dim(rng, opt, 2), hz = half_dim(rng, opt, 2);
  auto x = SymplecticSpace::standard(hx);
  auto y = SymplecticSpace::standard(hy);
  auto z = SymplecticSpace::standard(hz);
  CanonicalRelation f = random_relation(rng, x, y, 8);
  CanonicalRelation g = random_relation(rng, y, z, 8);
  if (rng.coin()) {
    /* Degenerate pair sharing a Lagrangian factor in the middle. */
    auto shared = random_lagrangian(rng, y, 8);
    f = box(x, y, random_lagrangian(rng, x, 8), shared);
    g = box(y, z, shared, random_lagrangian(rng, z, 8));
  }
  auto cg = congeniality(f, g);
  bool monic_by_excess = pair_excess(f, g) == 0;
  if (cg.monic != cg.transversal || cg.monic != monic_by_excess)
    return dump({{"law", "monic iff transversal iff excess 0"},
                 {"f", relation_to_json(f)},
                 {"g", relation_to_json(g)}});
  return "";
}

std::string law_graph_ungraph(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto y = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto f = random_relation(rng, x, y, 8);
  if (ungraph_morphism(graph_morphism(f), x, y) != f)
    return dump({{"law", "ungraph(graph(f)) == f"}, {"f", relation_to_json(f)}});
  auto gamma = random_relation(rng, product_space(x, dual_space(y)),
                               SymplecticSpace::unit(), 8);
  if (graph_morphism(ungraph_morphism(gamma, x, y)) != gamma)
    return dump({{"law", "graph(ungraph(g)) == g"}, {"gamma", relation_to_json(gamma)}});
  return "";
}

std::string law_reduced_product(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto y = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto z = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto f = random_relation(rng, x, y, 8);
  auto g = random_relation(rng, y, z, 8);
  if (reduced_product(graph_morphism(f), graph_morphism(g), x, y, z) !=
      graph_morphism(compose(f, g)))
    return dump({{"law", "graph(f) * graph(g) == graph(fg)"},
                 {"f", relation_to_json(f)},
                 {"g", relation_to_json(g)}});
  return "";
}

std::string law_classify_transpose(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 2);
  auto x = SymplecticSpace::standard(h);
  auto y = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto f = random_relation(rng, x, y, 8);
  auto cf = classify_morphism(f);
  auto ct = classify_morphism(transpose(f));
  if (cf.single_valued != ct.injective || cf.everywhere_defined != ct.surjective ||
      cf.is_reduction != ct.is_coreduction)
    return dump({{"law", "classification swaps under transpose"},
                 {"f", relation_to_json(f)}});

  /* Reductions chain: X^C1 <- X, then reduce the reduced space again. */
  auto c1 = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd1 = reduction_data(x, c1);
  auto rho1 = reduction_relation(rd1);
  size_t h2 = rd1.reduced.dim / 2;
  auto c2 = random_coisotropic(rng, rd1.reduced,
                               (size_t)rng.int_in((long)h2, (long)(2 * h2)));
  auto rd2 = reduction_data(rd1.reduced, c2);
  auto rho2 = reduction_relation(rd2);
  if (!classify_morphism(compose(rho2, rho1)).is_reduction)
    return dump({{"law", "reductions compose to reductions"},
                 {"c1", subspace_to_json(c1)},
                 {"c2", subspace_to_json(c2)}});
  if (!classify_morphism(compose(transpose(rho1), transpose(rho2))).is_coreduction)
    return dump({{"law", "coreductions compose to coreductions"},
                 {"c1", subspace_to_json(c1)},
                 {"c2", subspace_to_json(c2)}});
  return "";
}

std::string law_congenial_edges(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 2);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto rho = reduction_relation(rd);
  auto g = random_relation(rng, rd.reduced, SymplecticSpace::standard(half_dim(rng, opt, 2)), 8);
  if (pair_excess(transpose(rho), g) != 0)
    return dump({{"law", "coreduction on the left is congenial"},
                 {"c", subspace_to_json(c)},
                 {"g", relation_to_json(g)}});
  auto f = random_relation(rng, SymplecticSpace::standard(half_dim(rng, opt, 2)),
                           rd.reduced, 8);
  if (pair_excess(f, rho) != 0)
    return dump({{"law", "reduction on the right is congenial"},
                 {"c", subspace_to_json(c)},
                 {"f", relation_to_json(f)}});
  return "";
}

std::string law_selectivity(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto y = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto z = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto w = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto f = random_relation(rng, x, y, 8);
  auto g = random_relation(rng, y, z, 8);
  auto h = random_relation(rng, z, w, 8);
  bool left = pair_excess(f, g) == 0 && pair_excess(compose(f, g), h) == 0;
  bool right = pair_excess(g, h) == 0 && pair_excess(f, compose(g, h)) == 0;
  if (left != right)
    return dump({{"law", "congenial (f,g),(fg,h) iff congenial (g,h),(f,gh)"},
                 {"f", relation_to_json(f)},
                 {"g", relation_to_json(g)},
                 {"h", relation_to_json(h)}});
  return "";
}

/* ---------------- rigidity ---------------- */

std::string law_zigzag_identity(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 4));
  auto xbar = dual_space(x);
  auto idx = identity_relation(x);
  auto idbar = identity_relation(xbar);
  auto left = compose(tensor(idx, counit_eps(x)), tensor(unit_delta(x), idx));
  if (left != idx)
    return dump({{"law", "(1 (x) eps)(delta (x) 1) == 1"}, {"dim", x.dim}});
  auto right = compose(tensor(counit_eps(x), idbar), tensor(idbar, unit_delta(x)));
  if (right != idbar)
    return dump({{"law", "(eps (x) 1)(1 (x) delta) == 1"}, {"dim", x.dim}});
  return "";
}

std::string law_zigzag_excess(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 4));
  auto xbar = dual_space(x);
  auto idx = identity_relation(x);
  auto idbar = identity_relation(xbar);
  if (pair_excess(tensor(idx, counit_eps(x)), tensor(unit_delta(x), idx)) != 0 ||
      pair_excess(tensor(counit_eps(x), idbar), tensor(idbar, unit_delta(x))) != 0)
    return dump({{"law", "zigzag pairs are congenial"}, {"dim", x.dim}});
  return "";
}

/* ---------------- wwpath ---------------- */

std::string law_move_invariance(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t cap = std::min<size_t>(2, std::max<size_t>(opt.max_dim / 2, 1));
  Path p = random_path(rng, (size_t)rng.int_in(1, 4), cap, 6);
  auto nf = ww_normalize(p);
  for (size_t i = 0; i + 1 < p.steps.size(); ++i) {
    if (pair_excess(p.steps[i], p.steps[i + 1]) != 0) continue;
    if (ww_normalize(collapse(p, i)) != nf)
      return dump({{"law", "collapse preserves the normal form"},
                   {"path", path_to_json(p)},
                   {"position", i}});
  }
  for (size_t i = 0; i <= p.steps.size(); ++i)
    if (ww_normalize(insert_identity(p, i)) != nf)
      return dump({{"law", "identity insertion preserves the normal form"},
                   {"path", path_to_json(p)},
                   {"position", i}});
  return "";
}

std::string law_association_independence(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t cap = std::min<size_t>(2, std::max<size_t>(opt.max_dim / 2, 1));
  Path p = random_path(rng, (size_t)rng.int_in(1, 5), cap, 6);
  auto target = ww_normalize(p);
  using Acc = std::pair<CanonicalRelation, long long>;
  auto combine = [](const Acc& a, const Acc& b) {
    return Acc{compose(a.first, b.first),
               a.second + b.second + (long long)pair_excess(a.first, b.first)};
  };
  std::function<Acc(size_t, size_t, int)> fold = [&](size_t lo, size_t hi,
                                                     int mode) -> Acc {
    if (hi - lo == 1) return {p.steps[lo], 0};
    size_t mid = mode == 0 ? lo + 1 : (mode == 1 ? hi - 1 : lo + (hi - lo) / 2);
    return combine(fold(lo, mid, mode), fold(mid, hi, mode));
  };
  for (int mode = 0; mode < 3; ++mode) {
    Acc acc = fold(0, p.steps.size(), mode);
    if (acc.first != target.shadow || acc.second != (long long)target.excess)
      return dump({{"law", "every fold order matches the normal form"},
                   {"path", path_to_json(p)},
                   {"mode", mode}});
  }
  return "";
}

std::string law_excess_additivity(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t cap = std::min<size_t>(2, std::max<size_t>(opt.max_dim / 2, 1));
  size_t lp = (size_t)rng.int_in(1, 2), lq = (size_t)rng.int_in(1, 2);
  Path whole = random_path(rng, lp + lq, cap, 6);
  std::vector<CanonicalRelation> front(whole.steps.begin(), whole.steps.begin() + lp);
  std::vector<CanonicalRelation> back(whole.steps.begin() + lp, whole.steps.end());
  Path p = make_path(front), q = make_path(back);
  auto np = ww_normalize(p), nq = ww_normalize(q), nc = ww_normalize(path_concat(p, q));
  if (nc.excess != np.excess + nq.excess + pair_excess(np.shadow, nq.shadow))
    return dump({{"law", "excess adds along concatenation"},
                 {"p", path_to_json(p)},
                 {"q", path_to_json(q)}});
  return "";
}

std::string law_graph_excess(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t cap = std::min<size_t>(2, std::max<size_t>(opt.max_dim / 2, 1));
  Path p = random_path(rng, (size_t)rng.int_in(1, 3), cap, 6);
  auto idbar = identity_relation(dual_space(p.source));
  std::vector<CanonicalRelation> gsteps;
  for (size_t i = 0; i + 1 < p.steps.size(); ++i)
    gsteps.push_back(tensor(p.steps[i], idbar));
  gsteps.push_back(graph_morphism(p.steps.back()));
  auto ng = ww_normalize(make_path(gsteps));
  auto nf = ww_normalize(p);
  if (ng.excess != nf.excess || ng.shadow != graph_morphism(nf.shadow))
    return dump({{"law", "a path and its graph path share the excess"},
                 {"path", path_to_json(p)}});
  return "";
}

std::string law_factorization(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t cap = std::min<size_t>(2, std::max<size_t>(opt.max_dim / 2, 1));
  Path p = random_path(rng, (size_t)rng.int_in(1, 3), cap, 6);
  auto [a, b] = path_factorize(p);
  auto ca = classify_morphism(a);
  auto cb = classify_morphism(b);
  if (!ca.is_reduction || !cb.is_coreduction)
    return dump({{"law", "factorization shape"}, {"path", path_to_json(p)}});
  if (ww_normalize(make_path({a, b})) != ww_normalize(p))
    return dump({{"law", "factorization preserves the normal form"},
                 {"path", path_to_json(p)}});
  return "";
}

/* ---------------- finite ---------------- */

std::string law_finite_fibre(Rng& rng, const VerifyOptions&, Notes&) {
  size_t na = (size_t)rng.int_in(1, 4), nb = (size_t)rng.int_in(1, 4),
         nc = (size_t)rng.int_in(1, 4);
  auto r1 = frandom(rng, na, nb);
  auto r2 = frandom(rng, nb, nc);
  std::set<std::vector<size_t>> glued;
  for (const auto& s : ftrajectories({r1}))
    for (const auto& t : ftrajectories({r2}))
      if (s.back() == t.front()) glued.insert({s[0], s[1], t[1]});
  auto both = ftrajectories({r1, r2});
  std::set<std::vector<size_t>> direct(both.begin(), both.end());
  if (direct != glued)
    return dump({{"law", "trajectories glue along the seam"},
                 {"r1", finite_to_json(r1)},
                 {"r2", finite_to_json(r2)}});
  return "";
}

std::string law_finite_moves(Rng& rng, const VerifyOptions&, Notes&) {
  std::vector<size_t> sizes{(size_t)rng.int_in(1, 4)};
  size_t len = (size_t)rng.int_in(1, 3);
  std::vector<FiniteRelation> path;
  for (size_t i = 0; i < len; ++i) {
    sizes.push_back((size_t)rng.int_in(1, 4));
    path.push_back(frandom(rng, sizes[i], sizes[i + 1]));
  }
  size_t count = ftrajectories(path).size();
  for (size_t i = 0; i <= path.size(); ++i) {
    auto ins = path;
    size_t n = (i == 0) ? path.front().target_size : path[i - 1].source_size;
    ins.insert(ins.begin() + (long)i, fidentity(n));
    if (ftrajectories(ins).size() != count)
      return dump({{"law", "identity insertion keeps the count"}, {"position", i}});
  }
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!fmonic(path[i], path[i + 1])) continue;
    auto coll = path;
    coll[i] = fcompose(coll[i], coll[i + 1]);
    coll.erase(coll.begin() + (long)i + 1);
    if (ftrajectories(coll).size() != count)
      return dump({{"law", "monic collapse keeps the count"}, {"position", i}});
  }
  return "";
}

std::string law_finite_monic(Rng& rng, const VerifyOptions&, Notes&) {
  size_t nx = (size_t)rng.int_in(1, 5), ny = (size_t)rng.int_in(1, 5),
         nz = (size_t)rng.int_in(1, 5);
  auto f = frandom(rng, nx, ny);
  auto g = frandom(rng, ny, nz);
  bool brute = true;
  for (size_t x = 0; x < nx && brute; ++x)
    for (size_t z = 0; z < nz && brute; ++z) {
      size_t wit = 0;
      for (size_t y = 0; y < ny; ++y)
        if (f.at(x, y) && g.at(y, z)) ++wit;
      if (wit > 1) brute = false;
    }
  if (fmonic(f, g) != brute)
    return dump({{"law", "monic iff every witness set has size <= 1"},
                 {"f", finite_to_json(f)},
                 {"g", finite_to_json(g)}});
  return "";
}

/* ---------------- indexed ---------------- */

long long draw_k(Rng& rng, const VerifyOptions& opt) {
  return opt.extended ? rng.int_in(-3, 3) : rng.int_in(0, 3);
}

std::string law_indexed_category(Rng& rng, const VerifyOptions& opt, Notes&) {
  IndexMode mode = opt.extended ? IndexMode::extended : IndexMode::standard;
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto y = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto z = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto w = SymplecticSpace::standard(half_dim(rng, opt, 2));
  auto a = make_indexed(random_relation(rng, x, y, 8), draw_k(rng, opt), mode);
  auto b = make_indexed(random_relation(rng, y, z, 8), draw_k(rng, opt), mode);
  auto c = make_indexed(random_relation(rng, z, w, 8), draw_k(rng, opt), mode);
  if (icompose(icompose(a, b), c) != icompose(a, icompose(b, c)))
    return dump({{"law", "indexed composition is associative"},
                 {"a", indexed_to_json(a)},
                 {"b", indexed_to_json(b)},
                 {"c", indexed_to_json(c)}});
  if (icompose(indexed_identity(x), a) != a || icompose(a, indexed_identity(y)) != a)
    return dump({{"law", "(1,0) is the identity"}, {"a", indexed_to_json(a)}});
  return "";
}

std::string law_indexed_order(Rng& rng, const VerifyOptions& opt, Notes&) {
  auto x = SymplecticSpace::standard(half_dim(rng, opt, 3));
  auto a = random_indexed_lagrangian(rng, x, 6, 2);
  auto b = make_indexed_lagrangian(x, random_lagrangian(rng, x, 6),
                                   a.k + rng.int_in(0, 3));
  auto c = make_indexed_lagrangian(x, random_lagrangian(rng, x, 6),
                                   b.k + rng.int_in(0, 3));
  if (!sabot_leq(a, a))
    return dump({{"law", "order is reflexive"}, {"a", indexed_lagrangian_to_json(a)}});
  if (sabot_leq(a, b) && sabot_leq(b, a) && !(a == b))
    return dump({{"law", "order is antisymmetric"},
                 {"a", indexed_lagrangian_to_json(a)},
                 {"b", indexed_lagrangian_to_json(b)}});
  if (sabot_leq(a, b) && sabot_leq(b, c) && !sabot_leq(a, c))
    return dump({{"law", "order is transitive"},
                 {"a", indexed_lagrangian_to_json(a)},
                 {"b", indexed_lagrangian_to_json(b)},
                 {"c", indexed_lagrangian_to_json(c)}});
  return "";
}

std::string law_indexed_distance(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 3);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto l1 = random_lagrangian(rng, x, 8);
  auto l2 = random_lagrangian(rng, x, 8);
  long long d = (long long)chow_distance(l1, l2);
  long long dc = (long long)chow_distance(reduce_lagrangian(rd, l1),
                                          reduce_lagrangian(rd, l2));
  long long e1 = (long long)excess_of_reduction(rd, l1);
  long long e2 = (long long)excess_of_reduction(rd, l2);
  long long gap = e1 >= e2 ? e1 - e2 : e2 - e1;
  if (dc > d || dc > d - gap)
    return dump({{"law", "reduction contracts the distance by the excess gap"},
                 {"c", subspace_to_json(c)},
                 {"l1", subspace_to_json(l1)},
                 {"l2", subspace_to_json(l2)}});
  return "";
}

std::string law_indexed_order_preserved(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 3);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto l1 = random_lagrangian(rng, x, 8);
  auto l2 = random_lagrangian(rng, x, 8);
  long long k1 = rng.int_in(0, 3);
  auto a = make_indexed_lagrangian(x, l1, k1);
  auto b = make_indexed_lagrangian(x, l2,
                                   k1 + (long long)chow_distance(l1, l2) + rng.int_in(0, 1));
  if (!sabot_leq(a, b) || !sabot_leq(indexed_reduce(rd, a), indexed_reduce(rd, b)))
    return dump({{"law", "indexed reduction preserves the order"},
                 {"c", subspace_to_json(c)},
                 {"a", indexed_lagrangian_to_json(a)},
                 {"b", indexed_lagrangian_to_json(b)}});
  return "";
}

std::string law_indexed_lift(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 3);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto lam = random_lagrangian(rng, rd.reduced, 6);
  size_t k = (size_t)rng.int_in(0, (long)rd.perp.dim());
  auto l = lift_indexed(rd, lam, k);
  auto red = indexed_reduce(rd, make_indexed_lagrangian(x, l, 0));
  if (red.lagrangian != lam || red.k != (long long)k)
    return dump({{"law", "reduce after lift is the identity"},
                 {"c", subspace_to_json(c)},
                 {"lambda", subspace_to_json(lam)},
                 {"k", k}});
  return "";
}

std::string law_indexed_deformation(Rng& rng, const VerifyOptions& opt, Notes& notes) {
  size_t h = half_dim(rng, opt, 3);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto l = random_lagrangian(rng, x, 8);
  long long k = (long long)excess_of_reduction(rd, l);
  auto lam = random_lagrangian(rng, rd.reduced, 6);
  long long r = (long long)chow_distance(reduce_lagrangian(rd, l), lam);
  if (r > k) return "";  // no admissible q; precondition territory
  long long q = r + rng.int_in(0, k - r);
  auto fam = deformation_family(rd, l, lam, q);
  if (fam.eval(Rat(0)) != l)
    return dump({{"law", "family passes through the base"}, {"l", subspace_to_json(l)}});
  if (!fam.satisfies_strict_inequality && notes.size() < 5)
    notes.push_back(dump({{"note", "family generated with r <= q <= k but r > k - q; "
                                   "postconditions verified below nonetheless"},
                          {"k", fam.k},
                          {"q", fam.q},
                          {"r", fam.r}}));
  for (Rat t : {Rat(1), Rat(-1), Rat(2)}) {
    auto lt = fam.eval(t);
    if (!classify_subspace(x, lt).is_lagrangian)
      return dump({{"law", "family members are Lagrangian"},
                   {"t", rat_str(t)},
                   {"l", subspace_to_json(l)}});
    auto red = indexed_reduce(rd, make_indexed_lagrangian(x, lt, 0));
    if (red.lagrangian != lam || red.k != k - q)
      return dump({{"law", "family members reduce to (target, k - q)"},
                   {"t", rat_str(t)},
                   {"l", subspace_to_json(l)},
                   {"lambda", subspace_to_json(lam)}});
    if (!(r <= q))
      return dump({{"law", "refined order bound d(shadow, target) <= q"},
                   {"r", r},
                   {"q", q}});
  }
  return "";
}

std::string law_indexed_unit_monoid(Rng& rng, const VerifyOptions&, Notes&) {
  auto u = SymplecticSpace::unit();
  auto z = identity_relation(u);
  long long j = rng.int_in(0, 6), k = rng.int_in(0, 6);
  auto cz = icompose(make_indexed(z, j), make_indexed(z, k));
  auto pz = iproduct(make_indexed(z, j), make_indexed(z, k));
  if (cz != make_indexed(z, j + k) || pz != cz)
    return dump({{"law", "End(1) is (N, +) under both operations"},
                 {"j", j},
                 {"k", k}});
  return "";
}

std::string law_indexed_idempotent(Rng& rng, const VerifyOptions& opt, Notes&) {
  size_t h = half_dim(rng, opt, 3);
  auto x = SymplecticSpace::standard(h);
  auto c = random_coisotropic(rng, x, (size_t)rng.int_in((long)h, (long)(2 * h)));
  auto rd = reduction_data(x, c);
  auto proj = make_indexed(projector_relation(rd), -(long long)rd.perp.dim(),
                           IndexMode::extended);
  if (icompose(proj, proj) != proj)
    return dump({{"law", "(R^C, -dim C~) is idempotent"}, {"c", subspace_to_json(c)}});
  if (itrace(proj) != (long long)rd.reduced.dim)
    return dump({{"law", "itrace of the projector is dim X^C"},
                 {"c", subspace_to_json(c)}});
  return "";
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> suites = {
      {"linalg",
       {{"rref-idempotence", law_rref_idempotent},
        {"rank-nullity", law_rank_nullity},
        {"modular-dimension-law", law_modular_dimension},
        {"canonical-form-soundness", law_canonical_soundness}}},
      {"symplectic",
       {{"double-complement", law_double_complement},
        {"reduced-lagrangian", law_reduced_lagrangian},
        {"excess-two-formulas", law_excess_two_formulas},
        {"chow-metric", law_chow_metric},
        {"adapted-basis", law_adapted_basis}}},
      {"relations",
       {{"composition-closure", law_composition_closure},
        {"monic-transversal", law_monic_transversal},
        {"graph-ungraph", law_graph_ungraph},
        {"reduced-product", law_reduced_product},
        {"classification", law_classify_transpose},
        {"congenial-edges", law_congenial_edges},
        {"selectivity", law_selectivity}}},
      {"rigidity",
       {{"zigzag-identity", law_zigzag_identity},
        {"zigzag-excess", law_zigzag_excess}}},
      {"wwpath",
       {{"move-invariance", law_move_invariance},
        {"association-independence", law_association_independence},
        {"excess-additivity", law_excess_additivity},
        {"graph-excess", law_graph_excess},
        {"factorization", law_factorization}}},
      {"finite",
       {{"fibre-product", law_finite_fibre},
        {"move-invariance", law_finite_moves},
        {"monic-brute-force", law_finite_monic}}},
      {"indexed",
       {{"category-laws", law_indexed_category},
        {"partial-order", law_indexed_order},
        {"distance-non-increase", law_indexed_distance},
        {"order-preservation", law_indexed_order_preserved},
        {"lift-roundtrip", law_indexed_lift},
        {"deformation", law_indexed_deformation},
        {"unit-monoid", law_indexed_unit_monoid},
        {"extended-idempotent", law_indexed_idempotent}}},
  };
  return suites;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (name == s.name) return s;
  throw ParseError("unknown suite: " + name);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opt) {
  const SuiteDef& suite = find_suite(name);
  VerifyReport report;
  report.suite = name;
  report.trials = opt.trials;
  auto t0 = std::chrono::steady_clock::now();
  Notes notes;
  for (const Law& law : suite.laws) {
    uint64_t master = opt.seed ^ fnv1a(law.name);
    for (uint64_t trial = 0; trial < opt.trials; ++trial) {
      uint64_t seed = trial_seed(master, trial);
      Rng rng(seed);
      std::string cx;
      try {
        cx = law.fn(rng, opt, notes);
      } catch (const std::exception& e) {
        cx = std::string("exception: ") + e.what();
      }
      if (!cx.empty())
        report.failures.push_back(VerifyFailure{name, law.name, trial, seed, cx});
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
          .count();
  report.notes = std::move(notes);
  return report;
}

std::string replay_law(const std::string& suite, const std::string& law,
                       uint64_t seed, const VerifyOptions& opt) {
  const SuiteDef& s = find_suite(suite);
  for (const Law& l : s.laws)
    if (law == l.name) {
      Rng rng(seed);
      Notes notes;
      try {
        return l.fn(rng, opt, notes);
      } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
      }
    }
  throw ParseError("unknown law: " + law + " in suite " + suite);
}

}  // namespace canrel
