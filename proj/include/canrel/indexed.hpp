#pragma once
#include "canrel/relation.hpp"

namespace canrel {

/* Morphisms carry an integer index on top of the underlying relation.
 * Standard mode keeps indices nonnegative; extended mode admits negative
 * indices so reductions acquire two-sided inverses. */
enum class IndexMode { standard, extended };

struct IndexedCanonicalRelation {
  CanonicalRelation relation;
  long long k = 0;
  IndexMode mode = IndexMode::standard;

  /* The index is intrinsic; the mode is bookkeeping. */
  friend bool operator==(const IndexedCanonicalRelation& a,
                         const IndexedCanonicalRelation& b) {
    return a.relation == b.relation && a.k == b.k;
  }
  friend bool operator!=(const IndexedCanonicalRelation& a,
                         const IndexedCanonicalRelation& b) {
    return !(a == b);
  }
};

IndexedCanonicalRelation make_indexed(const CanonicalRelation& f, long long k,
                                      IndexMode mode = IndexMode::standard);
IndexedCanonicalRelation indexed_identity(const SymplecticSpace& x);

/* (f,k')(g,k'') = (fg, k'+k''+excess of the pair). */
IndexedCanonicalRelation icompose(const IndexedCanonicalRelation& a,
                                  const IndexedCanonicalRelation& b);
/* (f,k')x(g,k'') = (f x g, k'+k''). */
IndexedCanonicalRelation iproduct(const IndexedCanonicalRelation& a,
                                  const IndexedCanonicalRelation& b);
/* Fixed-space dimension plus index, for endomorphisms. */
long long itrace(const IndexedCanonicalRelation& a);

/* A point (L,k) of the indexed Lagrangian Grassmannian of X. */
struct IndexedLagrangian {
  SymplecticSpace space;
  Subspace lagrangian;
  long long k = 0;

  friend bool operator==(const IndexedLagrangian& a, const IndexedLagrangian& b) {
    return a.space == b.space && a.lagrangian == b.lagrangian && a.k == b.k;
  }
  friend bool operator!=(const IndexedLagrangian& a, const IndexedLagrangian& b) {
    return !(a == b);
  }
};

IndexedLagrangian make_indexed_lagrangian(const SymplecticSpace& x, const Subspace& l,
                                          long long k);

/* (L,k) <= (L',k') iff d(L,L') <= k' - k. */
bool sabot_leq(const IndexedLagrangian& a, const IndexedLagrangian& b);

/* (L,k) -> (L^C, k + E^C(L)). */
IndexedLagrangian indexed_reduce(const ReductionData& rd, const IndexedLagrangian& a);

/* (L,k) -> (L,k+j). */
IndexedLagrangian ishift(const IndexedLagrangian& a, long long j);

/* Composition of graphs as indexed Lagrangians: reduce the block direct sum
 * of the bodies by the diagonal coisotropic X x diag(Y) x Zbar.  g1 must
 * live in X x Ybar and g2 in Y x Zbar; the result lives in X x Zbar and
 * equals the graph of the composition of the underlying morphisms with the
 * excess absorbed into the index. */
IndexedLagrangian igraph_compose(const IndexedLagrangian& g1, const IndexedLagrangian& g2,
                                 const SymplecticSpace& x, const SymplecticSpace& y,
                                 const SymplecticSpace& z);

/* Standard position for a prescribed shadow and excess: in
 * Q = X x R^2k x R^2r take C = X x R^k x R^r (spanned by the e-vectors in
 * the added factors) and L = Lambda x R^k x R^r* (e-vectors in the 2k
 * factor, e*-vectors in the 2r factor).  Reducing (L,0) by C gives
 * (Lambda,k) for every r. */
struct HyperNormalForm {
  SymplecticSpace space;  // Q
  Subspace coisotropic;   // C
  Subspace lagrangian;    // L
  ReductionData chart;    // chart for C with reduced space == X
};
HyperNormalForm normal_form_hyper(const SymplecticSpace& x, const Subspace& lam,
                                  size_t k, size_t r);

/* Preimage construction: given a chart for C and a Lagrangian Lambda in the
 * reduced space, build L = W + Y + Z with W the section image of Lambda,
 * Y the span of the first k rows of C~, and Z the annihilator of Y inside a
 * Lagrangian complement of C~ in the symplectic orthogonal of the chart.
 * Then L is Lagrangian and reducing (L,0) gives (Lambda,k) exactly. */
Subspace lift_indexed(const ReductionData& rd, const Subspace& lam, size_t k);

/* One-parameter rational family L_t of Lagrangians: L_0 is the given L
 * (excess k, shadow L^C) and every L_t with t != 0 has excess k-q and
 * shadow Lambda, where r = d(L^C, Lambda) <= q <= k.  Spanning rows are
 * affine-linear in t. */
struct DeformationFamily {
  SymplecticSpace ambient;
  Subspace coisotropic;
  Matrix base;   // n x dim rows, the t = 0 spanning set
  Matrix slope;  // same shape; row i of L_t is base_i + t slope_i
  long long k = 0;
  long long q = 0;
  long long r = 0;
  /* Whether the stronger constraint r <= k - q also holds; tracked but not
   * enforced (see `verify` output). */
  bool satisfies_strict_inequality = false;

  Subspace eval(const Rat& t) const;
};
DeformationFamily deformation_family(const ReductionData& rd, const Subspace& l,
                                     const Subspace& lam, long long q);

/* (rho^C transposed, -dim C~) in extended mode: a one-sided inverse of the
 * reduction morphism whose compositions with (rho^C,0) give (1,0) on the
 * reduced side and the idempotent (R^C, -dim C~) on the ambient side. */
IndexedCanonicalRelation itranspose_reduction(const ReductionData& rd);

/* (f,k) -> (f^t, -k) for invertible f in extended mode; a genuine two-sided
 * inverse with zero-index compositions. */
IndexedCanonicalRelation iinvert(const IndexedCanonicalRelation& a);

IndexedLagrangian random_indexed_lagrangian(Rng& rng, const SymplecticSpace& x,
                                            size_t moves, long long max_k);

}  // namespace canrel
