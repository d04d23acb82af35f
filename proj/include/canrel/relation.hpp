#pragma once
#include "canrel/symplectic.hpp"

#include <utility>

namespace canrel {

/* Linear canonical relation X <- Y: a Lagrangian subspace of X x Ybar,
 * coordinates ordered target block first.  Morphisms X <- 1 are exactly the
 * Lagrangian subspaces of X.  Immutable value type; equality is equality of
 * (target, source, canonical body). */
struct CanonicalRelation {
  SymplecticSpace target;  // X
  SymplecticSpace source;  // Y
  Subspace body;           // Lagrangian in X x Ybar

  friend bool operator==(const CanonicalRelation& a, const CanonicalRelation& b) {
    return a.target == b.target && a.source == b.source && a.body == b.body;
  }
  friend bool operator!=(const CanonicalRelation& a, const CanonicalRelation& b) {
    return !(a == b);
  }
};

/* Validates that body is Lagrangian in product_space(x, dual(y)). */
CanonicalRelation make_relation(const SymplecticSpace& x, const SymplecticSpace& y,
                                const Subspace& body);
CanonicalRelation identity_relation(const SymplecticSpace& x);

/* {(x,z) : exists y with (x,y) in f and (y,z) in g}, computed by cutting out
 * the fibre {(x,y,z)} with the stacked annihilator constraints and projecting
 * away y.  The result is checked to be Lagrangian on every call. */
CanonicalRelation compose(const CanonicalRelation& f, const CanonicalRelation& g);

/* dim{y : (0,y) in f, (y,0) in g} — the trajectory space over the zero pair.
 * Zero exactly when the pair is congenial. */
size_t pair_excess(const CanonicalRelation& f, const CanonicalRelation& g);

/* monic: the pair has no nonzero trajectory over 0.
 * transversal: (f x g) + (X x diag(Y) x Zbar) is everything.
 * The two flags are computed independently and required to agree. */
struct Congeniality {
  bool monic;
  bool transversal;
};
Congeniality congeniality(const CanonicalRelation& f, const CanonicalRelation& g);

/* Block swap: f^t : Y <- X. */
CanonicalRelation transpose(const CanonicalRelation& f);
/* Same body viewed in the dual spaces: fbar : Xbar <- Ybar. */
CanonicalRelation dual_morphism(const CanonicalRelation& f);

/* Monoidal product (X x Z <- Y x W); bodies interleave blockwise. */
CanonicalRelation tensor(const CanonicalRelation& f, const CanonicalRelation& g);

/* Unit d_X : X x Xbar <- 1 and counit e_X : 1 <- Xbar x X of the rigid
 * structure; both bodies are the diagonal {(x,x)}. */
CanonicalRelation unit_delta(const SymplecticSpace& x);
CanonicalRelation counit_eps(const SymplecticSpace& x);

/* g_f = (f (x) 1) d_Y : X x Ybar <- 1, and its inverse
 * f_g = (1 (x) e_Y) (g (x) 1_Y).  The split of g's target into X and Ybar
 * cannot be recovered from the product space, so ungraph takes it
 * explicitly and rejects g of the wrong shape. */
CanonicalRelation graph_morphism(const CanonicalRelation& f);
CanonicalRelation ungraph_morphism(const CanonicalRelation& gamma,
                                   const SymplecticSpace& x, const SymplecticSpace& y);

/* g1 * g2 = (1 (x) e_Y (x) 1) (g1 (x) g2) on graphs X x Ybar <- 1 and
 * Y x Zbar <- 1; equals the graph of the composition. */
CanonicalRelation reduced_product(const CanonicalRelation& g1, const CanonicalRelation& g2,
                                  const SymplecticSpace& x, const SymplecticSpace& y,
                                  const SymplecticSpace& z);

/* rho^C = {(pi c, c) : c in C} : X^C <- X for a reduction chart, and the
 * projector R^C = rho^t rho = {(x,y) in C x C : x - y in C~} : X <- X. */
CanonicalRelation reduction_relation(const ReductionData& rd);
CanonicalRelation projector_relation(const ReductionData& rd);

struct MorphismClass {
  bool single_valued;      // (x,0) in f only for x = 0
  bool everywhere_defined; // body projects onto the source
  bool surjective;         // body projects onto the target
  bool injective;          // (0,y) in f only for y = 0
  bool is_reduction;       // single-valued and surjective
  bool is_coreduction;     // injective and everywhere defined
};
MorphismClass classify_morphism(const CanonicalRelation& f);

/* Every f : X <- Y splits through Q = X x Y x Ybar as f = g h with
 * g = {(x, (x, y, y))} a reduction and
 * h = {((a, v, b), v) : (a,b) in f, v in Y} a coreduction;
 * the pair (g, h) composes with zero excess. */
std::pair<CanonicalRelation, CanonicalRelation> factor(const CanonicalRelation& f);

/* dim(body(f) cap diagonal) for an endomorphism f of X. */
size_t fixed_space_dim(const CanonicalRelation& f);

CanonicalRelation random_relation(Rng& rng, const SymplecticSpace& x,
                                  const SymplecticSpace& y, size_t moves);

}  // namespace canrel
