#pragma once
#include "canrel/relation.hpp"

#include <utility>
#include <vector>

namespace canrel {

/* Composable list of canonical relations, outermost target first; the empty
 * list stands for the identity at its (explicitly stored) space. */
struct Path {
  SymplecticSpace target;
  SymplecticSpace source;
  std::vector<CanonicalRelation> steps;

  friend bool operator==(const Path& a, const Path& b) {
    return a.target == b.target && a.source == b.source && a.steps == b.steps;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
};

Path make_path(std::vector<CanonicalRelation> steps);
Path empty_path(const SymplecticSpace& x);

/* Drop identity steps; [1_X] becomes the empty path at X. */
Path path_minimal(const Path& p);

/* {(x_1,..,x_{n-1}) : (0,x_1) in f_1, (x_{i-1},x_i) in f_i, (x_{n-1},0) in f_n}
 * inside the direct sum of the intermediate spaces.  Its dimension is the
 * path's excess. */
Subspace trajectory_space(const Path& p);

struct WWNormalForm {
  CanonicalRelation shadow;  // left-to-right composition of the steps
  size_t excess;             // dim trajectory_space

  friend bool operator==(const WWNormalForm& a, const WWNormalForm& b) {
    return a.shadow == b.shadow && a.excess == b.excess;
  }
  friend bool operator!=(const WWNormalForm& a, const WWNormalForm& b) {
    return !(a == b);
  }
};
WWNormalForm ww_normalize(const Path& p);

/* Replace the congenial pair (steps[i], steps[i+1]) by its composition;
 * rejects non-congenial pairs.  Normal forms are invariant under this move
 * and under insert_identity (0 <= i <= length). */
Path collapse(const Path& p, size_t i);
Path insert_identity(const Path& p, size_t i);

/* p followed by q (p.source must equal q.target). */
Path path_concat(const Path& p, const Path& q);

/* One reduction A and one coreduction B with
 * ww_normalize([A, B]) = ww_normalize(p).  Built by factoring every step,
 * collapsing each inner (coreduction, reduction) diagonal — always a
 * congenial pair — and recursing on the shortened path; intermediate
 * dimensions roughly triple per level. */
std::pair<CanonicalRelation, CanonicalRelation> path_factorize(const Path& p);

/* Entrywise monoidal product; the shorter path is padded at its source end
 * with identities. */
Path path_product(const Path& p, const Path& q);

/* Random composable path through standard spaces of half-dimension at most
 * max_half_dim. */
Path random_path(Rng& rng, size_t length, size_t max_half_dim, size_t moves);

}  // namespace canrel
