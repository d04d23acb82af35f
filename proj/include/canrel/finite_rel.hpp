#pragma once
#include "canrel/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace canrel {

/* Relation between finite sets {0..target_size-1} <- {0..source_size-1},
 * stored as a dense boolean matrix.  The combinatorial counterpart of the
 * linear calculus; small enough that every oracle is exhaustive. */
struct FiniteRelation {
  size_t target_size = 0;
  size_t source_size = 0;
  std::vector<uint8_t> bits;  // row-major target x source

  bool at(size_t x, size_t y) const { return bits[x * source_size + y] != 0; }
  void set(size_t x, size_t y, bool v) { bits[x * source_size + y] = v ? 1 : 0; }

  friend bool operator==(const FiniteRelation& a, const FiniteRelation& b) {
    return a.target_size == b.target_size && a.source_size == b.source_size &&
           a.bits == b.bits;
  }
  friend bool operator!=(const FiniteRelation& a, const FiniteRelation& b) {
    return !(a == b);
  }
};

FiniteRelation finite_relation(size_t target_size, size_t source_size,
                               const std::vector<std::pair<size_t, size_t>>& pairs);
FiniteRelation fidentity(size_t n);

FiniteRelation fcompose(const FiniteRelation& f, const FiniteRelation& g);

/* True when every pair of the composition has exactly one witness. */
bool fmonic(const FiniteRelation& f, const FiniteRelation& g);

struct FiniteClass {
  bool single_valued;
  bool everywhere_defined;
  bool surjective;
  bool injective;
  bool is_reduction;
  bool is_coreduction;
};
FiniteClass fclassify(const FiniteRelation& f);

/* All tuples (x_0,..,x_n) with (x_{i-1},x_i) in the i-th relation; endpoints
 * included.  The path must be nonempty and composable. */
std::vector<std::vector<size_t>> ftrajectories(const std::vector<FiniteRelation>& path);

/* f = g h through Q = X x Y x Y with g = {(x,(x,y,y))} and
 * h = {((x',y',y),y) : (x',y') in f}.  The four postconditions are reported
 * rather than assumed: when f is empty (and Y is not) h has empty domain and
 * fails to be a coreduction; the report flags that instead of patching it. */
struct FFactorReport {
  FiniteRelation g;  // X <- Q
  FiniteRelation h;  // Q <- Y
  bool g_is_reduction;
  bool h_is_coreduction;
  bool composes_to_f;
  bool pair_monic;
  bool contract_holds;  // conjunction of the four
};
FFactorReport ffactor(const FiniteRelation& f);

FiniteRelation frandom(Rng& rng, size_t target_size, size_t source_size);

}  // namespace canrel
