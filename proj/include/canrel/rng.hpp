#pragma once
#include <cstdint>
#include <random>

#include "canrel/subspace.hpp"

namespace canrel {

/* Deterministic random source.  mt19937_64 output is fully specified by the
 * standard; we avoid std distributions (whose mapping is not) so identical
 * seeds give identical objects on every platform. */
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  Rat small_int() { return Rat(int_in(-5, 5)); }  // matrix entry range
  bool coin() { return next() & 1; }

 private:
  std::mt19937_64 eng_;
};

/* Per-trial seed: splitmix64 finalizer over (master, index) so shard order
 * never matters. */
uint64_t trial_seed(uint64_t master, uint64_t index);

Matrix random_matrix(Rng& rng, size_t rows, size_t cols);
Subspace random_subspace(Rng& rng, size_t ambient, size_t dim);

}  // namespace canrel
