#include "canrel/rng.hpp"

#include "canrel/errors.hpp"

namespace canrel {

uint64_t trial_seed(uint64_t master, uint64_t index) {
  uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Matrix random_matrix(Rng& rng, size_t rows, size_t cols) {
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rng.small_int();
  return m;
}

Subspace random_subspace(Rng& rng, size_t ambient, size_t dim) {
  if (dim > ambient) throw PreconditionError("random_subspace: dim > ambient");
  for (;;) {
    Subspace s = Subspace::span(ambient, random_matrix(rng, dim, ambient));
    if (s.dim() == dim) return s;
  }
}

}  // namespace canrel
