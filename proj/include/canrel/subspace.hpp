#pragma once
#include "canrel/matrix.hpp"

namespace canrel {

/* Linear subspace of Q^n held as the RREF basis of its row space (no zero
 * rows, strictly increasing pivots, unit pivots, zeros above and below).
 * The representation is canonical, so set equality == structural equality. */
class Subspace {
 public:
  static Subspace zero(size_t ambient);
  static Subspace full(size_t ambient);
  /* span of the rows; rows.cols() must equal ambient unless rows is empty */
  static Subspace span(size_t ambient, const Matrix& rows);
  static Subspace span(size_t ambient, const std::vector<Vec>& rows);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(size_t ambient, Matrix basis, std::vector<size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  size_t ambient_;
  Matrix basis_;  // dim x ambient, RREF
  std::vector<size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& a, const Subspace& b);

/* {v : <v,w> = 0 for all w in S} under the standard dot product. */
Subspace annihilator(const Subspace& s);

/* {v : m v = 0}, canonical. */
Subspace kernel(const Matrix& m);

/* image {T v : v in s} of a subspace under a linear map (T is rows(T) x ambient). */
Subspace map_subspace(const Matrix& T, const Subspace& s);

/* Rows of s.basis() that greedily extend t to a basis of s; requires t <= s.
 * The returned rows span a complement of t in s. */
Matrix complement_rows(const Subspace& s, const Subspace& t);

/* a + b viewed inside Q^(m+n) with disjoint coordinate blocks, a first. */
Subspace subspace_direct_sum(const Subspace& a, const Subspace& b);

}  // namespace canrel
