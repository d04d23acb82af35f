#pragma once
#include "canrel/rng.hpp"
#include "canrel/subspace.hpp"

namespace canrel {

/* Even-dimensional rational vector space with an antisymmetric invertible
 * Gram matrix.  The standard space of rank n uses basis order
 * (e_1..e_n, e*_1..e*_n) with w(e_i, e*_j) = delta_ij.  Reduced spaces C/C~
 * carry whatever form the chosen chart induces, so non-standard Gram
 * matrices are first-class. */
struct SymplecticSpace {
  size_t dim = 0;
  Matrix form;  // dim x dim

  static SymplecticSpace standard(size_t n);
  static SymplecticSpace unit() { return standard(0); }
  bool is_standard() const;

  friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) {
    return a.dim == b.dim && a.form == b.form;
  }
  friend bool operator!=(const SymplecticSpace& a, const SymplecticSpace& b) {
    return !(a == b);
  }
};

/* Throws PreconditionError unless form is antisymmetric and invertible. */
void validate_space(const SymplecticSpace& x);

Rat form_eval(const SymplecticSpace& x, const Vec& u, const Vec& v);

/* Same space, form negated. */
SymplecticSpace dual_space(const SymplecticSpace& x);
/* Direct sum with block form; coordinates of x first. */
SymplecticSpace product_space(const SymplecticSpace& x, const SymplecticSpace& y);

/* W~ = {v : w(v, u) = 0 for all u in W}. */
Subspace symp_complement(const SymplecticSpace& x, const Subspace& w);

struct SubspaceClass {
  bool is_isotropic = false;    // W <= W~
  bool is_coisotropic = false;  // W~ <= W
  bool is_lagrangian = false;   // W = W~
  bool is_symplectic = false;   // W cap W~ = 0
};
SubspaceClass classify_subspace(const SymplecticSpace& x, const Subspace& w);

/* Chart for the reduction X^C = C/C~ of a coisotropic C.  The chart is a
 * complement J of C~ in C (any such J is automatically symplectic since C~
 * is the radical of w|_C); `projection` maps c in C to its J-coordinates
 * mod C~ and `section` embeds those coordinates back as J. */
struct ReductionData {
  SymplecticSpace ambient;
  Subspace coisotropic;
  Subspace perp;            // C~
  SymplecticSpace reduced;  // dim = dim C - dim C~, form induced on J
  Matrix projection;        // reduced.dim x ambient.dim, valid on C
  Matrix section;           // ambient.dim x reduced.dim, projection . section = id
};

/* Pivot-default chart: J spanned by the greedy RREF-basis complement
 * of C~ in C. */
ReductionData reduction_data(const SymplecticSpace& x, const Subspace& c);
/* Caller-chosen chart; j must be a complement of C~ in C. */
ReductionData reduction_data_with_complement(const SymplecticSpace& x,
                                             const Subspace& c, const Subspace& j);

/* L^C = (L cap C) / (L cap C~) in chart coordinates. */
Subspace reduce_lagrangian(const ReductionData& rd, const Subspace& l);

/* E^C(L) = dim(L cap C~) = codim(L + C); both formulas computed and
 * required to agree (L must be Lagrangian). */
size_t excess_of_reduction(const ReductionData& rd, const Subspace& l);

/* d(L, L') = codim of L cap L' in L; both arguments must have equal
 * dimension in the same ambient. */
size_t chow_distance(const Subspace& l1, const Subspace& l2);

/* Columns form a canonical basis: U^T form U = standard form. */
Matrix darboux_basis(const SymplecticSpace& x);

/* Lagrangian M with M cap L = 0 and j <= M, built by greedy extension of j
 * along standard basis vectors, correcting each candidate by an element of L
 * to keep M isotropic.  Requires L Lagrangian, j isotropic, j cap L = 0. */
Subspace lagrangian_complement(const SymplecticSpace& x, const Subspace& l,
                               const Subspace& j);
Subspace lagrangian_complement(const SymplecticSpace& x, const Subspace& l);

/* View a symplectic subspace W as a space in its own right: the space with
 * Gram matrix w restricted to W's basis rows, plus that basis for moving
 * subspaces in and out (see subspace_coords / map_subspace). */
std::pair<SymplecticSpace, Matrix> restricted_space(const SymplecticSpace& x,
                                                    const Subspace& w);

/* Coordinates of s (a subspace of the row space of basis_rows) with respect
 * to basis_rows. */
Subspace subspace_coords(const Matrix& basis_rows, const Subspace& s);

/* Symplectic T (T^T form T = form, standard form required) with T L and T I
 * in normal position: T L = span(e..), T I = span(e-block, f*-block) where
 * the block sizes are determined by (dim X, dim I, dim(L cap I)).  L must be
 * Lagrangian and I isotropic. */
Matrix adapted_canonical_basis(const SymplecticSpace& x, const Subspace& l,
                               const Subspace& i);

/* Random generators (deterministic in the Rng): products of symplectic
 * transvections v -> v + c w(v,u) u applied to seed objects. */
Matrix random_symplectic_matrix(Rng& rng, const SymplecticSpace& x, size_t moves);
Subspace random_lagrangian(Rng& rng, const SymplecticSpace& x, size_t moves);
Subspace random_isotropic(Rng& rng, const SymplecticSpace& x, size_t dim);
Subspace random_coisotropic(Rng& rng, const SymplecticSpace& x, size_t dim);

}  // namespace canrel
