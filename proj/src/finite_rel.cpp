#include "canrel/finite_rel.hpp"

#include "canrel/errors.hpp"

#include <stdexcept>

namespace canrel {

FiniteRelation finite_relation(size_t target_size, size_t source_size,
                               const std::vector<std::pair<size_t, size_t>>& pairs) {
  FiniteRelation r;
  r.target_size = target_size;
  r.source_size = source_size;
  r.bits.assign(target_size * source_size, 0);
  for (const auto& [x, y] : pairs) {
    if (x >= target_size || y >= source_size)
      throw PreconditionError("finite relation pair out of range");
    r.set(x, y, true);
  }
  return r;
}

FiniteRelation fidentity(size_t n) {
  FiniteRelation r;
  r.target_size = n;
  r.source_size = n;
  r.bits.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) r.set(i, i, true);
  return r;
}

FiniteRelation fcompose(const FiniteRelation& f, const FiniteRelation& g) {
  if (f.source_size != g.target_size)
    throw TypeMismatchError("finite relations do not chain");
  FiniteRelation r;
  r.target_size = f.target_size;
  r.source_size = g.source_size;
  r.bits.assign(r.target_size * r.source_size, 0);
  for (size_t x = 0; x < f.target_size; ++x)
    for (size_t y = 0; y < f.source_size; ++y)
      if (f.at(x, y))
        for (size_t z = 0; z < g.source_size; ++z)
          if (g.at(y, z)) r.set(x, z, true);
  return r;
}

bool fmonic(const FiniteRelation& f, const FiniteRelation& g) {
  if (f.source_size != g.target_size)
    throw TypeMismatchError("finite relations do not chain");
  for (size_t x = 0; x < f.target_size; ++x)
    for (size_t z = 0; z < g.source_size; ++z) {
      size_t witnesses = 0;
      for (size_t y = 0; y < f.source_size; ++y)
        if (f.at(x, y) && g.at(y, z) && ++witnesses > 1) return false;
    }
  return true;
}

FiniteClass fclassify(const FiniteRelation& f) {
  /* Read f as a multivalued map from source to target. */
  FiniteClass c{true, true, true, true, false, false};
  for (size_t y = 0; y < f.source_size; ++y) {
    size_t images = 0;
    for (size_t x = 0; x < f.target_size; ++x)
      if (f.at(x, y)) ++images;
    if (images > 1) c.single_valued = false;
    if (images == 0) c.everywhere_defined = false;
  }
  for (size_t x = 0; x < f.target_size; ++x) {
    size_t preimages = 0;
    for (size_t y = 0; y < f.source_size; ++y)
      if (f.at(x, y)) ++preimages;
    if (preimages == 0) c.surjective = false;
    if (preimages > 1) c.injective = false;
  }
  c.is_reduction = c.single_valued && c.surjective;
  c.is_coreduction = c.everywhere_defined && c.injective;
  return c;
}

std::vector<std::vector<size_t>> ftrajectories(const std::vector<FiniteRelation>& path) {
  if (path.empty()) throw PreconditionError("empty finite path");
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (path[i].source_size != path[i + 1].target_size)
      throw TypeMismatchError("finite path does not chain");
  /* Extend partial tuples right to left so tuples read target-first,
   * matching the composite's orientation X <- ... <- Z. */
  std::vector<std::vector<size_t>> partial;
  const FiniteRelation& last = path.back();
  for (size_t y = 0; y < last.target_size; ++y)
    for (size_t z = 0; z < last.source_size; ++z)
      if (last.at(y, z)) partial.push_back({y, z});
  for (size_t i = path.size() - 1; i-- > 0;) {
    std::vector<std::vector<size_t>> next;
    for (const auto& tup : partial)
      for (size_t x = 0; x < path[i].target_size; ++x)
        if (path[i].at(x, tup.front())) {
          std::vector<size_t> t;
          t.reserve(tup.size() + 1);
          t.push_back(x);
          t.insert(t.end(), tup.begin(), tup.end());
          next.push_back(std::move(t));
        }
    partial = std::move(next);
  }
  return partial;
}

FFactorReport ffactor(const FiniteRelation& f) {
  const size_t nx = f.target_size, ny = f.source_size;
  const size_t nq = nx * ny * ny;
  auto enc = [&](size_t x, size_t y1, size_t y2) { return (x * ny + y1) * ny + y2; };

  FiniteRelation g;  // X <- Q
  g.target_size = nx;
  g.source_size = nq;
  g.bits.assign(nx * nq, 0);
  for (size_t x = 0; x < nx; ++x)
    for (size_t y = 0; y < ny; ++y) g.set(x, enc(x, y, y), true);

  FiniteRelation h;  // Q <- Y
  h.target_size = nq;
  h.source_size = ny;
  h.bits.assign(nq * ny, 0);
  for (size_t x = 0; x < nx; ++x)
    for (size_t y1 = 0; y1 < ny; ++y1)
      if (f.at(x, y1))
        for (size_t y = 0; y < ny; ++y) h.set(enc(x, y1, y), y, true);

  FFactorReport rep{g, h, false, false, false, false, false};
  FiniteClass gc = fclassify(g);
  FiniteClass hc = fclassify(h);
  rep.g_is_reduction = gc.is_reduction;
  rep.h_is_coreduction = hc.is_coreduction;
  rep.composes_to_f = fcompose(g, h) == f;
  rep.pair_monic = fmonic(g, h);
  rep.contract_holds =
      rep.g_is_reduction && rep.h_is_coreduction && rep.composes_to_f && rep.pair_monic;
  return rep;
}

FiniteRelation frandom(Rng& rng, size_t target_size, size_t source_size) {
  FiniteRelation r;
  r.target_size = target_size;
  r.source_size = source_size;
  r.bits.assign(target_size * source_size, 0);
  for (auto& b : r.bits) b = rng.coin() ? 1 : 0;
  return r;
}

}  // namespace canrel
