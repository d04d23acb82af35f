#include "canrel/wwpath.hpp"

#include "canrel/errors.hpp"

namespace canrel {

Path make_path(std::vector<CanonicalRelation> steps) {
  if (steps.empty())
    throw PreconditionError("make_path: empty step list has no endpoint spaces");
  for (size_t i = 0; i + 1 < steps.size(); ++i)
    if (!(steps[i].source == steps[i + 1].target))
      throw TypeMismatchError("make_path: steps are not composable");
  return Path{steps.front().target, steps.back().source, std::move(steps)};
}

Path empty_path(const SymplecticSpace& x) { return Path{x, x, {}}; }

Path path_minimal(const Path& p) {
  std::vector<CanonicalRelation> kept;
  for (const CanonicalRelation& f : p.steps)
    if (!(f.source == f.target) || f != identity_relation(f.target)) kept.push_back(f);
  return Path{p.target, p.source, std::move(kept)};
}

Subspace trajectory_space(const Path& p) {
  size_t n = p.steps.size();
  std::vector<size_t> offset;  // column offset of each intermediate space
  size_t total = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    offset.push_back(total);
    total += p.steps[i].source.dim;
  }
  std::vector<Vec> rows;
  for (size_t i = 0; i < n; ++i) {
    const CanonicalRelation& f = p.steps[i];
    size_t dt = f.target.dim, ds = f.source.dim;
    Matrix ann = annihilator(f.body).basis();
    for (size_t r = 0; r < ann.rows(); ++r) {
      Vec row(total);
      if (i > 0)
        for (size_t j = 0; j < dt; ++j) row[offset[i - 1] + j] = ann.at(r, j);
      if (i + 1 < n)
        for (size_t j = 0; j < ds; ++j) row[offset[i] + j] = ann.at(r, dt + j);
      rows.push_back(std::move(row));
    }
  }
  return kernel(Matrix::from_rows(rows, total));
}

WWNormalForm ww_normalize(const Path& p) {
  CanonicalRelation shadow = p.steps.empty() ? identity_relation(p.target) : p.steps[0];
  for (size_t i = 1; i < p.steps.size(); ++i) shadow = compose(shadow, p.steps[i]);
  return WWNormalForm{shadow, trajectory_space(p).dim()};
}

Path collapse(const Path& p, size_t i) {
  if (i + 1 >= p.steps.size())
    throw PreconditionError("collapse: index does not name an adjacent pair");
  if (pair_excess(p.steps[i], p.steps[i + 1]) != 0)
    throw PreconditionError("collapse: pair is not congenial");
  std::vector<CanonicalRelation> steps;
  for (size_t j = 0; j < p.steps.size(); ++j) {
    if (j == i + 1) continue;
    steps.push_back(j == i ? compose(p.steps[i], p.steps[i + 1]) : p.steps[j]);
  }
  return Path{p.target, p.source, std::move(steps)};
}

Path insert_identity(const Path& p, size_t i) {
  if (i > p.steps.size()) throw PreconditionError("insert_identity: index out of range");
  SymplecticSpace at = i < p.steps.size() ? p.steps[i].target : p.source;
  std::vector<CanonicalRelation> steps;
  for (size_t j = 0; j <= p.steps.size(); ++j) {
    if (j == i) steps.push_back(identity_relation(at));
    if (j < p.steps.size()) steps.push_back(p.steps[j]);
  }
  return Path{p.target, p.source, std::move(steps)};
}

Path path_concat(const Path& p, const Path& q) {
  if (!(p.source == q.target)) throw TypeMismatchError("path_concat: endpoint mismatch");
  std::vector<CanonicalRelation> steps = p.steps;
  steps.insert(steps.end(), q.steps.begin(), q.steps.end());
  return Path{p.target, q.source, std::move(steps)};
}

std::pair<CanonicalRelation, CanonicalRelation> path_factorize(const Path& p) {
  size_t n = p.steps.size();
  if (n == 0) return factor(identity_relation(p.target));
  if (n == 1) return factor(p.steps[0]);

  std::vector<CanonicalRelation> gs, hs;
  for (const CanonicalRelation& f : p.steps) {
    auto [g, h] = factor(f);
    gs.push_back(std::move(g));
    hs.push_back(std::move(h));
  }
  /* inner diagonals h_i g_{i+1}: each pair has a coreduction on the left,
   * hence zero excess, so the collapse keeps the normal form */
  std::vector<CanonicalRelation> inner;
  for (size_t i = 0; i + 1 < n; ++i) inner.push_back(compose(hs[i], gs[i + 1]));
  auto [a, b] = path_factorize(make_path(std::move(inner)));
  return {compose(gs.front(), a), compose(b, hs.back())};
}

Path path_product(const Path& p, const Path& q) {
  size_t n = std::max(p.steps.size(), q.steps.size());
  std::vector<CanonicalRelation> steps;
  for (size_t i = 0; i < n; ++i) {
    CanonicalRelation a =
        i < p.steps.size() ? p.steps[i] : identity_relation(p.source);
    CanonicalRelation b =
        i < q.steps.size() ? q.steps[i] : identity_relation(q.source);
    steps.push_back(tensor(a, b));
  }
  return Path{product_space(p.target, q.target), product_space(p.source, q.source),
              std::move(steps)};
}

Path random_path(Rng& rng, size_t length, size_t max_half_dim, size_t moves) {
  std::vector<SymplecticSpace> spaces;
  for (size_t i = 0; i <= length; ++i)
    spaces.push_back(SymplecticSpace::standard(rng.int_in(0, max_half_dim)));
  if (length == 0) return empty_path(spaces[0]);
  std::vector<CanonicalRelation> steps;
  for (size_t i = 0; i < length; ++i)
    steps.push_back(random_relation(rng, spaces[i], spaces[i + 1], moves));
  return make_path(std::move(steps));
}

}  // namespace canrel
