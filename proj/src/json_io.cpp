#include "canrel/json_io.hpp"

#include "canrel/errors.hpp"

namespace canrel {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string("expected a nonnegative integer ") + what);
  return (size_t)j.get<long long>();
}

long long int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected an integer ") + what);
  return j.get<long long>();
}

Json rows_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix rows_from_json(const Json& j, size_t cols) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  std::vector<Vec> rows;
  for (const Json& rj : j) {
    if (!rj.is_array() || rj.size() != cols)
      throw ParseError("row has the wrong number of entries");
    Vec v;
    v.reserve(cols);
    for (const Json& ej : rj) {
      if (!ej.is_string()) throw ParseError("matrix entries must be strings");
      v.push_back(rat_parse(ej.get<std::string>()));
    }
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows, cols);
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient()}, {"rows", rows_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  size_t ambient = count_from_json(field(j, "ambient"), "ambient");
  return Subspace::span(ambient, rows_from_json(field(j, "rows"), ambient));
}

Json space_to_json(const SymplecticSpace& x) {
  if (x.is_standard()) return Json{{"dim", x.dim}, {"form", "standard"}};
  return Json{{"dim", x.dim}, {"form", rows_to_json(x.form)}};
}

SymplecticSpace space_from_json(const Json& j) {
  size_t dim = count_from_json(field(j, "dim"), "dim");
  const Json& fj = field(j, "form");
  if (fj.is_string()) {
    if (fj.get<std::string>() != "standard")
      throw ParseError("unknown form name: " + fj.get<std::string>());
    if (dim % 2 != 0) throw ParseError("standard form requires even dimension");
    return SymplecticSpace::standard(dim / 2);
  }
  Matrix form = rows_from_json(fj, dim);
  if (form.rows() != dim) throw ParseError("form must be a square matrix of size dim");
  SymplecticSpace x{dim, form};
  validate_space(x);
  return x;
}

Json relation_to_json(const CanonicalRelation& f) {
  return Json{{"target", space_to_json(f.target)},
              {"source", space_to_json(f.source)},
              {"body", subspace_to_json(f.body)}};
}

CanonicalRelation relation_from_json(const Json& j) {
  return make_relation(space_from_json(field(j, "target")),
                       space_from_json(field(j, "source")),
                       subspace_from_json(field(j, "body")));
}

Json indexed_to_json(const IndexedCanonicalRelation& a) {
  return Json{{"relation", relation_to_json(a.relation)}, {"k", a.k}};
}

IndexedCanonicalRelation indexed_from_json(const Json& j, IndexMode mode) {
  return make_indexed(relation_from_json(field(j, "relation")),
                      int_from_json(field(j, "k"), "index"), mode);
}

Json indexed_lagrangian_to_json(const IndexedLagrangian& a) {
  return Json{{"space", space_to_json(a.space)},
              {"lagrangian", subspace_to_json(a.lagrangian)},
              {"k", a.k}};
}

IndexedLagrangian indexed_lagrangian_from_json(const Json& j) {
  return make_indexed_lagrangian(space_from_json(field(j, "space")),
                                 subspace_from_json(field(j, "lagrangian")),
                                 int_from_json(field(j, "k"), "index"));
}

Json path_to_json(const Path& p) {
  Json steps = Json::array();
  for (const CanonicalRelation& f : p.steps) steps.push_back(relation_to_json(f));
  return Json{{"steps", std::move(steps)}};
}

Path path_from_json(const Json& j) {
  const Json& sj = field(j, "steps");
  if (!sj.is_array()) throw ParseError("steps must be an array");
  std::vector<CanonicalRelation> steps;
  for (const Json& fj : sj) steps.push_back(relation_from_json(fj));
  return make_path(std::move(steps));
}

Json finite_to_json(const FiniteRelation& f) {
  Json pairs = Json::array();
  for (size_t x = 0; x < f.target_size; ++x)
    for (size_t y = 0; y < f.source_size; ++y)
      if (f.at(x, y)) pairs.push_back(Json::array({x, y}));
  return Json{{"target_size", f.target_size},
              {"source_size", f.source_size},
              {"pairs", std::move(pairs)}};
}

FiniteRelation finite_from_json(const Json& j) {
  size_t nx = count_from_json(field(j, "target_size"), "target_size");
  size_t ny = count_from_json(field(j, "source_size"), "source_size");
  const Json& pj = field(j, "pairs");
  if (!pj.is_array()) throw ParseError("pairs must be an array");
  std::vector<std::pair<size_t, size_t>> pairs;
  for (const Json& e : pj) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("each pair must be a two-element array");
    pairs.push_back({count_from_json(e[0], "pair entry"), count_from_json(e[1], "pair entry")});
  }
  return finite_relation(nx, ny, pairs);
}

}  // namespace canrel
