#pragma once
#include "canrel/finite_rel.hpp"
#include "canrel/indexed.hpp"
#include "canrel/wwpath.hpp"

#include <json.hpp>

#include <string>

namespace canrel {

using Json = nlohmann::json;

/* Wire formats (rationals are strings, "p" or "p/q"):
 *   subspace   {"ambient": n, "rows": [["1","0",...], ...]}
 *   space      {"dim": 2n, "form": "standard" | [[...], ...]}
 *   relation   {"target": space, "source": space, "body": subspace}
 *   indexed    {"relation": relation, "k": int}
 *   point      {"space": space, "lagrangian": subspace, "k": int}
 *   path       {"steps": [relation, ...]}
 *   finite     {"target_size": n, "source_size": m, "pairs": [[x,y], ...]}
 * Loading validates: malformed text or wrong shapes raise ParseError,
 * ill-matched pieces TypeMismatchError, broken mathematical invariants
 * PreconditionError. */

Json parse_json_text(const std::string& text);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json space_to_json(const SymplecticSpace& x);
SymplecticSpace space_from_json(const Json& j);

Json relation_to_json(const CanonicalRelation& f);
CanonicalRelation relation_from_json(const Json& j);

Json indexed_to_json(const IndexedCanonicalRelation& a);
IndexedCanonicalRelation indexed_from_json(const Json& j,
                                           IndexMode mode = IndexMode::standard);

Json indexed_lagrangian_to_json(const IndexedLagrangian& a);
IndexedLagrangian indexed_lagrangian_from_json(const Json& j);

Json path_to_json(const Path& p);
Path path_from_json(const Json& j);

Json finite_to_json(const FiniteRelation& f);
FiniteRelation finite_from_json(const Json& j);

}  // namespace canrel
