#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace canrel {

/* Exact rational scalar.  mpq_class keeps values in lowest terms with a
 * positive denominator, so equality of scalars (and hence structural equality
 * of canonical bases) is plain representation equality. */
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/* Parse "p", "-p" or "p/q" (q > 0 after canonicalization). */
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

/* The value must be an integer that fits in long. */
long rat_to_long(const Rat& r);

Rat dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

}  // namespace canrel
