#include "canrel/rational.hpp"

#include <cctype>

#include "canrel/errors.hpp"

namespace canrel {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  // strict format: optional '-', digits, optionally "/" digits
  size_t i = 0;
  if (s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw ParseError("bad rational literal: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("bad rational literal: " + s);
    ++i;
    size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != s.size())
      throw ParseError("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

long rat_to_long(const Rat& r) {
  if (r.get_den() != 1) throw PreconditionError("not an integer: " + r.get_str());
  if (!r.get_num().fits_slong_p())
    throw PreconditionError("integer out of range: " + r.get_str());
  return r.get_num().get_si();
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw TypeMismatchError("dot: length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace canrel
