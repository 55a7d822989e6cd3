#include "premod/rational.hpp"

#include <cctype>

#include "premod/errors.hpp"

namespace premod {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ArgumentError("rational: empty string");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ArgumentError("rational: bad character in '" + text + "'");
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw ArgumentError("rational: cannot parse '" + text + "'");
  if (v.get_den() == 0) throw ArgumentError("rational: zero denominator in '" + text + "'");
  v.canonicalize();
  return v;
}

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw ArgumentError("rational: zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

Rational rational_pow(const Rational& base, unsigned long k) {
  Rational acc(1), b = base;
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace premod
