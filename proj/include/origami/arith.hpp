#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace origami {

using Integer = mpz_class;
using Rational = mpq_class;

/// GMP's two-argument constructor does not reduce; these do.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

/// Largest integer <= r.
Integer floor_of(const Rational& r);

/// Representative of r modulo 1 in [0, 1).
Rational mod_one(const Rational& r);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q", "p" or a leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace origami
