#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pingpong {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign, no whitespace). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& value);

/// Largest integer not exceeding value.
mpz_class floor(const Rational& value);

/// Representative of value modulo 1 in [0, 1).
Rational mod1(const Rational& value);

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace pingpong
