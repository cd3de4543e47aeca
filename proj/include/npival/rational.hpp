#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace npival {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms. mpq_class(num, den) alone is not canonicalized.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Reduced "p/q" with q > 0, or "p" when q = 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace npival
