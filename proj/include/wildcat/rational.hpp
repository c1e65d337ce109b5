#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wildcat {

/// Exact rational number. All point parameters and arclengths use this type.
using Rational = mpq_class;

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// Accepts "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. The two-argument mpq_class constructor does not
/// reduce, and comparisons assume reduced values.
inline Rational ratio(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

inline Rational ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

}  // namespace wildcat
