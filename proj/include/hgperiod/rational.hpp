#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace hgp {

using Rational = mpq_class;
using cplx = std::complex<double>;

// Parses "p/q" or "p" exactly; decimals are rejected since parameters are
// compared modulo Z.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_integer(const Rational& q);

// Representative of q mod Z in [0, 1).
Rational frac(const Rational& q);

inline bool congruent_mod_1(const Rational& a, const Rational& b) {
  return is_integer(Rational(a - b));
}

// Throws BlowUpError when numerator or denominator exceeds the digit guard.
void check_size(const Rational& q);

inline constexpr std::size_t kMaxCoefficientDigits = 1000000;

}  // namespace hgp
