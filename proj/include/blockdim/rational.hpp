#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blockdim {

// Exact arbitrary-precision fraction, canonical form (gcd 1, positive
// denominator). All chain probabilities and complexity values stay in this
// type; floats appear only when entropies are taken.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", or "p/q" with decimal digits; anything else (floats
// included) is rejected.
Rational parse_rational(std::string_view text);

std::string to_fraction_string(const Rational& r);

// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& r, int significant = 12);
std::string to_decimal_string(double x, int significant = 12);

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational make_rational(std::uint64_t num, std::uint64_t den) {
    Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
}

}  // namespace blockdim
