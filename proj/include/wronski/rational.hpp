#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wronski {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "3", "-7/4", "-3.14", "1e-3" or "2.5E2" into an exact rational.
/// Decimal input is read as the exact decimal fraction (-3.14 = -157/50).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Nearest double; saturates instead of overflowing for huge values.
double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// Exact dyadic rational closest (round-to-nearest) to a finite double.
Rational from_double(double value);

}  // namespace wronski
