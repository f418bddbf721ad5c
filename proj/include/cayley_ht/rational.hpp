#pragma once

// Arbitrary-precision scalars shared by every module. GMP does the arithmetic;
// mpq_rational keeps every value canonical (den > 0, gcd(num, den) = 1).

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace cayley_ht {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "num/den" with the denominator always present, e.g. "4/1".
std::string to_fraction_string(const Rational& q);

/// Decimal rendering with exactly `significant_digits` significant digits,
/// rounded half-to-even from the exact value. Zero renders as "0".
std::string to_decimal(const Rational& q, int significant_digits = 12);

/// Nearest double; used only for statistics, never for exact results.
double to_double(const Rational& q);

}  // namespace cayley_ht
