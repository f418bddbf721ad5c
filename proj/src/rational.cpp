#include "cayley_ht/rational.hpp"

#include <stdexcept>

namespace cayley_ht {

namespace {

Integer pow10(int k) {
  Integer p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

}  // namespace

std::string to_fraction_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

std::string to_decimal(const Rational& q, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("to_decimal: need at least one significant digit");
  if (q == 0) return "0";

  const bool negative = q < 0;
  const Integer num = abs(numerator_of(q));
  const Integer den = denominator_of(q);

  // Decimal exponent e with 10^e <= |q| < 10^(e+1).
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto at_least_pow10 = [&](int exp) {
    return exp >= 0 ? num >= den * pow10(exp) : num * pow10(-exp) >= den;
  };
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  // |q| * 10^shift has exactly significant_digits digits before the point.
  int shift = significant_digits - 1 - e;
  Integer scaled_num = shift >= 0 ? Integer(num * pow10(shift)) : num;
  Integer scaled_den = shift >= 0 ? den : Integer(den * pow10(-shift));
  Integer digits = scaled_num / scaled_den;
  Integer twice_rem = 2 * (scaled_num - digits * scaled_den);
  if (twice_rem > scaled_den || (twice_rem == scaled_den && bit_test(digits, 0))) ++digits;
  if (digits == pow10(significant_digits)) {
    digits /= 10;
    --shift;
  }

  std::string s = digits.str();
  if (shift > 0) {
    if (static_cast<int>(s.size()) <= shift) s.insert(0, static_cast<std::size_t>(shift + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(shift), ".");
  } else {
    s.append(static_cast<std::size_t>(-shift), '0');
  }
  return negative ? "-" + s : s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace cayley_ht
