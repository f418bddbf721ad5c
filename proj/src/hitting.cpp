#include "cayley_ht/hitting.hpp"

#include <stdexcept>
#include <string>

namespace cayley_ht {

namespace {

void require_kind(const SequenceTable& table, SequenceKind kind) {
  if (table.kind() != kind)
    throw std::invalid_argument(kind == SequenceKind::Jacobsthal ? "expected a Jacobsthal table"
                                                                 : "expected a Fibonacci table");
}

void require_modulus(long long modulus, long long minimum) {
  if (modulus < minimum) throw std::domain_error("modulus must be at least " + std::to_string(minimum));
}

void require_target(long long modulus, long long l) {
  if (l < 1 || l > modulus - 1) throw std::domain_error("target l must lie in 1..N-1");
}

int sign_power(long long n) { return n % 2 == 0 ? 1 : -1; }

// Numerators over the common denominator J_N.

Integer lower_numerator(SequenceTable& J, long long n, long long i, long long j) {
  return J(i - j + 1) * (J(n - i + j - 2) + J(n - i + j - 1)) - sign_power(i + j) * J(j - 1) * J(n - i - 1);
}

Integer entry_numerator(SequenceTable& J, long long n, long long i, long long j) {
  if (i == n - 1 && j == 1) return J(n - 1);
  if (j == i + 1) return J(i) * J(n - i - 1);
  if (j < i + 1) return lower_numerator(J, n, i, j);
  return J(i) * J(n - j) * (J(j - i - 1) + J(j - i));
}

void check_entry(const SequenceTable& J, long long n, long long i, long long j) {
  require_kind(J, SequenceKind::Jacobsthal);
  require_modulus(n, 3);
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1) throw std::domain_error("inverse entry index out of 1..N-1");
}

}  // namespace

Rational inverse_entry(SequenceTable& J, const InverseEntrySpec& spec) {
  check_entry(J, spec.modulus, spec.row, spec.col);
  return Rational(entry_numerator(J, spec.modulus, spec.row, spec.col), J(spec.modulus));
}

Rational inverse_entry_lower(SequenceTable& J, long long modulus, long long row, long long col) {
  check_entry(J, modulus, row, col);
  if (col > row) throw std::domain_error("lower formula needs col <= row");
  return Rational(lower_numerator(J, modulus, row, col), J(modulus));
}

RationalMatrix inverse_matrix(SequenceTable& J, long long modulus) {
  require_kind(J, SequenceKind::Jacobsthal);
  require_modulus(modulus, 3);
  J.warm_up(modulus);
  const Index dim = static_cast<Index>(modulus - 1);
  const Integer& denom = J(modulus);
  RationalMatrix s(dim, dim);
  for (long long i = 1; i < modulus; ++i)
    for (long long j = 1; j < modulus; ++j) s(i - 1, j - 1) = Rational(entry_numerator(J, modulus, i, j), denom);
  return s;
}

HittingResult hitting_rowsum(SequenceTable& J, long long modulus) {
  require_kind(J, SequenceKind::Jacobsthal);
  require_modulus(modulus, 3);
  J.warm_up(modulus);
  HittingResult result{modulus, {1, 2}, RationalVector(modulus - 1), Method::RowSum};
  for (long long l = 1; l < modulus; ++l) {
    Integer sum = 0;
    for (long long j = 1; j < modulus; ++j) sum += entry_numerator(J, modulus, l, j);
    result.values(l - 1) = Rational(2 * sum, J(modulus));
  }
  return result;
}

Rational hitting_printed(SequenceTable& J, long long modulus, long long l) {
  require_kind(J, SequenceKind::Jacobsthal);
  require_modulus(modulus, 3);
  require_target(modulus, l);
  const long long n = modulus;
  Integer num = 2 * J(l - 1) * (3 * l * J(n - l - 1) + 2 * l * J(n - l)) +
                J(l) * ((n + l + 3) * J(n - l - 1) + (n + 3 * l + 1) * J(n - l));
  return Rational(num, 3 * J(n));
}

Rational hitting_corrected(SequenceTable& J, long long modulus, long long l) {
  require_kind(J, SequenceKind::Jacobsthal);
  require_modulus(modulus, 3);
  require_target(modulus, l);
  const long long n = modulus;
  Integer num = 2 * (2 * l * J(l - 1) * J(n - l) + J(l) * ((n + 2 * l) * J(n - l - 1) + (n + l) * J(n - l)));
  return Rational(num, 3 * J(n));
}

HittingResult hitting_corrected_all(SequenceTable& J, long long modulus) {
  require_modulus(modulus, 3);
  J.warm_up(modulus);
  HittingResult result{modulus, {1, 2}, RationalVector(modulus - 1), Method::Corrected};
  for (long long l = 1; l < modulus; ++l) result.values(l - 1) = hitting_corrected(J, modulus, l);
  return result;
}

Rational hitting_last(SequenceTable& J, long long modulus) {
  require_kind(J, SequenceKind::Jacobsthal);
  require_modulus(modulus, 3);
  const long long n = modulus;
  Integer num = 2 * (n * J(n - 1) + (n - 1) * J(n));
  return Rational(num, 3 * J(n));
}

Rational hitting_fibonacci(SequenceTable& F, long long modulus, long long l) {
  require_kind(F, SequenceKind::Fibonacci);
  require_modulus(modulus, 5);
  require_target(modulus, l);
  const long long n = modulus;
  const Rational ratio(Integer(2 * n * F(l) * F(n - l)), F(n));
  return Rational(2, 5) * (Rational(l * (n - l)) + ratio);
}

HittingResult hitting_fibonacci_all(SequenceTable& F, long long modulus) {
  require_modulus(modulus, 5);
  F.warm_up(modulus);
  const CirculantWalk walk = CirculantWalk::plus_minus_one_two(modulus);
  HittingResult result{modulus, walk.steps(), RationalVector(modulus - 1), Method::Fibonacci};
  for (long long l = 1; l < modulus; ++l) result.values(l - 1) = hitting_fibonacci(F, modulus, l);
  return result;
}

}  // namespace cayley_ht
