#include "cayley_ht/sequences.hpp"

#include <stdexcept>
#include <string>

namespace cayley_ht {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

Integer power_of_two(long long n) {
  Integer p = 1;
  p <<= static_cast<unsigned>(n);
  return p;
}

int sign_power(long long n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

SequenceTable::SequenceTable(SequenceKind kind) : kind_(kind) {
  values_.emplace_back(0);
  values_.emplace_back(1);
}

const Integer& SequenceTable::operator()(long long n) {
  require(n >= 0, "sequence index must be nonnegative");
  warm_up(n);
  return values_[static_cast<std::size_t>(n)];
}

const Integer& SequenceTable::at(long long n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= values_.size())
    throw std::out_of_range("sequence index " + std::to_string(n) + " not materialized");
  return values_[static_cast<std::size_t>(n)];
}

void SequenceTable::warm_up(long long n) {
  require(n >= 0, "sequence index must be nonnegative");
  const int weight = kind_ == SequenceKind::Jacobsthal ? 2 : 1;
  while (values_.size() <= static_cast<std::size_t>(n)) {
    const std::size_t k = values_.size();
    Integer next = values_[k - 1] + weight * values_[k - 2];
    values_.push_back(std::move(next));
  }
}

Integer jacobsthal(long long n) { return SequenceTable::jacobsthal()(n); }

Integer fibonacci(long long n) { return SequenceTable::fibonacci()(n); }

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::ClosedForm: return "ClosedForm";
    case Identity::SumAdjacent: return "SumAdjacent";
    case Identity::DoubleStep: return "DoubleStep";
    case Identity::AdditionLaw: return "AdditionLaw";
    case Identity::Convolution: return "Convolution";
    case Identity::WeightedPowSum: return "WeightedPowSum";
    case Identity::AlternatingSum: return "AlternatingSum";
  }
  return "?";
}

IdentityVerdict check_identity(SequenceTable& J, Identity id, const IdentityArgs& args) {
  if (J.kind() != SequenceKind::Jacobsthal) throw std::invalid_argument("check_identity needs a Jacobsthal table");
  const long long n = args.n;
  IdentityVerdict v;
  switch (id) {
    case Identity::ClosedForm:
      require(n >= 0, "ClosedForm: n >= 0");
      v.lhs = Rational(3 * J(n));
      v.rhs = Rational(power_of_two(n) - sign_power(n));
      break;
    case Identity::SumAdjacent:
      require(n >= 0, "SumAdjacent: n >= 0");
      v.lhs = Rational(J(n + 1) + J(n));
      v.rhs = Rational(power_of_two(n));
      break;
    case Identity::DoubleStep:
      require(n >= 0, "DoubleStep: n >= 0");
      v.lhs = Rational(J(n + 1) - 2 * J(n));
      v.rhs = Rational(sign_power(n));
      break;
    case Identity::AdditionLaw: {
      const long long m = args.m;
      require(n >= 1 && m >= 1, "AdditionLaw: m, n >= 1");
      J.warm_up(m + n + 1);
      v.lhs = Rational(J(m) * (J(n + 1) + 2 * J(n - 1)) + J(n) * (J(m + 1) + 2 * J(m - 1)));
      v.rhs = Rational(2 * J(m + n));
      break;
    }
    case Identity::Convolution: {
      const long long j = args.j;
      require(n >= 2 && j >= 1 && j <= n - 1, "Convolution: 1 <= j <= n-1");
      v.lhs = Rational(J(n - 1));
      v.rhs = Rational(J(j) * J(n - j) + 2 * J(j - 1) * J(n - j - 1));
      break;
    }
    case Identity::WeightedPowSum: {
      require(n >= 1, "WeightedPowSum: n >= 1");
      Integer sum = 0;
      for (long long j = 1; j <= n; ++j) sum += power_of_two(j) * J(n - j);
      v.lhs = Rational(sum);
      v.rhs = Rational(2, 3) * Rational(n * J(n - 1) + (n - 1) * J(n));
      break;
    }
    case Identity::AlternatingSum:
      require(n >= 1, "AlternatingSum: n >= 1");
      v.lhs = alternating_sum_oracle(J, n);
      v.rhs = Rational(1, 3) * Rational(n * J(n - 1) - (n - 2) * J(n));
      break;
  }
  v.holds = v.lhs == v.rhs;
  return v;
}

Rational alternating_sum_oracle(SequenceTable& J, long long n) {
  require(n >= 1, "alternating sum: n >= 1");
  Integer sum = 0;
  for (long long j = 1; j <= n; ++j) {
    if ((n + j) % 2 == 0)
      sum += J(j);
    else
      sum -= J(j);
  }
  return Rational(sum);
}

Rational alternating_sum_closed_form(SequenceTable& J, long long n) {
  require(n >= 1, "alternating sum: n >= 1");
  return Rational(2 * J(n) - n * sign_power(n), 3);
}

}  // namespace cayley_ht
