#pragma once

#include "cayley_ht/rational.hpp"

#include <cstddef>
#include <deque>
#include <string_view>

namespace cayley_ht {

enum class SequenceKind { Jacobsthal, Fibonacci };

/// Memoized integer sequence, materialized on demand and append-only.
///
/// Jacobsthal: J_0 = 0, J_1 = 1, J_{n+2} = J_{n+1} + 2 J_n.
/// Fibonacci:  F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n.
///
/// Storage is a deque so references returned by operator() stay valid while
/// the table grows. After warming up to the largest index needed, the const
/// accessor `at` can be shared across threads.
class SequenceTable {
 public:
  explicit SequenceTable(SequenceKind kind = SequenceKind::Jacobsthal);

  static SequenceTable jacobsthal() { return SequenceTable(SequenceKind::Jacobsthal); }
  static SequenceTable fibonacci() { return SequenceTable(SequenceKind::Fibonacci); }

  SequenceKind kind() const { return kind_; }
  std::size_t size() const { return values_.size(); }

  /// Value at index n, extending the table if needed. Throws std::domain_error for n < 0.
  const Integer& operator()(long long n);

  /// Value at an already materialized index. Throws std::out_of_range otherwise.
  const Integer& at(long long n) const;

  /// Materialize every index up to and including n.
  void warm_up(long long n);

 private:
  SequenceKind kind_;
  std::deque<Integer> values_;
};

Integer jacobsthal(long long n);
Integer fibonacci(long long n);

/// The Jacobsthal identities evaluated by check_identity.
///
///   ClosedForm      3 J_n = 2^n - (-1)^n                              n >= 0
///   SumAdjacent     J_{n+1} + J_n = 2^n                               n >= 0
///   DoubleStep      J_{n+1} - 2 J_n = (-1)^n                          n >= 0
///   AdditionLaw     J_m (J_{n+1} + 2 J_{n-1}) + J_n (J_{m+1} + 2 J_{m-1}) = 2 J_{m+n}
///                                                                     m, n >= 1
///   Convolution     J_{n-1} = J_j J_{n-j} + 2 J_{j-1} J_{n-j-1}       1 <= j <= n-1
///   WeightedPowSum  sum_{j=1}^n 2^j J_{n-j} = (2/3)(n J_{n-1} + (n-1) J_n)
///                                                                     n >= 1
///   AlternatingSum  sum_{j=1}^n (-1)^{n+j} J_j = (1/3)(n J_{n-1} - (n-2) J_n)
///                                                                     n >= 1
///
/// AlternatingSum is evaluated exactly as stated above; it does not hold in
/// general (n = 1 gives 1 vs 1/3). alternating_sum_closed_form is the form
/// that does hold.
enum class Identity { ClosedForm, SumAdjacent, DoubleStep, AdditionLaw, Convolution, WeightedPowSum, AlternatingSum };

inline constexpr Identity kAllIdentities[] = {Identity::ClosedForm,  Identity::SumAdjacent,    Identity::DoubleStep,
                                              Identity::AdditionLaw, Identity::Convolution,    Identity::WeightedPowSum,
                                              Identity::AlternatingSum};

std::string_view to_string(Identity id);

/// Indices for an identity. `m` is used only by AdditionLaw, `j` only by Convolution.
struct IdentityArgs {
  long long n = 0;
  long long m = 0;
  long long j = 0;
};

struct IdentityVerdict {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

/// Evaluates both sides of `id` exactly. Throws std::domain_error when the
/// arguments are outside the identity's index range.
IdentityVerdict check_identity(SequenceTable& jacobsthal_table, Identity id, const IdentityArgs& args);

/// sum_{j=1}^n (-1)^{n+j} J_j by direct summation. n >= 1.
Rational alternating_sum_oracle(SequenceTable& jacobsthal_table, long long n);

/// (1/3)(2 J_n - n (-1)^n), the closed form of the same alternating sum. n >= 1.
Rational alternating_sum_closed_form(SequenceTable& jacobsthal_table, long long n);

}  // namespace cayley_ht
