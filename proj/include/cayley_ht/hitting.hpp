#pragma once

// Closed forms for hitting times on Cay(Z_N, {+1, +2}) and Cay(Z_N, {+-1, +-2}).
//
// Every evaluator takes a shared sequence table (Jacobsthal for {+1, +2},
// Fibonacci for {+-1, +-2}) and grows it as needed; warm it up first if the
// table is to be shared between threads. Results are exact.
//
// hitting_oracle in circulant.hpp is the reference for all of these.
// hitting_printed reproduces a published closed form that agrees with the
// oracle only at l = N - 1; hitting_corrected is the form that agrees
// everywhere.

#include "cayley_ht/circulant.hpp"
#include "cayley_ht/exact_linalg.hpp"
#include "cayley_ht/sequences.hpp"

namespace cayley_ht {

/// Entry (row, col) of H_N^{-1}, 1-based, with 1 <= row, col <= N - 1.
struct InverseEntrySpec {
  long long modulus = 0;
  long long row = 0;
  long long col = 0;
};

/// Explicit entry of H_N^{-1} in terms of Jacobsthal numbers, N >= 3:
///
///   (N-1, 1)     J_{N-1} / J_N
///   j = i + 1    J_i J_{N-i-1} / J_N
///   j < i + 1    (J_{i-j+1} (J_{N-i+j-2} + J_{N-i+j-1}) - (-1)^{i+j} J_{j-1} J_{N-i-1}) / J_N
///   j > i + 1    J_i J_{N-j} (J_{j-i-1} + J_{j-i}) / J_N
///
/// The (N-1, 1) case is matched first. Throws std::domain_error out of range.
Rational inverse_entry(SequenceTable& jacobsthal_table, const InverseEntrySpec& spec);

/// The j < i + 1 formula applied unconditionally. At (N-1, 1) it reduces to
/// J_{N-1} / J_N, so the special case above is redundant.
Rational inverse_entry_lower(SequenceTable& jacobsthal_table, long long modulus, long long row, long long col);

/// The full (N-1) x (N-1) matrix of inverse_entry values.
RationalMatrix inverse_matrix(SequenceTable& jacobsthal_table, long long modulus);

/// h(0, l) = 2 * sum_j H_N^{-1}(l, j) for every l.
HittingResult hitting_rowsum(SequenceTable& jacobsthal_table, long long modulus);

/// The published closed form, evaluated verbatim:
///   (2 J_{l-1} (3l J_{N-l-1} + 2l J_{N-l}) + J_l ((N+l+3) J_{N-l-1} + (N+3l+1) J_{N-l})) / (3 J_N)
/// Correct only at l = N - 1 (e.g. N = 5, l = 1 gives 24/11 instead of 34/11).
Rational hitting_printed(SequenceTable& jacobsthal_table, long long modulus, long long l);

/// Corrected closed form, exact for every 1 <= l <= N - 1:
///   2 (2l J_{l-1} J_{N-l} + J_l ((N+2l) J_{N-l-1} + (N+l) J_{N-l})) / (3 J_N)
Rational hitting_corrected(SequenceTable& jacobsthal_table, long long modulus, long long l);

/// hitting_corrected for l = 1..N-1.
HittingResult hitting_corrected_all(SequenceTable& jacobsthal_table, long long modulus);

/// h(0, N-1) = 2 (N J_{N-1} + (N-1) J_N) / (3 J_N).
Rational hitting_last(SequenceTable& jacobsthal_table, long long modulus);

/// Hitting time on Cay(Z_N, {+-1, +-2}), N >= 5:
///   (2/5) (l (N - l) + 2N F_l F_{N-l} / F_N)
Rational hitting_fibonacci(SequenceTable& fibonacci_table, long long modulus, long long l);

/// hitting_fibonacci for l = 1..N-1.
HittingResult hitting_fibonacci_all(SequenceTable& fibonacci_table, long long modulus);

}  // namespace cayley_ht
