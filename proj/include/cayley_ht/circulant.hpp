#pragma once

#include "cayley_ht/exact_linalg.hpp"
#include "cayley_ht/rational.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace cayley_ht {

/// Simple random walk on the circulant digraph Cay(Z_N, S): from v the
/// walker moves to v + s for an element s drawn uniformly from the step
/// multiset. Duplicated steps carry proportionally more weight, so
/// {+-1, +-2} on Z_3 is the multiset {1, 1, 2, 2}.
class CirculantWalk {
 public:
  /// Steps are reduced mod N, so negative steps are accepted. Throws
  /// std::invalid_argument if N < 2, the multiset is empty, or a step is 0 mod N.
  CirculantWalk(long long modulus, std::vector<long long> steps);

  long long modulus() const { return modulus_; }
  /// Residues in 1..N-1, sorted ascending.
  const std::vector<long long>& steps() const { return steps_; }
  long long degree() const { return static_cast<long long>(steps_.size()); }

  /// True iff the steps generate Z_N, i.e. gcd(S u {N}) = 1.
  bool strongly_connected() const;
  /// True iff `target` is reachable from 0.
  bool reaches(long long target) const;

  bool operator==(const CirculantWalk&) const = default;

  /// The walk with S = {+1, +2}.
  static CirculantWalk plus_one_two(long long modulus) { return CirculantWalk(modulus, {1, 2}); }
  /// The walk with S = {+-1, +-2}.
  static CirculantWalk plus_minus_one_two(long long modulus) { return CirculantWalk(modulus, {1, 2, -1, -2}); }

 private:
  long long modulus_;
  std::vector<long long> steps_;
};

class UnreachableTargetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { Oracle, RowSum, Printed, Corrected, Fibonacci, MonteCarlo };

std::string_view to_string(Method method);

/// Exact hitting times h(0, l) for l = 1..N-1; values(l - 1) holds h(0, l).
struct HittingResult {
  long long modulus = 0;
  std::vector<long long> steps;
  RationalVector values;
  Method method = Method::Oracle;

  const Rational& at(long long l) const { return values(static_cast<Index>(l - 1)); }
};

/// First-step system for h(0, l), l = 1..N-1:
///   |S| h_l - sum_{s in S} h_{(l - s) mod N} = |S|,   h_0 = 0.
/// Row and column l - 1 correspond to target l. For S = {1, 2} the matrix is
/// the transposed reduced Laplacian H_N.
struct ReducedSystem {
  RationalMatrix matrix;
  RationalVector rhs;
};

ReducedSystem build_system(const CirculantWalk& walk);

/// Solves the first-step system exactly. Throws UnreachableTargetError if the
/// system is singular, which happens exactly when some vertex cannot reach 0.
HittingResult hitting_oracle(const CirculantWalk& walk);

struct TranslationVerdict {
  bool holds = false;
  /// Targets l at which h(k - l, k) differs from h(0, l).
  std::vector<long long> mismatches;
};

/// Solves the unreduced chain absorbed at vertex k, giving h(v, k) for every
/// start v, and checks h(k - l, k) = h(0, l) for all l.
TranslationVerdict translation_check(const CirculantWalk& walk, long long k);

}  // namespace cayley_ht
