#include "cayley_ht/circulant.hpp"

#include <algorithm>
#include <numeric>

namespace cayley_ht {

namespace {

long long mod(long long a, long long n) {
  const long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CirculantWalk::CirculantWalk(long long modulus, std::vector<long long> steps) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("circulant walk: modulus must be at least 2");
  if (steps.empty()) throw std::invalid_argument("circulant walk: step multiset is empty");
  for (long long& s : steps) {
    s = mod(s, modulus);
    if (s == 0) throw std::invalid_argument("circulant walk: step congruent to 0 would be a self-loop");
  }
  std::sort(steps.begin(), steps.end());
  steps_ = std::move(steps);
}

bool CirculantWalk::strongly_connected() const { return reaches(1); }

bool CirculantWalk::reaches(long long target) const {
  long long g = modulus_;
  for (long long s : steps_) g = std::gcd(g, s);
  return mod(target, modulus_) % g == 0;
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Oracle: return "oracle";
    case Method::RowSum: return "rowsum";
    case Method::Printed: return "printed";
    case Method::Corrected: return "corrected";
    case Method::Fibonacci: return "fibonacci";
    case Method::MonteCarlo: return "montecarlo";
  }
  return "?";
}

ReducedSystem build_system(const CirculantWalk& walk) {
  const long long n = walk.modulus();
  const Index dim = static_cast<Index>(n - 1);
  ReducedSystem sys{RationalMatrix::Zero(dim, dim), RationalVector::Constant(dim, Rational(walk.degree()))};
  for (long long l = 1; l < n; ++l) {
    sys.matrix(l - 1, l - 1) += walk.degree();
    for (long long s : walk.steps()) {
      const long long m = mod(l - s, n);
      if (m != 0) sys.matrix(l - 1, m - 1) -= 1;
    }
  }
  return sys;
}

HittingResult hitting_oracle(const CirculantWalk& walk) {
  const ReducedSystem sys = build_system(walk);
  HittingResult result{walk.modulus(), walk.steps(), {}, Method::Oracle};
  try {
    result.values = solve(sys.matrix, sys.rhs);
  } catch (const SingularMatrixError&) {
    throw UnreachableTargetError("target unreachable: steps do not generate Z_" + std::to_string(walk.modulus()));
  }
  return result;
}

TranslationVerdict translation_check(const CirculantWalk& walk, long long k) {
  const long long n = walk.modulus();
  k = mod(k, n);
  const HittingResult base = hitting_oracle(walk);

  // Unknown for start vertex v != k sits at index (v - k - 1) mod N.
  auto index_of = [&](long long v) { return static_cast<Index>(mod(v - k, n) - 1); };
  const Index dim = static_cast<Index>(n - 1);
  RationalMatrix a = RationalMatrix::Zero(dim, dim);
  RationalVector rhs = RationalVector::Constant(dim, Rational(walk.degree()));
  for (long long v = 0; v < n; ++v) {
    if (v == k) continue;
    a(index_of(v), index_of(v)) += walk.degree();
    for (long long s : walk.steps()) {
      const long long w = mod(v + s, n);
      if (w != k) a(index_of(v), index_of(w)) -= 1;
    }
  }
  RationalVector to_k;
  try {
    to_k = solve(a, rhs);
  } catch (const SingularMatrixError&) {
    throw UnreachableTargetError("target unreachable: steps do not generate Z_" + std::to_string(n));
  }

  TranslationVerdict verdict;
  for (long long l = 1; l < n; ++l)
    if (to_k(index_of(k - l)) != base.at(l)) verdict.mismatches.push_back(l);
  verdict.holds = verdict.mismatches.empty();
  return verdict;
}

}  // namespace cayley_ht
