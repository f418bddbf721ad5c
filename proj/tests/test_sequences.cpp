#include "cayley_ht/sequences.hpp"

#include <catch_amalgamated.hpp>

#include <array>

using namespace cayley_ht;

namespace {

// (2^n - (-1)^n) / 3, independent of the recurrence.
Integer jacobsthal_closed(long long n) {
  Integer p = 1;
  p <<= static_cast<unsigned>(n);
  p -= n % 2 == 0 ? 1 : -1;
  return p / 3;
}

// Fast doubling: F_{2k} = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2.
std::pair<Integer, Integer> fib_pair(long long n) {
  if (n == 0) return {0, 1};
  auto [a, b] = fib_pair(n / 2);
  Integer c = a * (2 * b - a);
  Integer d = a * a + b * b;
  if (n % 2 == 0) return {c, d};
  return {d, c + d};
}

}  // namespace

TEST_CASE("jacobsthal spot values") {
  CHECK(jacobsthal(0) == 0);
  CHECK(jacobsthal(5) == 11);
  CHECK(jacobsthal(10) == 341);
  const std::array<int, 11> first{0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341};
  SequenceTable J = SequenceTable::jacobsthal();
  for (std::size_t n = 0; n < first.size(); ++n) CHECK(J(static_cast<long long>(n)) == first[n]);
}

TEST_CASE("fibonacci spot values") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(5) == 5);
  CHECK(fibonacci(10) == 55);
}

TEST_CASE("negative indices are a domain error") {
  SequenceTable J = SequenceTable::jacobsthal();
  CHECK_THROWS_AS(J(-1), std::domain_error);
  CHECK_THROWS_AS(fibonacci(-3), std::domain_error);
}

TEST_CASE("recurrence agrees with independent closed forms") {
  SequenceTable J = SequenceTable::jacobsthal();
  SequenceTable F = SequenceTable::fibonacci();
  for (long long n = 0; n <= 512; ++n) {
    INFO("n = " << n);
    REQUIRE(J(n) == jacobsthal_closed(n));
    REQUIRE(F(n) == fib_pair(n).first);
  }
}

TEST_CASE("table is append-only and references survive growth") {
  SequenceTable J = SequenceTable::jacobsthal();
  const Integer& j20 = J(20);
  const Integer copy = j20;
  J.warm_up(5000);
  CHECK(&J(20) == &j20);
  CHECK(j20 == copy);
  CHECK(J.size() == 5001);
  CHECK(J.at(5000) == jacobsthal_closed(5000));
  CHECK_THROWS_AS(J.at(5001), std::out_of_range);
}

TEST_CASE("jacobsthal is strictly increasing from n = 2") {
  SequenceTable J = SequenceTable::jacobsthal();
  for (long long n = 2; n <= 512; ++n) REQUIRE(J(n + 1) > J(n));
}

TEST_CASE("check_identity examples") {
  SequenceTable J = SequenceTable::jacobsthal();

  const auto sum_adjacent = check_identity(J, Identity::SumAdjacent, {6});
  CHECK(sum_adjacent.holds);
  CHECK(sum_adjacent.lhs == 64);

  const auto conv = check_identity(J, Identity::Convolution, {.n = 5, .j = 2});
  CHECK(conv.holds);
  CHECK(conv.lhs == 5);

  const auto alt = check_identity(J, Identity::AlternatingSum, {1});
  CHECK_FALSE(alt.holds);
  CHECK(alt.lhs == 1);
  CHECK(alt.rhs == Rational(1, 3));
}

TEST_CASE("check_identity rejects out-of-range arguments") {
  SequenceTable J = SequenceTable::jacobsthal();
  CHECK_THROWS_AS(check_identity(J, Identity::ClosedForm, {-1}), std::domain_error);
  CHECK_THROWS_AS(check_identity(J, Identity::AdditionLaw, {.n = 1, .m = 0}), std::domain_error);
  CHECK_THROWS_AS(check_identity(J, Identity::Convolution, {.n = 5, .j = 5}), std::domain_error);
  CHECK_THROWS_AS(check_identity(J, Identity::Convolution, {.n = 5, .j = 0}), std::domain_error);
  CHECK_THROWS_AS(check_identity(J, Identity::WeightedPowSum, {0}), std::domain_error);
  CHECK_THROWS_AS(check_identity(J, Identity::AlternatingSum, {0}), std::domain_error);
  SequenceTable F = SequenceTable::fibonacci();
  CHECK_THROWS_AS(check_identity(F, Identity::ClosedForm, {1}), std::invalid_argument);
}

TEST_CASE("identities hold over their ranges") {
  SequenceTable J = SequenceTable::jacobsthal();
  for (long long n = 0; n <= 512; ++n) {
    INFO("n = " << n);
    REQUIRE(check_identity(J, Identity::ClosedForm, {n}).holds);
    if (n >= 1) {
      REQUIRE(check_identity(J, Identity::SumAdjacent, {n}).holds);
      REQUIRE(check_identity(J, Identity::DoubleStep, {n}).holds);
    }
  }
  for (long long m = 1; m <= 128; ++m)
    for (long long n = 1; n <= 128; ++n) REQUIRE(check_identity(J, Identity::AdditionLaw, {.n = n, .m = m}).holds);
  for (long long n = 2; n <= 256; ++n)
    for (long long j = 1; j <= n - 1; ++j) REQUIRE(check_identity(J, Identity::Convolution, {.n = n, .j = j}).holds);
  for (long long n = 1; n <= 256; ++n) REQUIRE(check_identity(J, Identity::WeightedPowSum, {n}).holds);
}

TEST_CASE("alternating sum oracle") {
  SequenceTable J = SequenceTable::jacobsthal();
  CHECK(alternating_sum_oracle(J, 1) == 1);
  CHECK(alternating_sum_oracle(J, 2) == 0);
  CHECK(alternating_sum_oracle(J, 3) == 3);
  CHECK_THROWS_AS(alternating_sum_oracle(J, 0), std::domain_error);
  for (long long n = 1; n <= 256; ++n) REQUIRE(alternating_sum_oracle(J, n) == alternating_sum_closed_form(J, n));
}

TEST_CASE("printed alternating-sum identity fails at small n") {
  SequenceTable J = SequenceTable::jacobsthal();
  for (long long n = 1; n <= 6; ++n) CHECK_FALSE(check_identity(J, Identity::AlternatingSum, {n}).holds);
}
