#include "cayley_ht/exact_linalg.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace cayley_ht;

namespace {

RationalMatrix from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
  RationalMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

RationalVector vec(std::initializer_list<Rational> values) {
  RationalVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

// Laplace expansion along the first row; test oracle for small sizes only.
Rational det_laplace(const RationalMatrix& a) {
  const Index n = a.rows();
  if (n == 1) return a(0, 0);
  Rational det = 0;
  for (Index c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i)
      for (Index j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = a(i, j);
    const Rational term = a(0, c) * det_laplace(minor);
    det += c % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

RationalVector cramer(const RationalMatrix& a, const RationalVector& b) {
  const Rational d = det_laplace(a);
  RationalVector x(a.rows());
  for (Index c = 0; c < a.cols(); ++c) {
    RationalMatrix ac = a;
    ac.col(c) = b;
    x(c) = det_laplace(ac) / d;
  }
  return x;
}

}  // namespace

TEST_CASE("solve examples") {
  CHECK(solve(from_ints({{2, -1}, {-1, 2}}), vec({2, 2})) == vec({2, 2}));
  CHECK(solve(RationalMatrix::Identity(3, 3), vec({1, 2, 3})) == vec({1, 2, 3}));
}

TEST_CASE("solve reports the singular pivot row") {
  try {
    solve(from_ints({{1, 1}, {2, 2}}), vec({1, 1}));
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.pivot_row() == 1);
  }
}

TEST_CASE("solve needs a pivot swap when the leading entry is zero") {
  const RationalMatrix a = from_ints({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}});
  const RationalVector b = vec({1, 2, 3});
  CHECK(solve(a, b, Verification::On) == cramer(a, b));
}

TEST_CASE("solve rejects mismatched shapes") {
  CHECK_THROWS_AS(solve(RationalMatrix::Zero(2, 3), vec({1, 2})), DimensionMismatchError);
  CHECK_THROWS_AS(solve(RationalMatrix::Identity(2, 2), vec({1, 2, 3})), DimensionMismatchError);
}

TEST_CASE("solve matches Cramer's rule on random small systems") {
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<int> entry(-5, 5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + trial % 5;
    RationalMatrix a(n, n);
    RationalVector b(n);
    for (Index i = 0; i < n; ++i) {
      b(i) = Rational(entry(gen), 1 + std::abs(entry(gen)));
      for (Index j = 0; j < n; ++j) a(i, j) = entry(gen);
    }
    if (det_laplace(a) == 0) {
      CHECK_THROWS_AS(solve(a, b), SingularMatrixError);
      continue;
    }
    REQUIRE(solve(a, b, Verification::On) == cramer(a, b));
    ++checked;
  }
  CHECK(checked > 40);
}

TEST_CASE("solve(A, A y) recovers y up to 12 x 12") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (Index n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      RationalMatrix a(n, n);
      RationalVector y(n);
      for (Index i = 0; i < n; ++i) {
        y(i) = Rational(entry(gen), 1 + std::abs(entry(gen)));
        for (Index j = 0; j < n; ++j) a(i, j) = (i + j + rep) % 3 == 0 ? 0 : entry(gen);
      }
      // Strictly diagonally dominant, hence invertible; then reverse the rows
      // so elimination has to swap pivots.
      for (Index i = 0; i < n; ++i) a(i, i) = 9 * n + 1;
      a = a.colwise().reverse().eval();
      const RationalVector b = multiply(a, RationalMatrix(y)).col(0);
      REQUIRE(solve(a, b, Verification::On) == y);
    }
  }
}

TEST_CASE("multiply examples") {
  const RationalMatrix eye = RationalMatrix::Identity(2, 2);
  CHECK(is_identity(multiply(eye, eye)));

  RationalMatrix two = 2 * eye;
  RationalMatrix half(2, 2);
  half << Rational(1, 2), 0, 0, Rational(1, 2);
  CHECK(is_identity(multiply(two, half)));

  RationalMatrix s3(2, 2);
  s3 << Rational(2, 3), Rational(1, 3), Rational(1, 3), Rational(2, 3);
  CHECK(is_identity(multiply(from_ints({{2, -1}, {-1, 2}}), s3)));

  CHECK_THROWS_AS(multiply(RationalMatrix::Zero(2, 3), RationalMatrix::Zero(2, 3)), DimensionMismatchError);
}

TEST_CASE("multiply agrees with Eigen's product on integer-valued matrices") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> entry(-4, 4);
  Eigen::MatrixXd ad(4, 6), bd(6, 3);
  RationalMatrix a(4, 6), b(6, 3);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 6; ++j) a(i, j) = ad(i, j) = entry(gen);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 3; ++j) b(i, j) = bd(i, j) = entry(gen);
  const RationalMatrix c = multiply(a, b);
  const Eigen::MatrixXd cd = ad * bd;
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(c(i, j) == static_cast<long long>(cd(i, j)));
}

TEST_CASE("is_identity is exact") {
  CHECK(is_identity(RationalMatrix::Identity(4, 4)));
  RationalMatrix near = RationalMatrix::Identity(4, 4);
  near(2, 2) = Rational(1'000'000'001, 1'000'000'000);
  CHECK_FALSE(is_identity(near));
  CHECK_FALSE(is_identity(RationalMatrix::Zero(3, 3)));
  CHECK_FALSE(is_identity(RationalMatrix::Identity(2, 3)));
}

TEST_CASE("results stay canonical") {
  RationalMatrix a(2, 2);
  a << 6, 4, 3, 9;
  const RationalVector x = solve(a, vec({Rational(10, 4), Rational(12, 8)}));
  for (Index i = 0; i < x.size(); ++i) {
    CHECK(denominator_of(x(i)) > 0);
    CHECK(gcd(numerator_of(x(i)), denominator_of(x(i))) == 1);
  }
}
