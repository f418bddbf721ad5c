#pragma once

// Dense exact linear algebra on Eigen containers. Every routine is templated
// on the scalar and uses only field operations and exact comparison with
// zero, so with Rational nothing is ever rounded.
//
// The kernels skip zero entries. H_N and its relatives have three or four
// nonzeros per row, which turns the cubic dense loops into near-quadratic
// work without changing the dense interface.

#include "cayley_ht/rational.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <utility>

namespace cayley_ht {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;
using Index = Eigen::Index;

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(Index pivot_row)
      : std::runtime_error("singular matrix: no nonzero pivot for row " + std::to_string(pivot_row)),
        pivot_row_(pivot_row) {}
  Index pivot_row() const { return pivot_row_; }

 private:
  Index pivot_row_;
};

class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact product a * b.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> multiply(const Eigen::MatrixBase<DerivedA>& a,
                                                const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>, "multiply: scalar types differ");
  if (a.cols() != b.rows())
    throw DimensionMismatchError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                 std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const DenseMatrix<Scalar> lhs = a;
  const DenseMatrix<Scalar> rhs = b;
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(lhs.rows(), rhs.cols());
  Scalar term;
  for (Index i = 0; i < lhs.rows(); ++i) {
    for (Index k = 0; k < lhs.cols(); ++k) {
      const Scalar& aik = lhs(i, k);
      if (aik == 0) continue;
      for (Index j = 0; j < rhs.cols(); ++j) {
        if (rhs(k, j) == 0) continue;
        term = aik * rhs(k, j);
        out(i, j) += term;
      }
    }
  }
  return out;
}

/// True iff `a` is square with exact ones on the diagonal and exact zeros elsewhere.
template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

enum class Verification { Off, On };

#ifdef NDEBUG
inline constexpr Verification kDefaultVerification = Verification::Off;
#else
inline constexpr Verification kDefaultVerification = Verification::On;
#endif

/// Solves a x = rhs by Gaussian elimination with first-nonzero pivoting.
///
/// Throws SingularMatrixError naming the row for which no pivot exists, and
/// DimensionMismatchError for non-square or mismatched inputs. With
/// Verification::On the result is multiplied back and compared exactly.
template <typename DerivedA, typename DerivedB>
DenseVector<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& rhs,
                                             Verification verification = kDefaultVerification) {
  using Scalar = typename DerivedA::Scalar;
  const Index n = a.rows();
  if (a.cols() != n) throw DimensionMismatchError("solve: matrix is not square");
  if (rhs.rows() != n || rhs.cols() != 1) throw DimensionMismatchError("solve: right-hand side has wrong length");

  DenseMatrix<Scalar> m = a;
  DenseVector<Scalar> x = rhs;
  Scalar factor;
  Scalar term;

  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError(col);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      std::swap(x(pivot), x(col));
    }
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      factor = m(r, col) / m(col, col);
      m(r, col) = 0;
      for (Index c = col + 1; c < n; ++c) {
        if (m(col, c) == 0) continue;
        term = factor * m(col, c);
        m(r, c) -= term;
      }
      if (x(col) != 0) {
        term = factor * x(col);
        x(r) -= term;
      }
    }
  }

  for (Index row = n - 1; row >= 0; --row) {
    for (Index c = row + 1; c < n; ++c) {
      if (m(row, c) == 0) continue;
      term = m(row, c) * x(c);
      x(row) -= term;
    }
    x(row) /= m(row, row);
  }

  if (verification == Verification::On) {
    const DenseMatrix<Scalar> check = multiply(a, DenseMatrix<Scalar>(x));
    for (Index i = 0; i < n; ++i)
      if (check(i, 0) != rhs(i, 0)) throw std::logic_error("solve: back-substitution check failed");
  }
  return x;
}

}  // namespace cayley_ht
