#pragma once

#include "fusion/numeric.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <vector>

namespace fusion {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = DenseMatrix<Rational>;
using ExactVector = DenseVector<Rational>;

// Row-reduces a copy of `m` over the rationals and returns the reduced
// echelon form together with its pivot columns. No tolerance is involved:
// a pivot is any exactly nonzero entry.
struct EchelonForm {
  ExactMatrix reduced;
  std::vector<Eigen::Index> pivot_columns;
};

EchelonForm row_echelon(ExactMatrix m);

Eigen::Index exact_rank(const ExactMatrix& m);

// Basis of the right kernel {v : m v = 0}, one column per basis vector.
ExactMatrix exact_kernel(const ExactMatrix& m);

// Integer-valued matrix power for small exponents.
template <class Derived>
auto matrix_power(const Eigen::MatrixBase<Derived>& m, int exponent) {
  using Plain = typename Derived::PlainObject;
  Plain result = Plain::Identity(m.rows(), m.cols());
  for (int i = 0; i < exponent; ++i) result = result * m;
  return result;
}

}  // namespace fusion
