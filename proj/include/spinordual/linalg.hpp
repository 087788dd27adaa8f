#pragma once

#include <Eigen/Dense>

#include "spinordual/matrix.hpp"

namespace spinordual {

using RealMatrixX = Eigen::MatrixXd;
using ComplexMatrixX = Eigen::MatrixXcd;

inline constexpr double kRankTol = 1e-9;

/// Numerical rank: number of singular values above tol * max(1, largest singular value).
Eigen::Index numeric_rank(const RealMatrixX& m, double tol = kRankTol);
Eigen::Index numeric_rank(const ComplexMatrixX& m, double tol = kRankTol);

/// Orthonormal basis (columns) of the right null space, singular values <= tol * max(1, s_max).
RealMatrixX null_space(const RealMatrixX& m, double tol = kRankTol);
ComplexMatrixX null_space(const ComplexMatrixX& m, double tol = kRankTol);

double smallest_singular_value(const RealMatrixX& m);

ComplexMatrix4 matrix_exp(const ComplexMatrix4& m);

template <std::size_t N>
ComplexMatrixX to_eigen(const SquareMatrix<Complex, N>& m) {
  ComplexMatrixX e(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

}  // namespace spinordual
