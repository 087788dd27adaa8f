#include "spinordual/linalg.hpp"

#include <algorithm>

#include <unsupported/Eigen/MatrixFunctions>

namespace spinordual {
namespace {

template <class M>
Eigen::Index rank_impl(const M& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<M> svd(m);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  return (s.array() > cutoff).count();
}

template <class M>
M null_impl(const M& m, double tol) {
  Eigen::JacobiSVD<M> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index r = (s.array() > cutoff).count();
  const auto& v = svd.matrixV();
  return v.rightCols(v.cols() - r);
}

}  // namespace

Eigen::Index numeric_rank(const RealMatrixX& m, double tol) { return rank_impl(m, tol); }
Eigen::Index numeric_rank(const ComplexMatrixX& m, double tol) { return rank_impl(m, tol); }

RealMatrixX null_space(const RealMatrixX& m, double tol) { return null_impl(m, tol); }
ComplexMatrixX null_space(const ComplexMatrixX& m, double tol) { return null_impl(m, tol); }

double smallest_singular_value(const RealMatrixX& m) {
  Eigen::JacobiSVD<RealMatrixX> svd(m);
  const auto& s = svd.singularValues();
  return s.size() ? s(s.size() - 1) : 0.0;
}

ComplexMatrix4 matrix_exp(const ComplexMatrix4& m) {
  Eigen::Matrix4cd e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  const Eigen::Matrix4cd x = e.exp();
  ComplexMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = x(i, j);
  return out;
}

}  // namespace spinordual
