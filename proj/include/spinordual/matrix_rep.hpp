#pragma once

#include <array>

#include "spinordual/matrix.hpp"
#include "spinordual/multivector.hpp"

namespace spinordual {

/// Weyl-representation gamma^mu = [[0, sigma-bar^mu], [sigma^mu, 0]] with sigma^mu = (I, sigma-vec),
/// sigma-bar^mu = (I, -sigma-vec). Entries are 0, +-1, +-i.
template <class T>
SquareMatrix<T, 4> weyl_gamma_t(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("gamma index must be in 0..3");
  const T one = ScalarTraits<T>::unit();
  const T i = ScalarTraits<T>::imaginary();
  const T zero{};
  // Pauli blocks sigma^mu; sigma-bar^mu flips the sign of the spatial ones.
  std::array<std::array<T, 4>, 4> pauli{{
      {one, zero, zero, one},
      {zero, one, one, zero},
      {zero, -i, i, zero},
      {one, zero, zero, -one},
  }};
  const auto& s = pauli[static_cast<std::size_t>(mu)];
  SquareMatrix<T, 4> g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const T sigma = s[static_cast<std::size_t>(r * 2 + c)];
      g(r, c + 2) = mu == 0 ? sigma : -sigma;
      g(r + 2, c) = sigma;
    }
  return g;
}

inline ComplexMatrix4 weyl_gamma(int mu) { return weyl_gamma_t<Complex>(mu); }

/// Matrix image of a basis blade: ordered product of its gamma factors.
template <class T>
SquareMatrix<T, 4> blade_matrix_t(Blade b) {
  auto m = SquareMatrix<T, 4>::identity();
  for (int mu = 0; mu < 4; ++mu)
    if (b & (1u << mu)) m = m * weyl_gamma_t<T>(mu);
  return m;
}

const ComplexMatrix4& blade_matrix(Blade b);

template <class T>
SquareMatrix<T, 4> to_matrix_t(const BasicMultivector<T>& a) {
  SquareMatrix<T, 4> m;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (a[static_cast<Blade>(i)] == T{}) continue;
    m += blade_matrix_t<T>(static_cast<Blade>(i)) * a[static_cast<Blade>(i)];
  }
  return m;
}

ComplexMatrix4 to_matrix(const Multivector& a);
inline ExactMatrix4 to_matrix(const ExactMultivector& a) { return to_matrix_t(a); }

/// Inverse of to_matrix: coefficient of blade I is trace(M * Gamma_I^-1) / 4.
Multivector from_matrix(const ComplexMatrix4& m);

/// from_matrix(gamma0 * to_matrix(a)^dagger * gamma0). In this basis it acts as complex conjugation
/// composed with reversion, so bivector and trivector parts change sign.
Multivector dirac_dagger_dual(const Multivector& a);

/// from_matrix(to_matrix(a)^dagger).
Multivector hermitian_adjoint(const Multivector& a);

/// Multivector inverse through the matrix image; throws std::domain_error when |det| <= det_tol.
Multivector inverse(const Multivector& a, double det_tol = 1e-12);
Complex determinant(const Multivector& a);

}  // namespace spinordual
