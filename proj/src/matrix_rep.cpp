#include "spinordual/matrix_rep.hpp"

namespace spinordual {
namespace {

struct BladeTables {
  std::array<ComplexMatrix4, kBladeCount> blade;
  std::array<ComplexMatrix4, kBladeCount> inverse_blade;

  BladeTables() {
    for (unsigned i = 0; i < kBladeCount; ++i) {
      const auto b = static_cast<Blade>(i);
      blade[i] = blade_matrix_t<Complex>(b);
      // e_I e_I = blade_product_sign(I, I); the inverse is that sign times e_I.
      inverse_blade[i] = blade[i] * Complex(blade_product_sign(b, b));
    }
  }
};

const BladeTables& tables() {
  static const BladeTables t;
  return t;
}

}  // namespace

const ComplexMatrix4& blade_matrix(Blade b) { return tables().blade.at(b); }

ComplexMatrix4 to_matrix(const Multivector& a) {
  ComplexMatrix4 m;
  const auto& t = tables();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const Complex c = a[static_cast<Blade>(i)];
    if (c == Complex{}) continue;
    m += t.blade[i] * c;
  }
  return m;
}

Multivector from_matrix(const ComplexMatrix4& m) {
  Multivector a;
  const auto& t = tables();
  for (unsigned i = 0; i < kBladeCount; ++i) a[static_cast<Blade>(i)] = (m * t.inverse_blade[i]).trace() / 4.0;
  return a;
}

Multivector dirac_dagger_dual(const Multivector& a) {
  const auto& g0 = blade_matrix(0b0001);
  return from_matrix(g0 * to_matrix(a).adjoint() * g0);
}

Multivector hermitian_adjoint(const Multivector& a) { return from_matrix(to_matrix(a).adjoint()); }

Complex determinant(const Multivector& a) { return determinant(to_matrix(a)); }

Multivector inverse(const Multivector& a, double det_tol) {
  const auto m = to_matrix(a);
  if (std::abs(determinant(m)) <= det_tol) throw std::domain_error("multivector is not invertible");
  return from_matrix(spinordual::inverse(m, 0.0));
}

}  // namespace spinordual
