#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "spinordual/linalg.hpp"
#include "spinordual/matrix_rep.hpp"
#include "spinordual/random.hpp"

using namespace spinordual;

namespace {

const Complex I1{0.0, 1.0};

ComplexMatrix4 from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix4 m;
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix4 diag(Complex a, Complex b, Complex c, Complex d) {
  return from_rows({{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, c, 0}, {0, 0, 0, d}});
}

}  // namespace

TEST_CASE("Weyl gamma matrices") {
  CHECK(weyl_gamma(0) == from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(weyl_gamma(3) == from_rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}));
  CHECK(weyl_gamma(1) == from_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  CHECK(weyl_gamma(2) == from_rows({{0, 0, 0, I1}, {0, 0, -I1, 0}, {0, -I1, 0, 0}, {I1, 0, 0, 0}}));
  CHECK(weyl_gamma(0) * weyl_gamma(0) == ComplexMatrix4::identity());
  CHECK_THROWS_AS(weyl_gamma(4), std::out_of_range);
}

TEST_CASE("Weyl anticommutation is exact over Gaussian rationals") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const auto a = weyl_gamma_t<ExactComplex>(mu), b = weyl_gamma_t<ExactComplex>(nu);
      const std::int64_t g = mu == nu ? 2 * Signature::metric[static_cast<std::size_t>(mu)] : 0;
      CHECK(a * b + b * a == ExactMatrix4::identity() * ExactComplex(g));
    }
}

TEST_CASE("to_matrix examples") {
  CHECK(to_matrix(Multivector::scalar(1.0)) == ComplexMatrix4::identity());
  CHECK(to_matrix(gamma5_chiral()) == diag(-1, -1, 1, 1));
  CHECK(to_matrix(Multivector::blade(0b0011)) == weyl_gamma(0) * weyl_gamma(1));
  CHECK(to_matrix(pseudoscalar()) == diag(-I1, -I1, I1, I1));
  CHECK(to_matrix(Multivector::blade(0b0110)) == diag(-I1, I1, -I1, I1));
  const auto exact = to_matrix(ExactMultivector::blade(0b1111));
  CHECK(exact(0, 0) == ExactComplex(Rational(0), Rational(-1)));
}

TEST_CASE("blade images are linearly independent") {
  RealMatrixX gram(16, 16);
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j) {
      const Complex t = (blade_matrix(static_cast<Blade>(i)) * blade_matrix(static_cast<Blade>(j)).adjoint()).trace();
      gram(i, j) = t.real();
    }
  // Weyl blades are unitary up to sign structure, so the pairing is 4 * identity.
  CHECK((gram - 4.0 * RealMatrixX::Identity(16, 16)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(numeric_rank(gram) == 16);
}

TEST_CASE("to_matrix is an algebra homomorphism") {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_complex_multivector(rng), b = random_complex_multivector(rng);
    worst = std::max(worst, max_abs_diff(to_matrix(a * b), to_matrix(a) * to_matrix(b)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("from_matrix inverts to_matrix") {
  CHECK(from_matrix(ComplexMatrix4::identity()) == Multivector::scalar(1.0));
  CHECK(max_abs_diff(from_matrix(weyl_gamma(2)), gamma(2)) == 0.0);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_complex_multivector(rng);
    CHECK(max_abs_diff(from_matrix(to_matrix(x)), x) <= 1e-12);
    const auto m = random_complex_matrix(rng);
    CHECK(max_abs_diff(to_matrix(from_matrix(m)), m) <= 1e-12);
  }
}

TEST_CASE("dirac_dagger_dual") {
  CHECK(max_abs_diff(dirac_dagger_dual(gamma(1)), gamma(1)) == 0.0);
  CHECK(max_abs_diff(dirac_dagger_dual(Multivector::scalar(I1)), Multivector::scalar(-I1)) == 0.0);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_complex_multivector(rng);
    const auto oracle = involution(InvolutionKind::reversion, involution(InvolutionKind::complex_conj, x));
    CHECK(max_abs_diff(dirac_dagger_dual(x), oracle) <= 1e-12);
    CHECK(max_abs_diff(dirac_dagger_dual(dirac_dagger_dual(x)), x) <= 1e-12);
  }
}

TEST_CASE("dirac_dagger_dual fixed points: real in grades 0, 1, 4 and imaginary in grades 2, 3") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_real_multivector(rng);
    const Multivector z = x.grade_part(0) + x.grade_part(1) + x.grade_part(4) +
                          (x.grade_part(2) + x.grade_part(3)) * I1;
    CHECK(max_abs_diff(dirac_dagger_dual(z), z) <= 1e-12);
  }
  // A real bivector is sent to its negative.
  const auto e12 = Multivector::blade(0b0110);
  CHECK(max_abs_diff(dirac_dagger_dual(e12), -e12) <= 1e-15);
}

TEST_CASE("hermitian_adjoint matches the matrix adjoint") {
  std::mt19937_64 rng(15);
  const auto x = random_complex_multivector(rng);
  CHECK(max_abs_diff(to_matrix(hermitian_adjoint(x)), to_matrix(x).adjoint()) <= 1e-12);
}

TEST_CASE("multivector inverse and determinant") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_complex_multivector(rng);
    CHECK(max_abs_diff(x * inverse(x), Multivector::scalar(1.0)) <= 1e-9);
  }
  const auto zero_divisor = Multivector::scalar(1.0) + gamma(0);
  CHECK(std::abs(determinant(zero_divisor)) <= 1e-15);
  CHECK_THROWS_AS(inverse(zero_divisor), std::domain_error);
  CHECK(determinant(gamma(0)) == Complex(1.0));
}

TEST_CASE("square matrix helpers") {
  std::mt19937_64 rng(17);
  const auto a = random_complex_matrix(rng);
  CHECK(max_abs_diff(a * spinordual::inverse(a), ComplexMatrix4::identity()) <= 1e-10);
  CHECK(std::abs(to_eigen(a).determinant() - determinant(a)) <= 1e-10);
  CHECK_THROWS_AS(spinordual::inverse(ComplexMatrix4{}), std::domain_error);
  CHECK(commutator(a, a) == ComplexMatrix4{});
}
