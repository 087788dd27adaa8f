#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "spinordual/linalg.hpp"
#include "spinordual/matrix_rep.hpp"
#include "spinordual/quaternionic.hpp"
#include "spinordual/random.hpp"

using namespace spinordual;

namespace {

const Complex I1{0.0, 1.0};

ComplexMatrix2 m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

QuatMatrix2 qdiag(const Quaternion& a, const Quaternion& b) {
  QuatMatrix2 m;
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("quaternion to complex 2x2") {
  CHECK(quat_to_m2c(Quaternion::one()) == ComplexMatrix2::identity());
  CHECK(quat_to_m2c(Quaternion::i()) == m2(I1, 0, 0, -I1));
  CHECK(quat_to_m2c(Quaternion::j()) == m2(0, 1, -1, 0));
  CHECK(quat_to_m2c(Quaternion::k()) == m2(0, I1, I1, 0));
  CHECK(quat_to_m2c({1, 2, 3, 4}) == m2({1, 2}, {3, 4}, {-3, 4}, {1, -2}));
}

TEST_CASE("unit quaternion products: Hamilton table and its image, exactly") {
  const Quaternion u[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  // table[r][c] = +-(index + 1) of u[r] * u[c]
  const int table[4][4] = {{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int t = table[r][c];
      const Quaternion expected = (t > 0 ? 1.0 : -1.0) * u[std::abs(t) - 1];
      CHECK(u[r] * u[c] == expected);
      CHECK(quat_to_m2c(u[r]) * quat_to_m2c(u[c]) == quat_to_m2c(expected));
    }
}

TEST_CASE("quat_to_m2c is an injective algebra homomorphism") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_quaternion(rng), q = random_quaternion(rng);
    CHECK(max_abs_diff(quat_to_m2c(p * q), quat_to_m2c(p) * quat_to_m2c(q)) <= 1e-12);
    CHECK(max_abs_diff(quat_to_m2c(p + q), quat_to_m2c(p) + quat_to_m2c(q)) <= 1e-15);
    CHECK(std::abs(determinant(quat_to_m2c(p)) - Complex(p.norm())) <= 1e-12);
  }
  RealMatrixX lin(8, 4);
  const Quaternion u[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (int c = 0; c < 4; ++c) {
    const auto m = quat_to_m2c(u[c]);
    for (int e = 0; e < 4; ++e) {
      lin(2 * e, c) = m.data[static_cast<std::size_t>(e)].real();
      lin(2 * e + 1, c) = m.data[static_cast<std::size_t>(e)].imag();
    }
  }
  CHECK(numeric_rank(lin) == 4);
}

TEST_CASE("GL(2,H) embedding") {
  CHECK(gl2h_embed(QuatMatrix2::identity()) == ComplexMatrix4::identity());
  const auto d = gl2h_embed(qdiag(Quaternion::i(), Quaternion::one()));
  CHECK(d(0, 0) == I1);
  CHECK(d(1, 1) == -I1);
  CHECK(d(2, 2) == Complex(1.0));
  CHECK(d(3, 3) == Complex(1.0));
  CHECK(max_abs(d - ComplexMatrix4::diagonal({I1, -I1, 1.0, 1.0})) == 0.0);

  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_quat_matrix(rng), b = random_quat_matrix(rng);
    worst = std::max(worst, max_abs_diff(gl2h_embed(a * b), gl2h_embed(a) * gl2h_embed(b)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("embedded rows follow the conjugate-pair pattern") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto m = gl2h_embed(random_quat_matrix(rng));
    for (std::size_t r = 0; r < 4; r += 2) {
      CHECK(m(r + 1, 0) == -std::conj(m(r, 1)));
      CHECK(m(r + 1, 1) == std::conj(m(r, 0)));
      CHECK(m(r + 1, 2) == -std::conj(m(r, 3)));
      CHECK(m(r + 1, 3) == std::conj(m(r, 2)));
    }
  }
}

TEST_CASE("pattern recognition") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto yes = is_quaternionic_pattern(gl2h_embed(random_quat_matrix(rng)));
    CHECK(yes.matches);
    CHECK(yes.residual <= 1e-12);
    const auto no = is_quaternionic_pattern(random_complex_matrix(rng));
    CHECK_FALSE(no.matches);
    CHECK(no.residual > 1e-6);
  }
  CHECK(quaternionic_pattern_dof() == 16);
  CHECK(is_quaternionic_pattern(ComplexMatrix4::identity()).degrees_of_freedom == 16);
}

TEST_CASE("quaternionic generators satisfy the Clifford relations exactly") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const auto a = quaternionic_gamma(mu), b = quaternionic_gamma(nu);
      const double g = mu == nu ? 2.0 * Signature::metric[static_cast<std::size_t>(mu)] : 0.0;
      CHECK(a * b + b * a == g * QuatMatrix2::identity());
    }
  CHECK(quaternionic_gamma(0) == qdiag(Quaternion::one(), -Quaternion::one()));
  QuatMatrix2 off;
  off(0, 1) = Quaternion::j();
  off(1, 0) = Quaternion::j();
  CHECK(quaternionic_gamma(2) == off);
}

TEST_CASE("multivector to M2(H)") {
  CHECK(mv_to_m2h(gamma(0)) == qdiag(Quaternion::one(), -Quaternion::one()));
  const auto g1 = mv_to_m2h(gamma(1));
  CHECK(g1 * g1 == -1.0 * QuatMatrix2::identity());
  CHECK(mv_to_m2h(gamma(1) * gamma(1)) == -1.0 * QuatMatrix2::identity());
  CHECK_THROWS_AS(mv_to_m2h(Multivector::scalar(I1)), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto x = random_real_multivector(rng), y = random_real_multivector(rng);
    CHECK(max_abs_diff(mv_to_m2h(x * y), mv_to_m2h(x) * mv_to_m2h(y)) <= 1e-10);
    CHECK(max_abs_diff(m2h_to_mv(mv_to_m2h(x)), x) <= 1e-12);
    const auto a = random_quat_matrix(rng);
    CHECK(max_abs_diff(mv_to_m2h(m2h_to_mv(a)), a) <= 1e-12);
  }
}

TEST_CASE("one change of basis relates the two complex images") {
  const auto& s = quaternionic_intertwiner();
  const auto s_inv = inverse(s);
  CHECK(std::abs(determinant(s)) > 1e-6);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_real_multivector(rng);
    CHECK(max_abs_diff(to_matrix(x), s * gl2h_embed(mv_to_m2h(x)) * s_inv) <= 1e-9);
  }
  CHECK(&quaternionic_intertwiner() == &s);
}

TEST_CASE("invertibility transport") {
  std::mt19937_64 rng(7);
  auto transported = [](const Multivector& x) {
    return (std::abs(determinant(x)) > 1e-12) == (std::abs(determinant(gl2h_embed(mv_to_m2h(x)))) > 1e-12);
  };
  for (int t = 0; t < 500; ++t) CHECK(transported(random_real_multivector(rng)));
  const auto zd = Multivector::scalar(1.0) + gamma(0);
  CHECK(transported(zd));
  CHECK(std::abs(determinant(gl2h_embed(mv_to_m2h(zd)))) <= 1e-12);
  CHECK(transported(Multivector::scalar(1.0) + Multivector::blade(0b0011)));
}

TEST_CASE("even subalgebra to M2(C)") {
  CHECK(even_to_m2c(Multivector::scalar(1.0)) == ComplexMatrix2::identity());
  CHECK(max_abs_diff(even_to_m2c(Multivector::blade(0b0110)), m2(-I1, 0, 0, I1)) == 0.0);
  CHECK_THROWS_AS(even_to_m2c(gamma(0)), std::invalid_argument);
  CHECK_THROWS_AS(even_to_m2c(Multivector::scalar(I1)), std::invalid_argument);
  std::mt19937_64 rng(8);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto u = random_even_real(rng), v = random_even_real(rng);
    worst = std::max(worst, max_abs_diff(even_to_m2c(u * v), even_to_m2c(u) * even_to_m2c(v)));
    // Even elements are block-diagonal in the Weyl image.
    const auto m = to_matrix(u);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        CHECK(m(r, c + 2) == Complex{});
        CHECK(m(r + 2, c) == Complex{});
      }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("even_to_m2c is injective on the 8-dimensional even part") {
  RealMatrixX lin(8, 8);
  const auto& blades = even_blades();
  for (std::size_t c = 0; c < 8; ++c) {
    const auto m = even_to_m2c(Multivector::blade(blades[c]));
    for (std::size_t e = 0; e < 4; ++e) {
      lin(static_cast<Eigen::Index>(2 * e), static_cast<Eigen::Index>(c)) = m.data[e].real();
      lin(static_cast<Eigen::Index>(2 * e + 1), static_cast<Eigen::Index>(c)) = m.data[e].imag();
    }
  }
  CHECK(numeric_rank(lin) == 8);
  CHECK(null_space(lin).cols() == 0);
  const RealMatrixX recon = lin.inverse() * lin;
  CHECK((recon - RealMatrixX::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-12);
  for (auto b : blades) CHECK(blade_grade(b) % 2 == 0);
}
