#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "spinordual/linalg.hpp"
#include "spinordual/matrix_rep.hpp"
#include "spinordual/random.hpp"
#include "spinordual/spinor_spaces.hpp"

using namespace spinordual;

namespace {

const Complex I1{0.0, 1.0};
const Multivector kOne = Multivector::scalar(1.0);

// Rank of the coefficient vectors of {e_I f} (or {f e_I}), over C or over R.
Eigen::Index ideal_rank_oracle(const Multivector& f, bool left, bool complex) {
  if (complex) {
    ComplexMatrixX m(16, 16);
    for (unsigned i = 0; i < 16; ++i) {
      const auto e = Multivector::blade(static_cast<Blade>(i));
      const auto x = left ? e * f : f * e;
      for (unsigned j = 0; j < 16; ++j) m(j, i) = x[static_cast<Blade>(j)];
    }
    return numeric_rank(m);
  }
  RealMatrixX m(32, 16);
  for (unsigned i = 0; i < 16; ++i) {
    const auto e = Multivector::blade(static_cast<Blade>(i));
    const auto x = left ? e * f : f * e;
    for (unsigned j = 0; j < 16; ++j) {
      m(2 * j, i) = x[static_cast<Blade>(j)].real();
      m(2 * j + 1, i) = x[static_cast<Blade>(j)].imag();
    }
  }
  return numeric_rank(m);
}

}  // namespace

TEST_CASE("canonical idempotents") {
  const auto fc = canonical_idempotent(ScalarField::complex);
  const auto expected =
      (kOne + gamma(0)) * (kOne + Multivector::blade(0b0110, I1)) * Complex(0.25);
  CHECK(max_abs_diff(fc.value(), expected) <= 1e-15);
  CHECK(max_abs_diff(fc.value() * fc.value(), fc.value()) <= 1e-12);
  const auto pm = to_matrix(fc.value());
  CHECK(max_abs_diff(pm * pm, pm) <= 1e-12);
  CHECK(numeric_rank(to_eigen(pm)) == 1);

  const auto fr = canonical_idempotent(ScalarField::real);
  CHECK(max_abs_diff(fr.value(), (kOne + gamma(0)) * Complex(0.5)) <= 1e-15);
  CHECK(max_abs_diff(fr.value() * fr.value(), fr.value()) <= 1e-12);
  CHECK(numeric_rank(to_eigen(to_matrix(fr.value()))) == 2);

  CHECK_THROWS_AS(Idempotent::make(gamma(0)), std::invalid_argument);
  CHECK_NOTHROW(Idempotent::make(kOne));
  CHECK_NOTHROW(Idempotent::make(Multivector{}));
}

TEST_CASE("ideal bases") {
  const auto fc = canonical_idempotent(ScalarField::complex);
  const auto fr = canonical_idempotent(ScalarField::real);
  const auto lc = ideal_basis(fc, IdealSide::left, ScalarField::complex);
  const auto lr = ideal_basis(fr, IdealSide::left, ScalarField::real);
  const auto rc = ideal_basis(fc, IdealSide::right, ScalarField::complex);
  CHECK(lc.dimension() == 4);
  CHECK(lr.dimension() == 8);
  CHECK(rc.dimension() == 4);
  CHECK(static_cast<Eigen::Index>(lc.dimension()) == ideal_rank_oracle(fc.value(), true, true));
  CHECK(static_cast<Eigen::Index>(lr.dimension()) == ideal_rank_oracle(fr.value(), true, false));
  CHECK(static_cast<Eigen::Index>(rc.dimension()) == ideal_rank_oracle(fc.value(), false, true));
  for (const auto& g : lc.generators) CHECK(max_abs_diff(g * fc.value(), g) <= 1e-10);
  for (const auto& g : lr.generators) CHECK(max_abs_diff(g * fr.value(), g) <= 1e-10);
  for (const auto& g : rc.generators) CHECK(max_abs_diff(fc.value() * g, g) <= 1e-10);
  CHECK(ideal_basis(Idempotent::make(kOne), IdealSide::left, ScalarField::complex).dimension() == 16);
}

TEST_CASE("left ideals are closed under left multiplication") {
  const auto fc = canonical_idempotent(ScalarField::complex);
  const auto fr = canonical_idempotent(ScalarField::real);
  const auto lc = ideal_basis(fc, IdealSide::left, ScalarField::complex);
  const auto lr = ideal_basis(fr, IdealSide::left, ScalarField::real);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto psi = random_complex_multivector(rng) * fc.value();
    CHECK(span_residual(lc, random_complex_multivector(rng) * psi) <= 1e-9);
    const auto psr = random_real_multivector(rng) * fr.value();
    CHECK(span_residual(lr, random_real_multivector(rng) * psr) <= 1e-9);
  }
  CHECK(span_residual(lc, kOne) > 1e-3);
  // Real span excludes i times a real ideal element that is not already in it.
  CHECK(span_residual(lr, fr.value() * I1) > 1e-3);
}

TEST_CASE("division rings") {
  const auto fc = canonical_idempotent(ScalarField::complex);
  const auto fr = canonical_idempotent(ScalarField::real);
  const auto c = division_ring_identify(fc, ScalarField::complex);
  CHECK(c.ring == DivisionRing::C);
  CHECK(c.dimension == 1);
  const auto h = division_ring_identify(fr, ScalarField::real);
  CHECK(h.ring == DivisionRing::H);
  CHECK(h.dimension == 4);
  REQUIRE(h.basis.size() == 4);
  // Oracle on the returned basis: f x f = x, and the three non-unit elements square to -f
  // and pairwise anticommute.
  for (const auto& b : h.basis) CHECK(max_abs_diff(fr.value() * b * fr.value(), b) <= 1e-10);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(max_abs_diff(h.basis[i] * h.basis[i], -fr.value()) <= 1e-10);
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK(max_abs_diff(h.basis[i] * h.basis[j], -(h.basis[j] * h.basis[i])) <= 1e-10);
  }
  const auto full = division_ring_identify(Idempotent::make(kOne), ScalarField::real);
  CHECK(full.ring == DivisionRing::not_division_ring);
  CHECK(full.dimension == 16);
  const auto c_over_r = division_ring_identify(fc, ScalarField::real);
  CHECK(c_over_r.ring == DivisionRing::C);
  CHECK(c_over_r.dimension == 2);
  CHECK(to_string(DivisionRing::H) == "H");
}

TEST_CASE("involution conditions") {
  const auto fr = canonical_idempotent(ScalarField::real);
  CHECK(verify_involution_conditions(AdjointKind::reversion, kOne, fr).ok);
  const auto g = verify_involution_conditions(AdjointKind::grade, kOne, fr);
  CHECK_FALSE(g.ok);
  CHECK(g.idempotent_residual == doctest::Approx(1.0));
  CHECK(verify_involution_conditions(AdjointKind::reversion, gamma(0), fr).ok);
  // e01 conjugation keeps f but reversion negates e01.
  const auto e01 = verify_involution_conditions(AdjointKind::reversion, Multivector::blade(0b0011), fr);
  CHECK_FALSE(e01.ok);
  CHECK(e01.fixed_residual > 1.0);
  CHECK_THROWS_AS(verify_involution_conditions(AdjointKind::reversion, kOne + gamma(0), fr), std::domain_error);
}

TEST_CASE("beta inner product examples") {
  const auto fr = canonical_idempotent(ScalarField::real);
  const auto& f = fr.value();
  CHECK(max_abs_diff(beta_inner_product(f, f, AdjointKind::reversion, kOne, fr), f) <= 1e-12);
  CHECK(max_abs(beta_inner_product(Multivector{}, f, AdjointKind::reversion, kOne, fr)) == 0.0);
  CHECK_THROWS_AS(beta_inner_product(f, f, AdjointKind::grade, kOne, fr), BetaPreconditionError);
  CHECK_THROWS_AS(beta_inner_product(kOne, f, AdjointKind::reversion, kOne, fr), BetaPreconditionError);
}

TEST_CASE("beta lands in f Cl f and is linear over the ring") {
  const auto fr = canonical_idempotent(ScalarField::real);
  const auto& f = fr.value();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto psi = random_real_multivector(rng) * f, phi = random_real_multivector(rng) * f,
               chi = random_real_multivector(rng) * f;
    const auto b = beta_inner_product(psi, phi, AdjointKind::reversion, kOne, fr);
    CHECK(corner_residual(fr, b) <= 1e-10);
    const auto s = f * random_real_multivector(rng) * f;
    CHECK(max_abs_diff(beta_inner_product(psi, phi * s, AdjointKind::reversion, kOne, fr), b * s) <= 1e-10);
    CHECK(max_abs_diff(beta_inner_product(psi, phi + chi, AdjointKind::reversion, kOne, fr),
                       b + beta_inner_product(psi, chi, AdjointKind::reversion, kOne, fr)) <= 1e-10);
    CHECK(max_abs_diff(beta_inner_product(psi + chi, phi, AdjointKind::reversion, kOne, fr),
                       b + beta_inner_product(chi, phi, AdjointKind::reversion, kOne, fr)) <= 1e-10);
  }
}

TEST_CASE("with the Dirac involution and h = gamma0, beta is psi-dagger gamma0 phi times f") {
  const auto fc = canonical_idempotent(ScalarField::complex);
  const auto p = to_matrix(fc.value());
  // p = u u^dagger; read u off its largest column.
  std::size_t col = 0;
  for (std::size_t c = 1; c < 4; ++c)
    if (std::abs(p(c, c)) > std::abs(p(col, col))) col = c;
  std::array<Complex, 4> u{};
  for (std::size_t r = 0; r < 4; ++r) u[r] = p(r, col) / std::sqrt(p(col, col).real());
  REQUIRE(verify_involution_conditions(AdjointKind::dirac, gamma(0), fc).ok);

  const auto g0 = weyl_gamma(0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto psi = random_complex_multivector(rng) * fc.value();
    const auto phi = random_complex_multivector(rng) * fc.value();
    const auto ps = to_matrix(psi), ph = to_matrix(phi);
    std::array<Complex, 4> a{}, b{};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        a[r] += ps(r, c) * u[c];
        b[r] += ph(r, c) * u[c];
      }
    Complex pairing{};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) pairing += std::conj(a[r]) * g0(r, c) * b[c];
    const auto beta = beta_inner_product(psi, phi, AdjointKind::dirac, gamma(0), fc);
    CHECK(max_abs_diff(beta, fc.value() * pairing) <= 1e-10);
  }
}

TEST_CASE("adjoint kinds") {
  std::mt19937_64 rng(4);
  const auto x = random_complex_multivector(rng);
  CHECK(max_abs_diff(apply_adjoint(AdjointKind::hermitian, x), hermitian_adjoint(x)) == 0.0);
  CHECK(max_abs_diff(apply_adjoint(AdjointKind::dirac, x), dirac_dagger_dual(x)) == 0.0);
  CHECK(apply_adjoint(AdjointKind::reversion, x) == involution(InvolutionKind::reversion, x));
  CHECK(apply_adjoint(AdjointKind::grade, x) == involution(InvolutionKind::grade, x));
}

TEST_CASE("search for the adjoint element h") {
  const auto fr = canonical_idempotent(ScalarField::real);
  const auto fc = canonical_idempotent(ScalarField::complex);
  const auto r = find_adjoint_h(AdjointKind::reversion, fr, ScalarField::real);
  REQUIRE(r.has_value());
  CHECK_FALSE(r->canonical);
  CHECK(verify_involution_conditions(AdjointKind::reversion, r->h, fr).ok);
  CHECK(max_imag(r->h) == 0.0);

  const auto c = find_adjoint_h(AdjointKind::complex_conj, fc, ScalarField::complex);
  REQUIRE(c.has_value());
  CHECK(verify_involution_conditions(AdjointKind::complex_conj, c->h, fc).ok);

  // Conjugation would have to fix gamma0 and flip e12; every blade that does so is odd under reversion.
  CHECK_FALSE(find_adjoint_h(AdjointKind::reversion, fc, ScalarField::complex).has_value());
  for (Blade b : {Blade{0b1011}, Blade{0b1101}, Blade{0b1010}, Blade{0b1100}}) {
    const auto e = Multivector::blade(b);
    CHECK(max_abs_diff(inverse(e) * fc.value() * e, involution(InvolutionKind::reversion, fc.value())) <= 1e-12);
    CHECK(involution(InvolutionKind::reversion, e) == -e);
  }
}
