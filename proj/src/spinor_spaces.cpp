#include "spinordual/spinor_spaces.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "spinordual/linalg.hpp"
#include "spinordual/matrix_rep.hpp"

namespace spinordual {
namespace {

Eigen::VectorXd real_embed(const Multivector& x) {
  Eigen::VectorXd v(32);
  for (unsigned i = 0; i < kBladeCount; ++i) {
    v(2 * i) = x[static_cast<Blade>(i)].real();
    v(2 * i + 1) = x[static_cast<Blade>(i)].imag();
  }
  return v;
}

Eigen::VectorXcd complex_embed(const Multivector& x) {
  Eigen::VectorXcd v(16);
  for (unsigned i = 0; i < kBladeCount; ++i) v(i) = x[static_cast<Blade>(i)];
  return v;
}

/// Real-linear parameterization of the algebra over the chosen scalars.
std::vector<Multivector> real_parameter_basis(ScalarField field) {
  std::vector<Multivector> basis;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    basis.push_back(Multivector::blade(static_cast<Blade>(i)));
    if (field == ScalarField::complex) basis.push_back(Multivector::blade(static_cast<Blade>(i), Complex(0.0, 1.0)));
  }
  return basis;
}

// Greedy maximal independent subset, preserving candidate order.
std::vector<Multivector> independent_subset(const std::vector<Multivector>& candidates, ScalarField field) {
  std::vector<Multivector> chosen;
  if (field == ScalarField::complex) {
    ComplexMatrixX m(16, 0);
    for (const auto& c : candidates) {
      ComplexMatrixX trial(16, m.cols() + 1);
      trial << m, complex_embed(c);
      if (numeric_rank(trial) > m.cols()) {
        m = trial;
        chosen.push_back(c);
      }
    }
  } else {
    RealMatrixX m(32, 0);
    for (const auto& c : candidates) {
      RealMatrixX trial(32, m.cols() + 1);
      trial << m, real_embed(c);
      if (numeric_rank(trial) > m.cols()) {
        m = trial;
        chosen.push_back(c);
      }
    }
  }
  return chosen;
}

RealMatrixX real_basis_matrix(const std::vector<Multivector>& basis) {
  RealMatrixX b(32, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = real_embed(basis[i]);
  return b;
}

}  // namespace

Multivector apply_adjoint(AdjointKind kind, const Multivector& x) {
  switch (kind) {
    case AdjointKind::grade: return x.involute(InvolutionKind::grade);
    case AdjointKind::reversion: return x.involute(InvolutionKind::reversion);
    case AdjointKind::clifford_conj: return x.involute(InvolutionKind::clifford_conj);
    case AdjointKind::complex_conj: return x.involute(InvolutionKind::complex_conj);
    case AdjointKind::hermitian: return hermitian_adjoint(x);
    case AdjointKind::dirac: return dirac_dagger_dual(x);
  }
  throw std::logic_error("unknown adjoint kind");
}

Idempotent Idempotent::make(const Multivector& value, double tol) {
  const double r = max_abs_diff(value * value, value);
  if (r > tol) {
    std::ostringstream os;
    os << "not idempotent: |f f - f| = " << r;
    throw std::invalid_argument(os.str());
  }
  return Idempotent(value);
}

Idempotent canonical_idempotent(ScalarField mode) {
  const auto one = Multivector::scalar(1.0);
  const auto g0 = gamma(0);
  if (mode == ScalarField::real) return Idempotent::make((one + g0) * Complex(0.5));
  const auto ie12 = Multivector::blade(0b0110, Complex(0.0, 1.0));
  return Idempotent::make((one + g0) * (one + ie12) * Complex(0.25));
}

IdealBasis ideal_basis(const Idempotent& f, IdealSide side, ScalarField field) {
  std::vector<Multivector> products;
  for (const auto& e : real_parameter_basis(field))
    products.push_back(side == IdealSide::left ? e * f.value() : f.value() * e);
  return {side, field, independent_subset(products, field)};
}

double span_residual(const IdealBasis& basis, const Multivector& x) {
  if (basis.generators.empty()) return max_abs(x);
  Multivector fit;
  if (basis.field == ScalarField::complex) {
    ComplexMatrixX b(16, static_cast<Eigen::Index>(basis.dimension()));
    for (std::size_t i = 0; i < basis.dimension(); ++i)
      b.col(static_cast<Eigen::Index>(i)) = complex_embed(basis.generators[i]);
    const Eigen::VectorXcd target = complex_embed(x);
    const Eigen::VectorXcd coef = b.colPivHouseholderQr().solve(target);
    const Eigen::VectorXcd r = b * coef - target;
    return r.cwiseAbs().maxCoeff();
  }
  const RealMatrixX b = real_basis_matrix(basis.generators);
  const Eigen::VectorXd target = real_embed(x);
  const Eigen::VectorXd coef = b.colPivHouseholderQr().solve(target);
  return (b * coef - target).cwiseAbs().maxCoeff();
}

std::string to_string(DivisionRing r) {
  switch (r) {
    case DivisionRing::R: return "R";
    case DivisionRing::C: return "C";
    case DivisionRing::H: return "H";
    case DivisionRing::not_division_ring: return "not a division ring";
  }
  return "?";
}

double corner_residual(const Idempotent& f, const Multivector& x) {
  return max_abs_diff(f.value() * x * f.value(), x);
}

RingReport division_ring_identify(const Idempotent& f, ScalarField field) {
  RingReport rep;
  rep.field = field;
  std::vector<Multivector> corners;
  // Seed with f itself so the ring's unit is the first basis element.
  corners.push_back(f.value());
  for (const auto& e : real_parameter_basis(field)) corners.push_back(f.value() * e * f.value());
  rep.basis = independent_subset(corners, field);
  rep.dimension = rep.basis.size();
  const std::size_t d = rep.dimension;

  if (field == ScalarField::complex) {
    rep.ring = d == 1 ? DivisionRing::C : DivisionRing::not_division_ring;
    rep.profile = d == 1 ? "f Cl f = C f" : "dimension " + std::to_string(d) + " over C: f is not primitive";
    return rep;
  }
  if (d == 1) {
    rep.ring = DivisionRing::R;
    rep.profile = "f Cl f = R f";
    return rep;
  }
  if (d != 2 && d != 4) {
    rep.ring = DivisionRing::not_division_ring;
    rep.profile = "real dimension " + std::to_string(d) + ": f is not primitive";
    return rep;
  }

  // Coordinates in the ring basis; trace of left multiplication gives the real part.
  const RealMatrixX b = real_basis_matrix(rep.basis);
  const auto qr = b.colPivHouseholderQr();
  auto coords = [&](const Multivector& x) -> Eigen::VectorXd { return qr.solve(real_embed(x)); };
  auto real_part_of = [&](const Multivector& x) {
    double tr = 0.0;
    for (std::size_t j = 0; j < d; ++j) tr += coords(x * rep.basis[j])(static_cast<Eigen::Index>(j));
    return tr / static_cast<double>(d);
  };
  // Pure parts, orthonormalized under the form -Re(xy), which is definite on a division ring.
  std::vector<Multivector> units;
  for (std::size_t j = 1; j < d; ++j) {
    auto u = rep.basis[j] - f.value() * Complex(real_part_of(rep.basis[j]));
    for (const auto& e : units) u -= e * Complex(-real_part_of(u * e));
    const double q = -real_part_of(u * u);
    if (!(q > 1e-12)) {
      rep.ring = DivisionRing::not_division_ring;
      rep.profile = "imaginary unit with non-negative square: split algebra";
      return rep;
    }
    units.push_back(u * Complex(1.0 / std::sqrt(q)));
  }
  double square_residual = 0.0, anticommute_residual = 0.0;
  for (std::size_t a = 0; a < units.size(); ++a) {
    square_residual = std::max(square_residual, max_abs_diff(units[a] * units[a], -f.value()));
    for (std::size_t c = a + 1; c < units.size(); ++c)
      anticommute_residual = std::max(anticommute_residual, max_abs(units[a] * units[c] + units[c] * units[a]));
  }
  std::ostringstream os;
  os << units.size() << " imaginary unit(s) squaring to -f (residual " << square_residual << ")";
  if (units.size() > 1) os << ", pairwise anticommuting (residual " << anticommute_residual << ")";
  rep.profile = os.str();
  const bool ok = square_residual <= 1e-9 && anticommute_residual <= 1e-9;
  rep.ring = !ok ? DivisionRing::not_division_ring : (d == 2 ? DivisionRing::C : DivisionRing::H);
  return rep;
}

InvolutionCheck verify_involution_conditions(AdjointKind alpha, const Multivector& h, const Idempotent& f,
                                             double tol) {
  const auto h_inv = inverse(h);
  InvolutionCheck c;
  c.idempotent_residual = max_abs_diff(apply_adjoint(alpha, f.value()), h_inv * f.value() * h);
  c.fixed_residual = max_abs_diff(apply_adjoint(alpha, h), h);
  c.ok = c.idempotent_residual <= tol && c.fixed_residual <= tol;
  return c;
}

Multivector beta_inner_product(const Multivector& psi, const Multivector& phi, AdjointKind alpha,
                               const Multivector& h, const Idempotent& f, double tol) {
  InvolutionCheck check;
  try {
    check = verify_involution_conditions(alpha, h, f, tol);
  } catch (const std::domain_error&) {
    throw BetaPreconditionError("h is not invertible");
  }
  if (check.idempotent_residual > tol) throw BetaPreconditionError("alpha(f) != h^-1 f h");
  if (check.fixed_residual > tol) throw BetaPreconditionError("alpha(h) != h");
  if (max_abs_diff(psi * f.value(), psi) > tol) throw BetaPreconditionError("psi is not in the left ideal Cl f");
  if (max_abs_diff(phi * f.value(), phi) > tol) throw BetaPreconditionError("phi is not in the left ideal Cl f");
  return h * apply_adjoint(alpha, psi) * phi * f.value();
}

std::optional<AdjointElement> find_adjoint_h(AdjointKind alpha, const Idempotent& f, ScalarField field) {
  const auto params = real_parameter_basis(field);
  const auto alpha_f = apply_adjoint(alpha, f.value());
  RealMatrixX system(64, static_cast<Eigen::Index>(params.size()));
  for (std::size_t j = 0; j < params.size(); ++j) {
    const auto& h = params[j];
    system.col(static_cast<Eigen::Index>(j)) << real_embed(h * alpha_f - f.value() * h),
        real_embed(apply_adjoint(alpha, h) - h);
  }
  const RealMatrixX kernel = null_space(system);
  if (kernel.cols() == 0) return std::nullopt;

  auto assemble = [&](const Eigen::VectorXd& w) {
    Multivector h;
    for (std::size_t j = 0; j < params.size(); ++j) h += params[j] * Complex(w(static_cast<Eigen::Index>(j)));
    return h;
  };
  auto acceptable = [&](const Multivector& h) {
    if (std::abs(determinant(h)) <= 1e-8) return false;
    return verify_involution_conditions(alpha, h, f, 1e-9).ok;
  };
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    const auto h = assemble(kernel.col(c));
    if (acceptable(h)) return AdjointElement{h, false};
  }
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd w(kernel.cols());
    for (Eigen::Index c = 0; c < w.size(); ++c) w(c) = n(rng);
    const auto h = assemble(kernel * w);
    if (acceptable(h)) return AdjointElement{h, false};
  }
  return std::nullopt;
}

}  // namespace spinordual
