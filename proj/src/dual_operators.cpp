#include "spinordual/dual_operators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spinordual/matrix_rep.hpp"

namespace spinordual {

KinematicPoint::KinematicPoint(double m, double p, double t, double f)
    : m_(m), p_(p), theta_(t), phi_(f), e_(std::sqrt(p * p + m * m)) {}

KinematicPoint KinematicPoint::make(double mass, double momentum, double theta, double phi) {
  if (!std::isfinite(mass) || !std::isfinite(momentum) || !std::isfinite(theta) || !std::isfinite(phi))
    throw InvalidKinematics("kinematic parameters must be finite");
  if (mass <= 0.0) throw InvalidKinematics("mass must be positive");
  if (momentum < 0.0) throw InvalidKinematics("momentum magnitude must be non-negative");
  return {mass, momentum, theta, phi};
}

KinematicPoint KinematicPoint::with_energy(double mass, double momentum, double theta, double phi,
                                           double energy) {
  auto k = make(mass, momentum, theta, phi);
  if (!(std::abs(energy - k.energy()) <= kOnShellTol)) {
    std::ostringstream os;
    os.precision(17);
    os << "off-shell: E = " << energy << " but sqrt(p^2 + m^2) = " << k.energy();
    throw InvalidKinematics(os.str());
  }
  return k;
}

KinematicPoint KinematicPoint::random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mass(0.5, 2.0), mom(0.1, 3.0), theta(0.0, std::numbers::pi),
      phi(0.0, 2.0 * std::numbers::pi);
  const double m = mass(rng);
  const double p = mom(rng);
  const double t = theta(rng);
  const double f = phi(rng);
  return make(m, p, t, f);
}

DualSpinor DualSpinor::operator*(const ComplexMatrix4& g) const {
  DualSpinor r;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) r.components[j] += components[i] * g(i, j);
  return r;
}

double max_abs_diff(const DualSpinor& a, const DualSpinor& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a.components[i] - b.components[i]));
  return m;
}

const ComplexMatrix4& gamma0() {
  static const ComplexMatrix4 g = weyl_gamma(0);
  return g;
}

ComplexMatrix4 xi_dagger(const KinematicPoint& k) {
  const double m = k.mass(), p = k.momentum(), e = k.energy();
  const double ps = p * std::sin(k.theta()), pc = p * std::cos(k.theta());
  const Complex em = std::polar(1.0, -k.phi()), ep = std::polar(1.0, k.phi());
  ComplexMatrix4 x;
  x(0, 0) = ps;
  x(0, 1) = em * (e - pc);
  x(1, 0) = -ep * (e + pc);
  x(1, 1) = -ps;
  x(2, 2) = -ps;
  x(2, 3) = em * (e + pc);
  x(3, 2) = -ep * (e - pc);
  x(3, 3) = ps;
  return x * Complex(0.0, -1.0 / m);
}

ComplexMatrix4 xi(const KinematicPoint& k) { return xi_dagger(k).adjoint(); }

std::string_view to_string(Table1Element e) {
  switch (e) {
    case Table1Element::G: return "G";
    case Table1Element::F: return "F";
    case Table1Element::FG: return "FG";
    case Table1Element::XiDagger: return "XiDagger";
    case Table1Element::GXiDagger: return "GXiDagger";
    case Table1Element::H: return "H";
    case Table1Element::Hinv: return "Hinv";
  }
  return "?";
}

std::optional<Table1Element> parse_table1_element(std::string_view name) {
  for (auto e : kTable1Elements)
    if (to_string(e) == name) return e;
  return std::nullopt;
}

ComplexMatrix4 table1_element(Table1Element e, const KinematicPoint& k) {
  const double m = k.mass(), p = k.momentum(), en = k.energy();
  const auto& g0 = gamma0();
  const auto x = xi(k);
  const auto xd = xi_dagger(k);
  const auto id = ComplexMatrix4::identity();
  if ((e == Table1Element::F || e == Table1Element::FG) && p == 0.0)
    throw SingularParameter(std::string(to_string(e)) + " is singular at p = 0");
  switch (e) {
    case Table1Element::G: return anticommutator(g0, x) * Complex(m / (2.0 * en));
    case Table1Element::F: return commutator(g0, x) * Complex(m / (2.0 * p));
    case Table1Element::FG: return commutator(xd, x) * Complex(m * m / (4.0 * en * p));
    case Table1Element::XiDagger: return g0 * x * g0;
    case Table1Element::GXiDagger: return (xd * x + id) * g0 * Complex(m / (2.0 * en));
    case Table1Element::H: return x * xd * Complex(m * m);
    case Table1Element::Hinv: return xd * x * Complex(1.0 / (m * m));
  }
  throw std::logic_error("unknown Table1Element");
}

std::optional<ComplexMatrix4> reference_matrix(Table1Element e, const KinematicPoint& k) {
  const double p = k.momentum(), en = k.energy();
  const double s = std::sin(k.theta()), c = std::cos(k.theta());
  const Complex em = std::polar(1.0, -k.phi()), ep = std::polar(1.0, k.phi());
  const Complex i{0.0, 1.0};
  ComplexMatrix4 a;
  switch (e) {
    case Table1Element::G:
      a(0, 3) = -i * em;
      a(1, 2) = i * ep;
      a(2, 1) = -i * em;
      a(3, 0) = i * ep;
      return a;
    case Table1Element::F:
      a(0, 2) = -s;
      a(0, 3) = em * c;
      a(1, 2) = ep * c;
      a(1, 3) = s;
      a(2, 0) = s;
      a(2, 1) = -em * c;
      a(3, 0) = -ep * c;
      a(3, 1) = -s;
      return a;
    case Table1Element::XiDagger: return xi_dagger(k);
    case Table1Element::H:
    case Table1Element::Hinv: {
      const double plus = en * en + 2.0 * p * c * en + p * p;
      const double minus = en * en - 2.0 * p * c * en + p * p;
      const Complex off = 2.0 * em * en * p * s;
      const double sgn = e == Table1Element::H ? 1.0 : -1.0;
      const double d0 = e == Table1Element::H ? plus : minus;
      const double d1 = e == Table1Element::H ? minus : plus;
      a(0, 0) = d0;
      a(0, 1) = sgn * off;
      a(1, 0) = sgn * std::conj(off);
      a(1, 1) = d1;
      a(2, 2) = d1;
      a(2, 3) = -sgn * off;
      a(3, 2) = -sgn * std::conj(off);
      a(3, 3) = d0;
      return a;
    }
    case Table1Element::FG:
    case Table1Element::GXiDagger: return std::nullopt;
  }
  return std::nullopt;
}

Validation validate(OperatorKind kind, const ComplexMatrix4& m, const KinematicPoint& k, double tol) {
  Validation v;
  const auto& g0 = gamma0();
  if (kind == OperatorKind::delta) {
    v.residual = max_abs_diff(m.adjoint() * g0, g0 * m);
  } else {
    const auto x = xi(k);
    v.residual = max_abs_diff(m.adjoint(), x * g0 * m * g0 * x);
  }
  v.det = determinant(m);
  const bool constraint_ok = v.residual <= tol;
  const bool invertible = std::abs(v.det) > kDetTol;
  v.ok = constraint_ok && invertible;
  if (!v.ok) {
    std::ostringstream os;
    os << (kind == OperatorKind::delta ? "delta" : "omega") << ":";
    if (!constraint_ok) os << " constraint residual " << v.residual << " > " << tol;
    if (!invertible) os << " |det| " << std::abs(v.det) << " <= " << kDetTol;
    v.diagnostic = os.str();
  }
  return v;
}

Conversion omega_delta_convert(ConversionDirection dir, const ComplexMatrix4& m, const KinematicPoint& k) {
  const auto& g0 = gamma0();
  const auto x = xi(k);
  Conversion c;
  c.matrix = dir == ConversionDirection::to_delta ? g0 * m * g0 * x : g0 * m * x * g0;
  c.det_input = determinant(m);
  c.det_output = determinant(c.matrix);
  c.det_residual = std::abs(c.det_input - c.det_output);
  c.det_preserved = c.det_residual <= kValidationTol * std::max(1.0, std::abs(c.det_input));
  return c;
}

ComplexMatrix4 DeltaBlocks::assemble() const {
  ComplexMatrix4 d;
  const auto ad = a.adjoint();
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t col = 0; col < 2; ++col) {
      d(r, col) = a(r, col);
      d(r, col + 2) = b(r, col);
      d(r + 2, col) = c(r, col);
      d(r + 2, col + 2) = ad(r, col);
    }
  return d;
}

ComplexMatrix4 random_delta(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    DeltaBlocks blk;
    for (auto& z : blk.a.data) z = {u(rng), u(rng)};
    // Hermitian B and C: real diagonals and one complex off-diagonal each.
    for (auto* h : {&blk.b, &blk.c}) {
      (*h)(0, 0) = u(rng);
      (*h)(1, 1) = u(rng);
      (*h)(0, 1) = {u(rng), u(rng)};
      (*h)(1, 0) = std::conj((*h)(0, 1));
    }
    auto d = blk.assemble();
    if (std::abs(determinant(d)) > kDetTol) return d;
  }
}

ComplexMatrix4 random_delta(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_delta(rng);
}

DeltaBlocks block_decompose(const ComplexMatrix4& delta, double tol) {
  const double residual = max_abs_diff(delta.adjoint() * gamma0(), gamma0() * delta);
  if (residual > tol) {
    std::ostringstream os;
    os << "not a valid Delta: residual of Delta^dagger gamma0 = gamma0 Delta is " << residual;
    throw InvalidOperator(os.str());
  }
  DeltaBlocks blk;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      blk.a(r, c) = delta(r, c);
      blk.b(r, c) = delta(r, c + 2);
      blk.c(r, c) = delta(r + 2, c);
    }
  return blk;
}

DualSpinor dual_of(const Spinor& psi, const ComplexMatrix4& omega, const KinematicPoint& k) {
  const auto v = validate(OperatorKind::omega, omega, k);
  if (!v.ok) throw InvalidOperator("invalid Omega: " + v.diagnostic);
  DualSpinor row;
  for (std::size_t i = 0; i < 4; ++i) row.components[i] = std::conj(psi.components[i]);
  return row * (gamma0() * xi(k) * omega);
}

}  // namespace spinordual
