#include "spinordual/quaternionic.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinordual/linalg.hpp"
#include "spinordual/matrix_rep.hpp"

namespace spinordual {
namespace {

struct QuaternionicTables {
  std::array<QuatMatrix2, kBladeCount> blade;
  RealMatrixX to_coeffs;  // 16 x 16: flattened QuatMatrix2 -> blade coefficients
  ComplexMatrix4 intertwiner;

  static Eigen::VectorXd flatten(const QuatMatrix2& a) {
    Eigen::VectorXd v(16);
    for (std::size_t i = 0; i < 4; ++i) {
      v(static_cast<Eigen::Index>(4 * i)) = a.q[i].a;
      v(static_cast<Eigen::Index>(4 * i + 1)) = a.q[i].b;
      v(static_cast<Eigen::Index>(4 * i + 2)) = a.q[i].c;
      v(static_cast<Eigen::Index>(4 * i + 3)) = a.q[i].d;
    }
    return v;
  }

  QuaternionicTables() {
    RealMatrixX forward(16, 16);
    for (unsigned b = 0; b < kBladeCount; ++b) {
      auto m = QuatMatrix2::identity();
      for (int mu = 0; mu < 4; ++mu)
        if (b & (1u << mu)) m = m * quaternionic_gamma(mu);
      blade[b] = m;
      forward.col(b) = flatten(m);
    }
    to_coeffs = forward.inverse();

    // Solve W_mu S - S Q_mu = 0 for all four generators.
    ComplexMatrixX system = ComplexMatrixX::Zero(64, 16);
    for (int mu = 0; mu < 4; ++mu) {
      const auto w = weyl_gamma(mu);
      const auto q = gl2h_embed(quaternionic_gamma(mu));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const int row = mu * 16 + i * 4 + j;
          for (int k = 0; k < 4; ++k) {
            system(row, k * 4 + j) += w(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
            system(row, i * 4 + k) -= q(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
          }
        }
    }
    const ComplexMatrixX kernel = null_space(system);
    if (kernel.cols() != 1) throw std::logic_error("intertwiner kernel is not one-dimensional");
    for (int i = 0; i < 16; ++i) intertwiner.data[static_cast<std::size_t>(i)] = kernel(i, 0);
  }
};

const QuaternionicTables& tables() {
  static const QuaternionicTables t;
  return t;
}

}  // namespace

double max_abs_diff(const QuatMatrix2& x, const QuatMatrix2& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto d = x.q[i] - y.q[i];
    m = std::max({m, std::abs(d.a), std::abs(d.b), std::abs(d.c), std::abs(d.d)});
  }
  return m;
}

ComplexMatrix2 quat_to_m2c(const Quaternion& q) {
  ComplexMatrix2 m;
  m(0, 0) = {q.a, q.b};
  m(0, 1) = {q.c, q.d};
  m(1, 0) = {-q.c, q.d};
  m(1, 1) = {q.a, -q.b};
  return m;
}

ComplexMatrix4 gl2h_embed(const QuatMatrix2& a) {
  ComplexMatrix4 m;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      const auto blk = quat_to_m2c(a(r, c));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(2 * r + i, 2 * c + j) = blk(i, j);
    }
  return m;
}

PatternReport is_quaternionic_pattern(const ComplexMatrix4& m, double tol) {
  PatternReport r;
  for (std::size_t row = 0; row < 4; row += 2)
    for (std::size_t col = 0; col < 4; col += 2) {
      r.residual = std::max(r.residual, std::abs(m(row + 1, col) + std::conj(m(row, col + 1))));
      r.residual = std::max(r.residual, std::abs(m(row + 1, col + 1) - std::conj(m(row, col))));
    }
  r.matches = r.residual <= tol;
  r.degrees_of_freedom = quaternionic_pattern_dof();
  return r;
}

int quaternionic_pattern_dof() {
  static const int dof = [] {
    // Unknowns: (Re, Im) of the 16 entries, entry (i, j) at 2 * (4 i + j).
    auto re = [](int i, int j) { return 2 * (4 * i + j); };
    auto im = [](int i, int j) { return 2 * (4 * i + j) + 1; };
    RealMatrixX c = RealMatrixX::Zero(16, 32);
    int eq = 0;
    for (int row = 0; row < 4; row += 2)
      for (int col = 0; col < 4; col += 2) {
        // M(row+1, col) = -conj(M(row, col+1))
        c(eq, re(row + 1, col)) = 1.0;
        c(eq++, re(row, col + 1)) = 1.0;
        c(eq, im(row + 1, col)) = 1.0;
        c(eq++, im(row, col + 1)) = -1.0;
        // M(row+1, col+1) = conj(M(row, col))
        c(eq, re(row + 1, col + 1)) = 1.0;
        c(eq++, re(row, col)) = -1.0;
        c(eq, im(row + 1, col + 1)) = 1.0;
        c(eq++, im(row, col)) = 1.0;
      }
    return 32 - static_cast<int>(numeric_rank(c));
  }();
  return dof;
}

QuatMatrix2 quaternionic_gamma(int mu) {
  QuatMatrix2 g;
  switch (mu) {
    case 0:
      g(0, 0) = Quaternion::one();
      g(1, 1) = -Quaternion::one();
      return g;
    case 1: g(0, 1) = g(1, 0) = Quaternion::i(); return g;
    case 2: g(0, 1) = g(1, 0) = Quaternion::j(); return g;
    case 3: g(0, 1) = g(1, 0) = Quaternion::k(); return g;
    default: throw std::out_of_range("gamma index must be in 0..3");
  }
}

QuatMatrix2 mv_to_m2h(const Multivector& x, double tol) {
  if (!is_real(x, tol)) throw std::invalid_argument("mv_to_m2h requires real coefficients");
  QuatMatrix2 r;
  const auto& t = tables();
  for (unsigned b = 0; b < kBladeCount; ++b) {
    const double c = x[static_cast<Blade>(b)].real();
    if (c != 0.0) r = r + c * t.blade[b];
  }
  return r;
}

Multivector m2h_to_mv(const QuatMatrix2& a) {
  const Eigen::VectorXd coeffs = tables().to_coeffs * QuaternionicTables::flatten(a);
  Multivector x;
  for (unsigned b = 0; b < kBladeCount; ++b) x[static_cast<Blade>(b)] = coeffs(b);
  return x;
}

const std::array<Blade, 8>& even_blades() {
  static const std::array<Blade, 8> blades{0b0000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, 0b1111};
  return blades;
}

ComplexMatrix2 even_to_m2c(const Multivector& x, double tol) {
  if (!is_real(x, tol)) throw std::invalid_argument("even_to_m2c requires real coefficients");
  if (max_abs(x.grade_part(1)) > tol || max_abs(x.grade_part(3)) > tol)
    throw std::invalid_argument("even_to_m2c requires an even element");
  const auto m = to_matrix(x);
  ComplexMatrix2 blk;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) blk(i, j) = m(i, j);
  return blk;
}

const ComplexMatrix4& quaternionic_intertwiner() { return tables().intertwiner; }

}  // namespace spinordual
