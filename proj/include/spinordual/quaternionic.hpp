#pragma once

#include <array>
#include <cmath>

#include "spinordual/matrix.hpp"
#include "spinordual/multivector.hpp"

namespace spinordual {

/// a + b i + c j + d k.
struct Quaternion {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  static Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  double norm() const { return a * a + b * b + c * c + d * d; }
  bool invertible() const { return norm() > 0.0; }
  Quaternion conj() const { return {a, -b, -c, -d}; }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator*(double s, const Quaternion& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// 2 x 2 quaternionic matrix [[q11, q12], [q21, q22]].
struct QuatMatrix2 {
  std::array<Quaternion, 4> q{};

  static QuatMatrix2 identity() { return {{Quaternion::one(), {}, {}, Quaternion::one()}}; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return q[r * 2 + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return q[r * 2 + c]; }

  friend QuatMatrix2 operator+(const QuatMatrix2& x, const QuatMatrix2& y) {
    QuatMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.q[i] = x.q[i] + y.q[i];
    return r;
  }
  friend QuatMatrix2 operator*(double s, const QuatMatrix2& x) {
    QuatMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.q[i] = s * x.q[i];
    return r;
  }
  friend QuatMatrix2 operator*(const QuatMatrix2& x, const QuatMatrix2& y) {
    QuatMatrix2 r;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
  }
  friend bool operator==(const QuatMatrix2&, const QuatMatrix2&) = default;
};

double max_abs_diff(const QuatMatrix2& x, const QuatMatrix2& y);

/// q -> [[a + ib, c + id], [-c + id, a - ib]].
ComplexMatrix2 quat_to_m2c(const Quaternion& q);

/// Blockwise quat_to_m2c: the image has rows (a11, a12, a13, a14), (-a12*, a11*, -a14*, a13*), ...
ComplexMatrix4 gl2h_embed(const QuatMatrix2& a);

struct PatternReport {
  bool matches = false;
  double residual = 0.0;        // worst violated conjugate-pair constraint
  int degrees_of_freedom = 0;   // real dimension of the pattern's solution space
};

/// Checks the eight conjugate-pair constraints of the GL(2,H) image.
PatternReport is_quaternionic_pattern(const ComplexMatrix4& m, double tol = 1e-10);

/// Real dimension of the solution space of the pattern constraints, from the rank of the
/// 16 x 32 real constraint system. Computed once.
int quaternionic_pattern_dof();

/// Quaternionic generators gamma0 = diag(1, -1), gamma_m = offdiag(e_m, e_m), e = (i, j, k).
QuatMatrix2 quaternionic_gamma(int mu);

/// Linear extension of quaternionic_gamma to real multivectors; throws std::invalid_argument
/// when an imaginary coefficient exceeds tol.
QuatMatrix2 mv_to_m2h(const Multivector& x, double tol = 1e-10);
/// Inverse of mv_to_m2h.
Multivector m2h_to_mv(const QuatMatrix2& a);

/// Upper-left block of to_matrix(x) for an even real x. Throws std::invalid_argument on odd or
/// imaginary content above tol.
ComplexMatrix2 even_to_m2c(const Multivector& x, double tol = 1e-10);

/// The even blades in a fixed order: 1, e01, e02, e03, e12, e13, e23, e0123.
const std::array<Blade, 8>& even_blades();

/// Fixed S with to_matrix(x) = S * gl2h_embed(mv_to_m2h(x)) * S^-1 for every real x;
/// solved once from the intertwiner equation on the generators.
const ComplexMatrix4& quaternionic_intertwiner();

}  // namespace spinordual
