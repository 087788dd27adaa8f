#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "spinordual/scalar.hpp"

namespace spinordual {

// Cl(1,3): basis vectors e0..e3 with e0^2 = +1, ei^2 = -1.
struct Signature {
  static constexpr int p = 1;
  static constexpr int q = 3;
  static constexpr int dimension = 4;
  static constexpr std::array<int, 4> metric{+1, -1, -1, -1};
};

inline constexpr std::size_t kBladeCount = 16;

/// A blade is a 4-bit mask: bit mu set means e_mu is a factor, factors ascending.
using Blade = std::uint8_t;

constexpr int blade_grade(Blade b) { return std::popcount(static_cast<unsigned>(b)); }

/// Sign of e_a * e_b = sign * e_(a xor b): swap-count parity times metric of shared factors.
constexpr int blade_product_sign(Blade a, Blade b) {
  int swaps = 0;
  for (unsigned t = static_cast<unsigned>(a) >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps & 1) ? -1 : 1;
  for (unsigned shared = a & b; shared != 0; shared &= shared - 1)
    sign *= Signature::metric[std::countr_zero(shared)];
  return sign;
}

/// Blade key as written in JSON: "" for the scalar, otherwise ascending digits ("01", "0123").
std::string blade_key(Blade b);
/// Parses a blade key; throws std::invalid_argument on repeated, unordered or out-of-range digits.
Blade parse_blade_key(const std::string& key);

enum class InvolutionKind { grade, reversion, clifford_conj, complex_conj };

template <class T>
class BasicMultivector {
 public:
  BasicMultivector() = default;
  explicit BasicMultivector(const std::array<T, kBladeCount>& c) : coeffs_(c) {}

  static BasicMultivector scalar(const T& s) { return blade(0, s); }
  static BasicMultivector blade(Blade b, const T& s = ScalarTraits<T>::unit()) {
    BasicMultivector m;
    m.coeffs_.at(b) = s;
    return m;
  }
  static BasicMultivector vector(int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("basis vector index must be in 0..3");
    return blade(static_cast<Blade>(1u << mu));
  }

  const T& operator[](Blade b) const { return coeffs_[b]; }
  T& operator[](Blade b) { return coeffs_[b]; }
  const std::array<T, kBladeCount>& coeffs() const { return coeffs_; }

  BasicMultivector& operator+=(const BasicMultivector& o) {
    for (std::size_t i = 0; i < kBladeCount; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& o) {
    for (std::size_t i = 0; i < kBladeCount; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  BasicMultivector& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator*(BasicMultivector a, const T& s) { return a *= s; }
  friend BasicMultivector operator*(const T& s, BasicMultivector a) { return a *= s; }
  BasicMultivector operator-() const {
    BasicMultivector r;
    for (std::size_t i = 0; i < kBladeCount; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }

  /// Geometric product.
  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    BasicMultivector r;
    for (unsigned i = 0; i < kBladeCount; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (unsigned j = 0; j < kBladeCount; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        const int s = blade_product_sign(static_cast<Blade>(i), static_cast<Blade>(j));
        const T term = a.coeffs_[i] * b.coeffs_[j];
        if (s > 0)
          r.coeffs_[i ^ j] += term;
        else
          r.coeffs_[i ^ j] -= term;
      }
    }
    return r;
  }

  friend bool operator==(const BasicMultivector&, const BasicMultivector&) = default;

  BasicMultivector grade_part(int k) const {
    if (k < 0 || k > 4) throw std::out_of_range("grade must be in 0..4");
    BasicMultivector r;
    for (unsigned i = 0; i < kBladeCount; ++i)
      if (blade_grade(static_cast<Blade>(i)) == k) r.coeffs_[i] = coeffs_[i];
    return r;
  }

  BasicMultivector involute(InvolutionKind kind) const {
    BasicMultivector r;
    for (unsigned i = 0; i < kBladeCount; ++i) {
      const int p = blade_grade(static_cast<Blade>(i));
      int sign = 1;
      switch (kind) {
        case InvolutionKind::grade: sign = (p & 1) ? -1 : 1; break;
        case InvolutionKind::reversion: sign = ((p * (p - 1) / 2) & 1) ? -1 : 1; break;
        case InvolutionKind::clifford_conj: sign = (((p * (p + 1)) / 2) & 1) ? -1 : 1; break;
        case InvolutionKind::complex_conj: sign = 1; break;
      }
      const T c = kind == InvolutionKind::complex_conj ? conjugate(coeffs_[i]) : coeffs_[i];
      r.coeffs_[i] = sign > 0 ? c : -c;
    }
    return r;
  }

 private:
  static bool is_zero(const T& x) { return x == T{}; }

  std::array<T, kBladeCount> coeffs_{};
};

using Multivector = BasicMultivector<Complex>;
using ExactMultivector = BasicMultivector<ExactComplex>;

inline Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }
inline Multivector grade_projection(const Multivector& a, int k) { return a.grade_part(k); }
inline Multivector involution(InvolutionKind kind, const Multivector& a) { return a.involute(kind); }

/// e0123; squares to -1.
Multivector pseudoscalar();
/// -i e0123, the chirality operator whose Weyl image is diag(-1,-1,1,1); squares to +1.
Multivector gamma5_chiral();

inline Multivector gamma(int mu) { return Multivector::vector(mu); }

/// Largest coefficient magnitude of a - b.
double max_abs_diff(const Multivector& a, const Multivector& b);
double max_abs(const Multivector& a);
double max_imag(const Multivector& a);
bool is_real(const Multivector& a, double tol);
Multivector real_part(const Multivector& a);

}  // namespace spinordual
