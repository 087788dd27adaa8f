#pragma once

#include <complex>

#include "spinordual/exact.hpp"

namespace spinordual {

using Complex = std::complex<double>;

inline Complex conjugate(const Complex& z) { return std::conj(z); }
inline double conjugate(double x) { return x; }

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static double unit() { return 1.0; }
};

template <>
struct ScalarTraits<Complex> {
  static Complex unit() { return {1.0, 0.0}; }
  static Complex imaginary() { return {0.0, 1.0}; }
};

template <>
struct ScalarTraits<ExactComplex> {
  static ExactComplex unit() { return ExactComplex(1); }
  static ExactComplex imaginary() { return ExactComplex(Rational(0), Rational(1)); }
};

inline Complex to_complex(const ExactComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

}  // namespace spinordual
