#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>

#include "spinordual/scalar.hpp"

namespace spinordual {

/// Dense row-major N x N matrix over a scalar ring T.
template <class T, std::size_t N>
struct SquareMatrix {
  std::array<T, N * N> data{};

  static constexpr std::size_t size = N;

  static SquareMatrix zero() { return {}; }
  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = ScalarTraits<T>::unit();
    return m;
  }
  static SquareMatrix diagonal(const std::array<T, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  T& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] -= o.data[i];
    return *this;
  }
  SquareMatrix& operator*=(const T& s) {
    for (auto& x : data) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const T& s) { return a *= s; }
  friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }
  SquareMatrix operator-() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.data[i] = -data[i];
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  SquareMatrix transpose() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  SquareMatrix conjugate() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.data[i] = spinordual::conjugate(data[i]);
    return r;
  }
  SquareMatrix adjoint() const { return conjugate().transpose(); }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }
};

using ComplexMatrix4 = SquareMatrix<Complex, 4>;
using ComplexMatrix2 = SquareMatrix<Complex, 2>;
using RealMatrix4 = SquareMatrix<double, 4>;
using ExactMatrix4 = SquareMatrix<ExactComplex, 4>;

/// Largest absolute entry of a - b.
template <class T, std::size_t N>
double max_abs_diff(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, static_cast<double>(std::abs(a.data[i] - b.data[i])));
  return m;
}

template <class T, std::size_t N>
double max_abs(const SquareMatrix<T, N>& a) {
  double m = 0.0;
  for (const auto& x : a.data) m = std::max(m, static_cast<double>(std::abs(x)));
  return m;
}

template <class T, std::size_t N>
SquareMatrix<T, N> commutator(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b) {
  return a * b - b * a;
}

template <class T, std::size_t N>
SquareMatrix<T, N> anticommutator(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b) {
  return a * b + b * a;
}

// Determinant by Gaussian elimination with partial pivoting.
template <class T, std::size_t N>
T determinant(SquareMatrix<T, N> m) {
  T det = ScalarTraits<T>::unit();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(m(r, c)) > std::abs(m(pivot, c))) pivot = r;
    if (std::abs(m(pivot, c)) == 0.0) return T{};
    if (pivot != c) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(c, j), m(pivot, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < N; ++r) {
      const T f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < N; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws std::domain_error when a pivot falls below `pivot_tol`.
template <class T, std::size_t N>
SquareMatrix<T, N> inverse(SquareMatrix<T, N> m, double pivot_tol = 1e-14) {
  auto inv = SquareMatrix<T, N>::identity();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(m(r, c)) > std::abs(m(pivot, c))) pivot = r;
    if (std::abs(m(pivot, c)) <= pivot_tol) throw std::domain_error("matrix is singular");
    if (pivot != c)
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(m(c, j), m(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    const T p = m(c, c);
    for (std::size_t j = 0; j < N; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c) continue;
      const T f = m(r, c);
      if (std::abs(f) == 0.0) continue;
      for (std::size_t j = 0; j < N; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class T, std::size_t N>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<T, N>& m) {
  os << '[';
  for (std::size_t i = 0; i < N; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < N; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace spinordual
