#include "spinordual/random.hpp"

#include <cmath>

#include "spinordual/group_lab.hpp"

namespace spinordual {
namespace {
double uniform(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); }
}  // namespace

Multivector random_real_multivector(std::mt19937_64& rng) {
  Multivector x;
  for (unsigned b = 0; b < kBladeCount; ++b) x[static_cast<Blade>(b)] = uniform(rng);
  return x;
}

Multivector random_complex_multivector(std::mt19937_64& rng) {
  Multivector x;
  for (unsigned b = 0; b < kBladeCount; ++b) {
    const double re = uniform(rng);
    x[static_cast<Blade>(b)] = Complex(re, uniform(rng));
  }
  return x;
}

Multivector random_even_real(std::mt19937_64& rng) {
  Multivector x;
  for (auto b : even_blades()) x[b] = uniform(rng);
  return x;
}

Multivector random_bivector(std::mt19937_64& rng, double scale) {
  Multivector x;
  for (unsigned b = 0; b < kBladeCount; ++b)
    if (blade_grade(static_cast<Blade>(b)) == 2) x[static_cast<Blade>(b)] = scale * uniform(rng);
  return x;
}

Multivector random_rotor(std::mt19937_64& rng) { return exp_bivector(random_bivector(rng)); }

Multivector random_reflection(std::mt19937_64& rng) {
  for (;;) {
    Multivector v;
    for (int mu = 0; mu < 4; ++mu) v[static_cast<Blade>(1u << mu)] = uniform(rng);
    const double n = (v * v)[0].real();
    if (std::abs(n) < 1e-3) continue;
    return v * Complex(1.0 / std::sqrt(std::abs(n)));
  }
}

Quaternion random_quaternion(std::mt19937_64& rng) {
  const double a = uniform(rng), b = uniform(rng), c = uniform(rng);
  return {a, b, c, uniform(rng)};
}

QuatMatrix2 random_quat_matrix(std::mt19937_64& rng) {
  QuatMatrix2 a;
  for (auto& q : a.q) q = random_quaternion(rng);
  return a;
}

ComplexMatrix4 random_complex_matrix(std::mt19937_64& rng) {
  ComplexMatrix4 m;
  for (auto& z : m.data) {
    const double re = uniform(rng);
    z = Complex(re, uniform(rng));
  }
  return m;
}

Spinor random_spinor(std::mt19937_64& rng) {
  Spinor s;
  for (auto& z : s.components) {
    const double re = uniform(rng);
    z = Complex(re, uniform(rng));
  }
  return s;
}

DualSpinor random_dual(std::mt19937_64& rng) {
  DualSpinor s;
  for (auto& z : s.components) {
    const double re = uniform(rng);
    z = Complex(re, uniform(rng));
  }
  return s;
}

ComplexMatrix4 random_valid_omega(std::mt19937_64& rng, const KinematicPoint& k) {
  return omega_delta_convert(ConversionDirection::to_omega, random_delta(rng), k).matrix;
}

std::pair<ComplexMatrix4, ComplexMatrix4> random_commuting_omegas(std::mt19937_64& rng, const KinematicPoint& k) {
  const auto first = random_valid_omega(rng, k);
  for (;;) {
    const double a = uniform(rng), b = uniform(rng), c = uniform(rng);
    auto second = ComplexMatrix4::identity() * Complex(a) + first * Complex(b) + first * first * Complex(c);
    if (std::abs(determinant(second)) > 1e-6) return {first, second};
  }
}

std::pair<ComplexMatrix4, ComplexMatrix4> random_omega_pair(std::mt19937_64& rng, const KinematicPoint& k) {
  auto first = random_valid_omega(rng, k);
  return {first, random_valid_omega(rng, k)};
}

}  // namespace spinordual
