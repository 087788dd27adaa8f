#pragma once

#include <random>
#include <utility>

#include "spinordual/dual_operators.hpp"
#include "spinordual/multivector.hpp"
#include "spinordual/quaternionic.hpp"

namespace spinordual {

// Samplers shared by the suites, the CLI and the tests. Coefficients are uniform in [-1, 1].
Multivector random_real_multivector(std::mt19937_64& rng);
Multivector random_complex_multivector(std::mt19937_64& rng);
Multivector random_even_real(std::mt19937_64& rng);
Multivector random_bivector(std::mt19937_64& rng, double scale = 1.0);
/// exp of a random bivector.
Multivector random_rotor(std::mt19937_64& rng);
/// Unit-norm real vector (timelike or spacelike); an element of Pin(1,3).
Multivector random_reflection(std::mt19937_64& rng);

Quaternion random_quaternion(std::mt19937_64& rng);
QuatMatrix2 random_quat_matrix(std::mt19937_64& rng);
ComplexMatrix4 random_complex_matrix(std::mt19937_64& rng);
Spinor random_spinor(std::mt19937_64& rng);
DualSpinor random_dual(std::mt19937_64& rng);

/// A valid Omega (converted from random_delta); never singular.
ComplexMatrix4 random_valid_omega(std::mt19937_64& rng, const KinematicPoint& k);
/// Omega_2 = a I + b Omega_1 + c Omega_1^2 with real a, b, c: valid and commuting with Omega_1.
std::pair<ComplexMatrix4, ComplexMatrix4> random_commuting_omegas(std::mt19937_64& rng, const KinematicPoint& k);
/// Two independent random valid Omegas (commute with probability 0).
std::pair<ComplexMatrix4, ComplexMatrix4> random_omega_pair(std::mt19937_64& rng, const KinematicPoint& k);

}  // namespace spinordual
