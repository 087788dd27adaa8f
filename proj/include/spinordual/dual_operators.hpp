#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spinordual/matrix.hpp"

namespace spinordual {

inline constexpr double kValidationTol = 1e-10;
inline constexpr double kDetTol = 1e-12;
inline constexpr double kOnShellTol = 1e-12;

class InvalidKinematics : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// On-shell kinematic point (m, p, theta, phi). The energy is always sqrt(p^2 + m^2).
class KinematicPoint {
 public:
  /// Requires m > 0 and p >= 0 (p = 0 is allowed; F and FG are singular there).
  static KinematicPoint make(double mass, double momentum, double theta, double phi);
  /// As make(), but also checks a caller-supplied energy against the on-shell value.
  static KinematicPoint with_energy(double mass, double momentum, double theta, double phi, double energy);
  /// Uniform m in [0.5, 2], p in [0.1, 3], theta in [0, pi], phi in [0, 2 pi).
  static KinematicPoint random(std::mt19937_64& rng);

  double mass() const { return m_; }
  double momentum() const { return p_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double energy() const { return e_; }

 private:
  KinematicPoint(double m, double p, double t, double f);
  double m_, p_, theta_, phi_, e_;
};

/// Column 4-spinor.
struct Spinor {
  std::array<Complex, 4> components{};
};

/// Row covector paired with column spinors.
struct DualSpinor {
  std::array<Complex, 4> components{};

  Complex operator()(const Spinor& psi) const {
    Complex s{};
    for (std::size_t i = 0; i < 4; ++i) s += components[i] * psi.components[i];
    return s;
  }
  /// Right action: (psi* g)_j = sum_i psi*_i g_ij.
  DualSpinor operator*(const ComplexMatrix4& g) const;
};

double max_abs_diff(const DualSpinor& a, const DualSpinor& b);

const ComplexMatrix4& gamma0();

/// Xi-dagger as a closed-form matrix in (m, p, theta, phi); Xi is its conjugate transpose.
ComplexMatrix4 xi_dagger(const KinematicPoint& k);
ComplexMatrix4 xi(const KinematicPoint& k);

enum class Table1Element { G, F, FG, XiDagger, GXiDagger, H, Hinv };

std::string_view to_string(Table1Element e);
std::optional<Table1Element> parse_table1_element(std::string_view name);
inline constexpr std::array<Table1Element, 7> kTable1Elements{
    Table1Element::G,        Table1Element::F, Table1Element::FG,  Table1Element::XiDagger,
    Table1Element::GXiDagger, Table1Element::H, Table1Element::Hinv};

/// The element built from its defining expression in gamma0 and Xi.
/// Throws SingularParameter for F and FG at p = 0.
ComplexMatrix4 table1_element(Table1Element e, const KinematicPoint& k);

/// Published closed-form matrices for G, F, XiDagger, H and Hinv, transcribed verbatim.
/// Returns nullopt for rows with no displayed matrix.
std::optional<ComplexMatrix4> reference_matrix(Table1Element e, const KinematicPoint& k);

enum class OperatorKind { delta, omega };

struct Validation {
  bool ok = false;
  double residual = 0.0;  // max-entry residual of the defining constraint
  Complex det{};
  std::string diagnostic;
};

/// delta: Delta^dagger gamma0 = gamma0 Delta and det != 0.
/// omega: Omega^dagger = Xi gamma0 Omega gamma0 Xi and det != 0.
Validation validate(OperatorKind kind, const ComplexMatrix4& m, const KinematicPoint& k,
                    double tol = kValidationTol);

enum class ConversionDirection { to_omega, to_delta };

struct Conversion {
  ComplexMatrix4 matrix;
  Complex det_input{};
  Complex det_output{};
  double det_residual = 0.0;
  bool det_preserved = false;
};

/// to_delta: gamma0 Omega gamma0 Xi. to_omega: gamma0 Delta Xi gamma0.
Conversion omega_delta_convert(ConversionDirection dir, const ComplexMatrix4& m, const KinematicPoint& k);

struct DeltaBlocks {
  ComplexMatrix2 a;
  ComplexMatrix2 b;
  ComplexMatrix2 c;

  ComplexMatrix4 assemble() const;
  double b_hermiticity_residual() const { return max_abs_diff(b, b.adjoint()); }
  double c_hermiticity_residual() const { return max_abs_diff(c, c.adjoint()); }
  /// 8 (A) + 4 (B) + 4 (C).
  static constexpr int real_degrees_of_freedom = 16;
};

/// Samples the 16 real block parameters uniformly in [-1, 1] until det != 0.
ComplexMatrix4 random_delta(std::uint64_t seed);
ComplexMatrix4 random_delta(std::mt19937_64& rng);

/// Throws InvalidOperator (with the residual) when the matrix does not satisfy the delta constraint.
DeltaBlocks block_decompose(const ComplexMatrix4& delta, double tol = kValidationTol);

/// psi^dagger gamma0 Xi Omega. Throws InvalidOperator for an invalid Omega.
DualSpinor dual_of(const Spinor& psi, const ComplexMatrix4& omega, const KinematicPoint& k);

}  // namespace spinordual
