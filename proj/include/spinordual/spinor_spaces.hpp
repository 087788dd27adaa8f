#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinordual/multivector.hpp"

namespace spinordual {

enum class ScalarField { complex, real };

/// Involutions usable as the adjoint involution of an inner product. The first four act on
/// coefficients; hermitian is M -> M^dagger and dirac is M -> gamma0 M^dagger gamma0 on the Weyl image.
enum class AdjointKind { grade, reversion, clifford_conj, complex_conj, hermitian, dirac };

Multivector apply_adjoint(AdjointKind kind, const Multivector& x);

inline constexpr double kIdempotentTol = 1e-12;

class Idempotent {
 public:
  /// Throws std::invalid_argument unless value * value = value within tol.
  static Idempotent make(const Multivector& value, double tol = kIdempotentTol);
  const Multivector& value() const { return value_; }

 private:
  explicit Idempotent(const Multivector& v) : value_(v) {}
  Multivector value_;
};

/// complex: (1 + gamma0)(1 + i e12) / 4, a rank-1 projector. real: (1 + gamma0) / 2.
Idempotent canonical_idempotent(ScalarField mode);

enum class IdealSide { left, right };

struct IdealBasis {
  IdealSide side = IdealSide::left;
  ScalarField field = ScalarField::complex;
  std::vector<Multivector> generators;

  std::size_t dimension() const { return generators.size(); }
};

/// Maximal independent subset of {e_I f} (left) or {f e_I} (right) over the chosen scalars.
IdealBasis ideal_basis(const Idempotent& f, IdealSide side, ScalarField field);

/// Distance of x from the span of the basis (least squares over the basis' scalars).
double span_residual(const IdealBasis& basis, const Multivector& x);

enum class DivisionRing { R, C, H, not_division_ring };

std::string to_string(DivisionRing r);

struct RingReport {
  DivisionRing ring = DivisionRing::not_division_ring;
  std::size_t dimension = 0;  // over the chosen scalars
  ScalarField field = ScalarField::complex;
  std::vector<Multivector> basis;
  std::string profile;
};

/// Basis of f Cl f and the ring it spans, identified by dimension and the square/anticommutation
/// profile of its imaginary units.
RingReport division_ring_identify(const Idempotent& f, ScalarField field);

struct InvolutionCheck {
  bool ok = false;
  double idempotent_residual = 0.0;  // |alpha(f) - h^-1 f h|
  double fixed_residual = 0.0;       // |alpha(h) - h|
};

inline constexpr double kInvolutionTol = 1e-10;

/// Checks alpha(f) = h^-1 f h and alpha(h) = h. Throws std::domain_error for non-invertible h.
InvolutionCheck verify_involution_conditions(AdjointKind alpha, const Multivector& h, const Idempotent& f,
                                             double tol = kInvolutionTol);

class BetaPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// h alpha(psi) phi f. Throws BetaPreconditionError naming the violated condition.
Multivector beta_inner_product(const Multivector& psi, const Multivector& phi, AdjointKind alpha,
                               const Multivector& h, const Idempotent& f, double tol = kInvolutionTol);

/// |f x f - x|.
double corner_residual(const Idempotent& f, const Multivector& x);

struct AdjointElement {
  Multivector h;
  bool canonical = false;
};

/// Searches the null space of h alpha(f) - f h = 0, alpha(h) - h = 0 for an invertible solution.
std::optional<AdjointElement> find_adjoint_h(AdjointKind alpha, const Idempotent& f, ScalarField field);

}  // namespace spinordual
