#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spinordual/dual_operators.hpp"
#include "spinordual/matrix.hpp"
#include "spinordual/multivector.hpp"

namespace spinordual {

inline constexpr double kCommuteTol = 1e-9;
inline constexpr double kDedupResolution = 1e-8;
inline constexpr std::size_t kDefaultGroupCap = 1024;

struct NamedMatrix {
  std::string label;
  ComplexMatrix4 matrix;
};

class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(std::vector<ComplexMatrix4> elements, std::vector<std::string> labels);

  std::size_t order() const { return elements_.size(); }
  const std::vector<ComplexMatrix4>& elements() const { return elements_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// table()[i][j] is the index of elements()[i] * elements()[j].
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t identity_index() const { return identity_; }
  std::size_t inverse_index(std::size_t i) const { return inverses_.at(i); }

  /// Index of the element matching m entrywise within tol, if any.
  std::optional<std::size_t> find(const ComplexMatrix4& m, double tol = kCommuteTol) const;

  /// Reorders and relabels the elements to follow `named`; every named matrix must match one
  /// element and the sizes must agree. Throws std::invalid_argument otherwise.
  FiniteMatrixGroup relabeled(const std::vector<NamedMatrix>& named, double tol = kCommuteTol) const;

 private:
  std::vector<ComplexMatrix4> elements_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverses_;
  std::size_t identity_ = 0;
};

struct ClosureReport {
  bool abelian = false;
  double worst_commutator = 0.0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  /// Largest Omega-constraint residual over all pairwise products.
  double worst_product_residual = 0.0;
  std::string diagnostic;
};

/// Throws InvalidOperator if any candidate fails validate(omega, ., k).
ClosureReport check_abelian_closure(const std::vector<ComplexMatrix4>& candidates, const KinematicPoint& k,
                                    double tol = kCommuteTol);

struct CapExceeded {
  std::size_t cap = 0;
  std::size_t elements_found = 0;
};

using GenerationResult = std::variant<FiniteMatrixGroup, CapExceeded>;

/// Closes the generators under multiplication. Element labels are words in the generator labels
/// ("I" for the identity). Throws std::invalid_argument for a non-invertible generator.
GenerationResult generate_group(const std::vector<NamedMatrix>& generators, std::size_t cap = kDefaultGroupCap,
                                double resolution = kDedupResolution);
GenerationResult generate_group(const std::vector<ComplexMatrix4>& generators, std::size_t cap = kDefaultGroupCap,
                                double resolution = kDedupResolution);

struct CayleyReport {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> table;  // labels of row * column
  std::string name;                             // "trivial", "Z2", "K4", "Z4", ..., or "order-n"
  std::vector<std::size_t> order_profile;       // element orders, in element order
  bool abelian = false;
};

/// Element orders, identification up to order 8 by order profile.
CayleyReport cayley_and_identify(const FiniteMatrixGroup& g);

std::string cayley_csv(const CayleyReport& r);

enum class ActionConvention { right_composition, transpose };

DualSpinor act(const DualSpinor& dual, const ComplexMatrix4& g, ActionConvention conv);

struct OrbitPartition {
  std::vector<std::vector<std::size_t>> classes;  // sorted indices, classes ordered by first index
  std::vector<std::size_t> representatives;       // smallest index of each class
};

/// Partition of `duals` into orbits of the group action; two duals share a class when some element
/// maps one onto the other within tol.
OrbitPartition orbit_partition(const FiniteMatrixGroup& g, const std::vector<DualSpinor>& duals, double tol,
                               ActionConvention conv = ActionConvention::right_composition);

/// The full orbit of one dual (distinct images within tol).
std::vector<DualSpinor> orbit(const FiniteMatrixGroup& g, const DualSpinor& dual, double tol,
                              ActionConvention conv = ActionConvention::right_composition);

inline constexpr double kMembershipTol = 1e-10;

struct MembershipRecord {
  bool invertible = false;
  bool even = false;
  bool in_gamma = false;
  bool in_pin = false;
  bool in_spin = false;
  bool in_spin_plus = false;
  Complex norm{};  // scalar part of x rev(x)
};

MembershipRecord membership(const Multivector& x, double tol = kMembershipTol);

/// Lambda with alpha(x) gamma_nu x^-1 = Lambda^mu_nu gamma_mu (alpha = grade involution).
/// Throws std::invalid_argument when x is not in Pin(1,3).
RealMatrix4 twisted_adjoint(const Multivector& x);

/// exp of a pure bivector through the matrix image. Throws std::invalid_argument otherwise.
Multivector exp_bivector(const Multivector& bivector);

const RealMatrix4& minkowski_metric();

}  // namespace spinordual
