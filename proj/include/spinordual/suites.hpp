#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinordual/dual_operators.hpp"
#include "spinordual/group_lab.hpp"
#include "spinordual/io.hpp"

namespace spinordual {

struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::optional<KinematicPoint> kinematics;
  std::optional<std::uint64_t> seed;
  Json payload;  // suite-specific results (tables, matrices, partitions)

  bool passed() const;
  /// Records `residual <= tolerance` as a check.
  void expect_le(std::string name, double residual, double tolerance, std::string detail = {});
  /// Records a check whose residual must exceed `threshold`.
  void expect_gt(std::string name, double residual, double threshold, std::string detail = {});
  void expect_true(std::string name, bool ok, std::string detail = {});
};

Json report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

struct RunOptions {
  KinematicPoint kinematics = KinematicPoint::make(1.0, 1.0, 0.7, 0.3);
  std::uint64_t seed = 42;
  int trials = 100;
  std::optional<double> tolerance;  // overrides the per-check default where one applies
};

enum class NamedGroup { GF, GXiDagger, GH };

std::optional<NamedGroup> parse_named_group(const std::string& s);

/// {I, G, F, FG} or {I, G, XiDagger, GXiDagger} from the defining expressions, in that order.
std::vector<NamedMatrix> named_group_elements(NamedGroup g, const KinematicPoint& k);

/// The expected Klein-four pattern over the given labels: [[e, a, b, c], [a, e, c, b], [b, c, e, a], [c, b, a, e]].
std::vector<std::vector<std::string>> klein_table(const std::vector<std::string>& labels);

SuiteReport run_verify_theorems(const RunOptions& opt);
SuiteReport run_table1(const RunOptions& opt);
/// For GH only the finiteness check is recorded; it fails once generation passes 64 elements.
SuiteReport run_cayley(NamedGroup group, const RunOptions& opt);
/// Throws std::invalid_argument for GH (not finite).
SuiteReport run_classify(NamedGroup group, const std::vector<DualSpinor>& duals, const RunOptions& opt,
                         ActionConvention conv = ActionConvention::right_composition);
SuiteReport run_embed(const RunOptions& opt);
SuiteReport run_spinor_spaces(const RunOptions& opt);
/// Throws InvalidOperator for an invalid Omega.
SuiteReport run_dual(const Spinor& psi, const ComplexMatrix4& omega, const RunOptions& opt);

}  // namespace spinordual
