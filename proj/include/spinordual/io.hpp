#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "spinordual/dual_operators.hpp"
#include "spinordual/group_lab.hpp"
#include "spinordual/multivector.hpp"
#include "spinordual/quaternionic.hpp"
#include "spinordual/spinor_spaces.hpp"

namespace spinordual {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complex scalars are [re, im]; matrices are row arrays of scalars.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

/// Object keyed by blade ("" scalar, "01", "0123", ...). Zero coefficients are omitted.
Json multivector_to_json(const Multivector& x);
Multivector multivector_from_json(const Json& j);
/// Exact mode: each coefficient is [[re_num, re_den], [im_num, im_den]].
Json exact_multivector_to_json(const ExactMultivector& x);
ExactMultivector exact_multivector_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix4& m);
ComplexMatrix4 matrix_from_json(const Json& j);
Json matrix2_to_json(const ComplexMatrix2& m);
Json real_matrix_to_json(const RealMatrix4& m);

/// Four [re, im] entries, or an object {"components": [...]}.
Json dual_to_json(const DualSpinor& d);
DualSpinor dual_from_json(const Json& j);
Spinor spinor_from_json(const Json& j);

Json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);
Json quat_matrix_to_json(const QuatMatrix2& a);
QuatMatrix2 quat_matrix_from_json(const Json& j);

Json cayley_to_json(const CayleyReport& r);
/// {"0": [indices], "1": [...]} keyed by class id.
Json orbit_partition_to_json(const OrbitPartition& p);
Json ideal_basis_to_json(const IdealBasis& b);
Json ring_report_to_json(const RingReport& r);

Json kinematics_to_json(const KinematicPoint& k);

/// Reads and parses a JSON file; throws FormatError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace spinordual
