#include "spinordual/io.hpp"

#include <fstream>
#include <sstream>

namespace spinordual {
namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw FormatError(what);
}

Json rational_to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Rational rational_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(),
          "exact scalar must be an integer pair [num, den]");
  const auto den = j[1].get<std::int64_t>();
  require(den != 0, "exact scalar has zero denominator");
  return {j[0].get<std::int64_t>(), den};
}

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(), "complex scalar must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json multivector_to_json(const Multivector& x) {
  Json j = Json::object();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const auto b = static_cast<Blade>(i);
    if (x[b] != Complex{}) j[blade_key(b)] = complex_to_json(x[b]);
  }
  return j;
}

Multivector multivector_from_json(const Json& j) {
  require(j.is_object(), "multivector must be an object keyed by blade");
  Multivector x;
  for (const auto& [key, value] : j.items()) {
    Blade b = 0;
    try {
      b = parse_blade_key(key);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    x[b] = complex_from_json(value);
  }
  return x;
}

Json exact_multivector_to_json(const ExactMultivector& x) {
  Json j = Json::object();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const auto b = static_cast<Blade>(i);
    if (x[b] != ExactComplex{}) j[blade_key(b)] = Json::array({rational_to_json(x[b].re), rational_to_json(x[b].im)});
  }
  return j;
}

ExactMultivector exact_multivector_from_json(const Json& j) {
  require(j.is_object(), "multivector must be an object keyed by blade");
  ExactMultivector x;
  for (const auto& [key, value] : j.items()) {
    require(value.is_array() && value.size() == 2, "exact coefficient must be [[num, den], [num, den]]");
    Blade b = 0;
    try {
      b = parse_blade_key(key);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    x[b] = ExactComplex(rational_from_json(value[0]), rational_from_json(value[1]));
  }
  return x;
}

Json matrix_to_json(const ComplexMatrix4& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(complex_to_json(m(i, c)));
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix4 matrix_from_json(const Json& j) {
  require(j.is_array() && j.size() == 4, "matrix must be a 4 x 4 array of [re, im]");
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    require(j[i].is_array() && j[i].size() == 4, "matrix must be a 4 x 4 array of [re, im]");
    for (std::size_t c = 0; c < 4; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

Json matrix2_to_json(const ComplexMatrix2& m) {
  return Json::array({Json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                      Json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

Json real_matrix_to_json(const RealMatrix4& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 4; ++i) rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2), m(i, 3)}));
  return rows;
}

Json dual_to_json(const DualSpinor& d) {
  Json j = Json::array();
  for (const auto& z : d.components) j.push_back(complex_to_json(z));
  return j;
}

namespace {
std::array<Complex, 4> four_components(const Json& j) {
  const Json& arr = j.is_object() && j.contains("components") ? j["components"] : j;
  require(arr.is_array() && arr.size() == 4, "spinor must have four [re, im] components");
  std::array<Complex, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) c[i] = complex_from_json(arr[i]);
  return c;
}
}  // namespace

DualSpinor dual_from_json(const Json& j) { return DualSpinor{four_components(j)}; }
Spinor spinor_from_json(const Json& j) { return Spinor{four_components(j)}; }

Json quaternion_to_json(const Quaternion& q) { return Json::array({q.a, q.b, q.c, q.d}); }

Quaternion quaternion_from_json(const Json& j) {
  require(j.is_array() && j.size() == 4, "quaternion must be [a, b, c, d]");
  for (const auto& x : j) require(x.is_number(), "quaternion must be [a, b, c, d]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json quat_matrix_to_json(const QuatMatrix2& a) {
  return Json::array({Json::array({quaternion_to_json(a(0, 0)), quaternion_to_json(a(0, 1))}),
                      Json::array({quaternion_to_json(a(1, 0)), quaternion_to_json(a(1, 1))})});
}

QuatMatrix2 quat_matrix_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() &&
              j[1].size() == 2,
          "quaternionic matrix must be a 2 x 2 array of quaternions");
  QuatMatrix2 a;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) a(r, c) = quaternion_from_json(j[r][c]);
  return a;
}

Json cayley_to_json(const CayleyReport& r) {
  Json j;
  j["name"] = r.name;
  j["order"] = r.labels.size();
  j["abelian"] = r.abelian;
  j["labels"] = r.labels;
  j["table"] = r.table;
  j["element_orders"] = r.order_profile;
  return j;
}

Json orbit_partition_to_json(const OrbitPartition& p) {
  Json j = Json::object();
  for (std::size_t c = 0; c < p.classes.size(); ++c) j[std::to_string(c)] = p.classes[c];
  return j;
}

Json ideal_basis_to_json(const IdealBasis& b) {
  Json j;
  j["side"] = b.side == IdealSide::left ? "left" : "right";
  j["scalars"] = b.field == ScalarField::complex ? "complex" : "real";
  j["dimension"] = b.dimension();
  Json gens = Json::array();
  for (const auto& g : b.generators) gens.push_back(multivector_to_json(g));
  j["generators"] = gens;
  return j;
}

Json ring_report_to_json(const RingReport& r) {
  Json j;
  j["ring"] = to_string(r.ring);
  j["scalars"] = r.field == ScalarField::complex ? "complex" : "real";
  j["dimension"] = r.dimension;
  j["profile"] = r.profile;
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(multivector_to_json(b));
  j["basis"] = basis;
  return j;
}

Json kinematics_to_json(const KinematicPoint& k) {
  Json j;
  j["mass"] = k.mass();
  j["momentum"] = k.momentum();
  j["theta"] = k.theta();
  j["phi"] = k.phi();
  j["energy"] = k.energy();
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace spinordual
