#include "spinordual/group_lab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spinordual/linalg.hpp"
#include "spinordual/matrix_rep.hpp"

namespace spinordual {
namespace {

bool matches(const ComplexMatrix4& a, const ComplexMatrix4& b, double tol) {
  return max_abs_diff(a, b) <= tol * std::max(1.0, max_abs(a));
}

using MatrixKey = std::array<double, 32>;

MatrixKey canonical_key(const ComplexMatrix4& m, double resolution) {
  MatrixKey key{};
  for (std::size_t i = 0; i < 16; ++i) {
    key[2 * i] = std::round(m.data[i].real() / resolution) + 0.0;
    key[2 * i + 1] = std::round(m.data[i].imag() / resolution) + 0.0;
  }
  return key;
}

std::string compose_label(const std::string& a, const std::string& b) {
  if (a == "I") return b;
  if (b == "I") return a;
  return a + b;
}

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<ComplexMatrix4> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.empty()) throw std::invalid_argument("a group needs at least the identity");
  if (labels_.size() != elements_.size()) throw std::invalid_argument("one label per element is required");
  const auto id = ComplexMatrix4::identity();
  std::size_t identities = 0;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (matches(elements_[i], id, kCommuteTol)) {
      identity_ = i;
      ++identities;
    }
  if (identities != 1) throw std::invalid_argument("element list must contain exactly one identity");

  const std::size_t n = elements_.size();
  table_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto idx = find(elements_[i] * elements_[j]);
      if (!idx) throw std::invalid_argument("element list is not closed: " + labels_[i] + " * " + labels_[j]);
      table_[i][j] = *idx;
    }
  inverses_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j] == identity_) inverses_[i] = j;
    if (inverses_[i] == n) throw std::invalid_argument("element " + labels_[i] + " has no inverse in the list");
  }
}

std::optional<std::size_t> FiniteMatrixGroup::find(const ComplexMatrix4& m, double tol) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (matches(elements_[i], m, tol)) return i;
  return std::nullopt;
}

FiniteMatrixGroup FiniteMatrixGroup::relabeled(const std::vector<NamedMatrix>& named, double tol) const {
  if (named.size() != order()) throw std::invalid_argument("relabeling must name every element");
  std::vector<ComplexMatrix4> elems;
  std::vector<std::string> labels;
  std::vector<bool> used(order(), false);
  for (const auto& nm : named) {
    auto idx = find(nm.matrix, tol);
    if (!idx || used[*idx]) throw std::invalid_argument("named matrix " + nm.label + " does not match a group element");
    used[*idx] = true;
    elems.push_back(elements_[*idx]);
    labels.push_back(nm.label);
  }
  return {std::move(elems), std::move(labels)};
}

ClosureReport check_abelian_closure(const std::vector<ComplexMatrix4>& candidates, const KinematicPoint& k,
                                    double tol) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto v = validate(OperatorKind::omega, candidates[i], k);
    if (!v.ok) throw InvalidOperator("candidate " + std::to_string(i) + " is not a valid Omega: " + v.diagnostic);
  }
  ClosureReport r;
  const auto x = xi(k);
  const auto& g0 = gamma0();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i; j < candidates.size(); ++j) {
      const double c = max_abs(commutator(candidates[i], candidates[j]));
      if (c > r.worst_commutator) {
        r.worst_commutator = c;
        r.worst_pair = {i, j};
      }
      const auto prod = candidates[i] * candidates[j];
      r.worst_product_residual =
          std::max(r.worst_product_residual, max_abs_diff(prod.adjoint(), x * g0 * prod * g0 * x));
    }
  r.abelian = r.worst_commutator <= tol;
  std::ostringstream os;
  os << "worst commutator " << r.worst_commutator << " at pair (" << r.worst_pair.first << ", "
     << r.worst_pair.second << "); worst product residual " << r.worst_product_residual;
  r.diagnostic = os.str();
  return r;
}

GenerationResult generate_group(const std::vector<NamedMatrix>& generators, std::size_t cap, double resolution) {
  for (const auto& g : generators)
    if (std::abs(determinant(g.matrix)) <= kDetTol)
      throw std::invalid_argument("generator " + g.label + " is not invertible");

  std::vector<ComplexMatrix4> elems{ComplexMatrix4::identity()};
  std::vector<std::string> labels{"I"};
  std::map<MatrixKey, std::size_t> index{{canonical_key(elems[0], resolution), 0}};
  auto lookup = [&](const ComplexMatrix4& m) -> std::optional<std::size_t> {
    if (auto it = index.find(canonical_key(m, resolution)); it != index.end()) return it->second;
    // Rounding boundaries can split equal matrices; fall back to a tolerance scan.
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (matches(elems[i], m, resolution)) return i;
    return std::nullopt;
  };

  std::deque<std::size_t> work{0};
  while (!work.empty()) {
    const std::size_t e = work.front();
    work.pop_front();
    for (const auto& g : generators) {
      auto prod = elems[e] * g.matrix;
      if (lookup(prod)) continue;
      if (elems.size() == cap) return CapExceeded{cap, elems.size() + 1};
      index.emplace(canonical_key(prod, resolution), elems.size());
      labels.push_back(compose_label(labels[e], g.label));
      elems.push_back(std::move(prod));
      work.push_back(elems.size() - 1);
    }
  }
  return FiniteMatrixGroup(std::move(elems), std::move(labels));
}

GenerationResult generate_group(const std::vector<ComplexMatrix4>& generators, std::size_t cap, double resolution) {
  std::vector<NamedMatrix> named;
  for (std::size_t i = 0; i < generators.size(); ++i) named.push_back({"g" + std::to_string(i), generators[i]});
  return generate_group(named, cap, resolution);
}

CayleyReport cayley_and_identify(const FiniteMatrixGroup& g) {
  CayleyReport r;
  const std::size_t n = g.order();
  r.labels = g.labels();
  r.table.assign(n, std::vector<std::string>(n));
  r.abelian = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.table[i][j] = g.labels()[g.table()[i][j]];
      if (g.table()[i][j] != g.table()[j][i]) r.abelian = false;
    }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ord = 1, cur = i;
    while (cur != g.identity_index()) {
      cur = g.table()[cur][i];
      ++ord;
    }
    r.order_profile.push_back(ord);
  }
  const std::size_t max_order = *std::max_element(r.order_profile.begin(), r.order_profile.end());
  const auto involutions = static_cast<std::size_t>(std::count(r.order_profile.begin(), r.order_profile.end(), 2));
  switch (n) {
    case 1: r.name = "trivial"; break;
    case 2: r.name = "Z2"; break;
    case 3: r.name = "Z3"; break;
    case 4: r.name = max_order == 4 ? "Z4" : "K4"; break;
    case 5: r.name = "Z5"; break;
    case 6: r.name = r.abelian ? "Z6" : "S3"; break;
    case 7: r.name = "Z7"; break;
    case 8:
      if (r.abelian)
        r.name = max_order == 8 ? "Z8" : (involutions == 7 ? "Z2xZ2xZ2" : "Z4xZ2");
      else
        r.name = involutions == 5 ? "D4" : "Q8";
      break;
    default: r.name = "order-" + std::to_string(n); break;
  }
  return r;
}

std::string cayley_csv(const CayleyReport& r) {
  std::ostringstream os;
  os << "";
  for (const auto& l : r.labels) os << ',' << l;
  os << '\n';
  for (std::size_t i = 0; i < r.labels.size(); ++i) {
    os << r.labels[i];
    for (const auto& cell : r.table[i]) os << ',' << cell;
    os << '\n';
  }
  return os.str();
}

DualSpinor act(const DualSpinor& dual, const ComplexMatrix4& g, ActionConvention conv) {
  return dual * (conv == ActionConvention::right_composition ? g : g.transpose());
}

OrbitPartition orbit_partition(const FiniteMatrixGroup& g, const std::vector<DualSpinor>& duals, double tol,
                               ActionConvention conv) {
  const std::size_t n = duals.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& elem : g.elements()) {
      const auto image = act(duals[i], elem, conv);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && max_abs_diff(image, duals[j]) <= tol) {
          const auto a = root(i), b = root(j);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
  OrbitPartition p;
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = root(i);
    auto [it, inserted] = class_of_root.emplace(r, p.classes.size());
    if (inserted) {
      p.classes.emplace_back();
      p.representatives.push_back(i);
    }
    p.classes[it->second].push_back(i);
  }
  return p;
}

std::vector<DualSpinor> orbit(const FiniteMatrixGroup& g, const DualSpinor& dual, double tol,
                              ActionConvention conv) {
  std::vector<DualSpinor> out;
  for (const auto& elem : g.elements()) {
    const auto image = act(dual, elem, conv);
    const bool seen =
        std::any_of(out.begin(), out.end(), [&](const DualSpinor& d) { return max_abs_diff(d, image) <= tol; });
    if (!seen) out.push_back(image);
  }
  return out;
}

MembershipRecord membership(const Multivector& x, double tol) {
  MembershipRecord rec;
  rec.even = true;
  for (int k : {1, 3})
    if (max_abs(x.grade_part(k)) > tol) rec.even = false;
  const auto reversed = x.involute(InvolutionKind::reversion);
  const auto n = x * reversed;
  rec.norm = n[0];
  rec.invertible = std::abs(determinant(x)) > kDetTol;
  if (!rec.invertible) return rec;

  const auto inv = inverse(x);
  rec.in_gamma = is_real(x, tol);
  for (int mu = 0; mu < 4 && rec.in_gamma; ++mu) {
    const auto y = x * gamma(mu) * inv;
    const auto vec = y.grade_part(1);
    if (max_abs_diff(y, vec) > tol || max_imag(vec) > tol) rec.in_gamma = false;
  }
  const auto one = Multivector::scalar(1.0);
  const bool plus_one = max_abs_diff(n, one) <= tol;
  const bool minus_one = max_abs_diff(n, -one) <= tol;
  rec.in_pin = rec.in_gamma && (plus_one || minus_one);
  rec.in_spin = rec.in_pin && rec.even;
  rec.in_spin_plus = rec.in_spin && plus_one;
  return rec;
}

RealMatrix4 twisted_adjoint(const Multivector& x) {
  if (!membership(x).in_pin) throw std::invalid_argument("twisted_adjoint requires an element of Pin(1,3)");
  const auto inv = inverse(x);
  const auto hat = x.involute(InvolutionKind::grade);
  RealMatrix4 lambda;
  for (int nu = 0; nu < 4; ++nu) {
    const auto y = hat * gamma(nu) * inv;
    for (int mu = 0; mu < 4; ++mu) lambda(mu, nu) = y[static_cast<Blade>(1u << mu)].real();
  }
  return lambda;
}

Multivector exp_bivector(const Multivector& bivector) {
  if (max_abs_diff(bivector, bivector.grade_part(2)) > 1e-12)
    throw std::invalid_argument("exp_bivector requires a pure grade-2 element");
  return from_matrix(matrix_exp(to_matrix(bivector)));
}

const RealMatrix4& minkowski_metric() {
  static const RealMatrix4 g = RealMatrix4::diagonal({1.0, -1.0, -1.0, -1.0});
  return g;
}

}  // namespace spinordual
