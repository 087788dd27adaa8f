#include "spinordual/multivector.hpp"

#include <algorithm>

namespace spinordual {

std::string blade_key(Blade b) {
  std::string key;
  for (int mu = 0; mu < 4; ++mu)
    if (b & (1u << mu)) key.push_back(static_cast<char>('0' + mu));
  return key;
}

Blade parse_blade_key(const std::string& key) {
  unsigned mask = 0;
  int last = -1;
  for (char ch : key) {
    const int mu = ch - '0';
    if (mu < 0 || mu > 3) throw std::invalid_argument("blade key digit out of range: '" + key + "'");
    if (mu <= last) throw std::invalid_argument("blade key must be strictly ascending: '" + key + "'");
    mask |= 1u << mu;
    last = mu;
  }
  return static_cast<Blade>(mask);
}

Multivector pseudoscalar() { return Multivector::blade(0b1111); }

Multivector gamma5_chiral() { return Multivector::blade(0b1111, Complex{0.0, -1.0}); }

double max_abs_diff(const Multivector& a, const Multivector& b) {
  double m = 0.0;
  for (unsigned i = 0; i < kBladeCount; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const Multivector& a) {
  double m = 0.0;
  for (const auto& c : a.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double max_imag(const Multivector& a) {
  double m = 0.0;
  for (const auto& c : a.coeffs()) m = std::max(m, std::abs(c.imag()));
  return m;
}

bool is_real(const Multivector& a, double tol) { return max_imag(a) <= tol; }

Multivector real_part(const Multivector& a) {
  Multivector r;
  for (unsigned i = 0; i < kBladeCount; ++i) r[i] = a[i].real();
  return r;
}

}  // namespace spinordual
