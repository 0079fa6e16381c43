#include "lipuq/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipuq {

NormSpec NormSpec::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("NormSpec: exponent must be finite and >= 1");
  }
  return NormSpec(p, false);
}

NormSpec dual_exponent(const NormSpec& spec) {
  if (spec.is_inf()) return NormSpec::lp(1.0);
  const double p = spec.p();
  if (p == 1.0) return NormSpec::linf();
  if (p == 2.0) return NormSpec::l2();
  return NormSpec::lp(p / (p - 1.0));
}

double norm(const Vector& v, const NormSpec& spec) {
  if (spec.is_inf()) {
    double m = 0.0;
    for (const Complex& z : v) m = std::max(m, std::abs(z));
    return m;
  }
  const double p = spec.p();
  if (p == 1.0) {
    double s = 0.0;
    for (const Complex& z : v) s += std::abs(z);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
  }
  // General p, scaled by the max modulus to avoid overflow in the powers.
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const Complex& z : v) s += std::pow(std::abs(z) / m, p);
  return m * std::pow(s, 1.0 / p);
}

Complex inner(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner: dimension mismatch");
  }
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double dual_norm(const Vector& w, const NormSpec& spec) {
  return norm(w, dual_exponent(spec));
}

Vector add(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("add: dimension mismatch");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

Vector sub(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("sub: dimension mismatch");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

Vector scaled(const Vector& v, Complex c) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vector zero_vector(int dim) { return Vector(static_cast<std::size_t>(dim), Complex{0.0, 0.0}); }

bool all_finite(const Vector& v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

}  // namespace lipuq
