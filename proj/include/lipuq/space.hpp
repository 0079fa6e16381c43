#pragma once

#include <complex>
#include <vector>

#include "lipuq/errors.hpp"

namespace lipuq {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

// Which lp norm equips the space. p = infinity is a distinct tag, never a
// large float; p = 2 unlocks the inner product.
class NormSpec {
 public:
  static NormSpec lp(double p);
  static NormSpec linf() { return NormSpec(0.0, true); }
  static NormSpec l2() { return NormSpec(2.0, false); }

  bool is_inf() const { return inf_; }
  bool is_two() const { return !inf_ && p_ == 2.0; }
  // Finite exponent; only meaningful when !is_inf().
  double p() const { return p_; }

  friend bool operator==(const NormSpec& a, const NormSpec& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.p_ == b.p_);
  }

 private:
  NormSpec(double p, bool inf) : p_(p), inf_(inf) {}
  double p_;
  bool inf_;
};

// Holder conjugate: 1/p + 1/q = 1, with dual(1) = inf and dual(inf) = 1.
NormSpec dual_exponent(const NormSpec& spec);

double norm(const Vector& v, const NormSpec& spec);

// Linear in the first argument, conjugate-linear in the second.
Complex inner(const Vector& u, const Vector& v);

// Lip0 norm of the linear functional u -> sum_i u_i * conj(w_i): the Holder
// dual norm ||w||_q.
double dual_norm(const Vector& w, const NormSpec& spec);

// Elementwise helpers.
Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);
Vector scaled(const Vector& v, Complex c);
Vector zero_vector(int dim);
bool all_finite(const Vector& v);

}  // namespace lipuq
