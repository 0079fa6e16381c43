#pragma once

#include "lipuq/space.hpp"

namespace lipuq {

// Dense square complex matrix, row-major. Dimensions here are tiny (2..8).
class Matrix {
 public:
  Matrix() : n_(0) {}
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0}) {}

  static Matrix identity(int n);

  int dim() const { return n_; }

  Complex& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Complex& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  Vector apply(const Vector& v) const;
  Matrix adjoint() const;
  Matrix multiply(const Matrix& other) const;
  Matrix scaled(Complex c) const;
  Matrix add(const Matrix& other) const;
  Matrix sub(const Matrix& other) const;

  // max_ij |a_ij - conj(a_ji)|
  double hermitian_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermitian_defect() <= tol; }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

 private:
  int n_;
  std::vector<Complex> a_;
};

}  // namespace lipuq
