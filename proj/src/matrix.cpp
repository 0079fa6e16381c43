#include "lipuq/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace lipuq {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Complex{1.0, 0.0};
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw DimensionMismatch("Matrix::apply: dimension mismatch");
  }
  Vector r(static_cast<std::size_t>(n_), Complex{0.0, 0.0});
  for (int i = 0; i < n_; ++i) {
    Complex s{0.0, 0.0};
    for (int j = 0; j < n_; ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

Matrix Matrix::adjoint() const {
  Matrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (other.n_ != n_) throw DimensionMismatch("Matrix::multiply: dimension mismatch");
  Matrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Complex aik = at(i, k);
      for (int j = 0; j < n_; ++j) r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

Matrix Matrix::scaled(Complex c) const {
  Matrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

Matrix Matrix::add(const Matrix& other) const {
  if (other.n_ != n_) throw DimensionMismatch("Matrix::add: dimension mismatch");
  Matrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + other.a_[i];
  return r;
}

Matrix Matrix::sub(const Matrix& other) const {
  if (other.n_ != n_) throw DimensionMismatch("Matrix::sub: dimension mismatch");
  Matrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - other.a_[i];
  return r;
}

double Matrix::hermitian_defect() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
  return d;
}

}  // namespace lipuq
