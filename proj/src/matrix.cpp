#include "qens/matrix.hpp"

#include <cmath>

#include "qens/errors.hpp"

namespace qens {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cdouble(0.0, 0.0)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cdouble ComplexMatrix::trace() const {
  if (!square()) throw DimensionError("trace: matrix must be square");
  cdouble t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (const cdouble& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble scale) {
  for (cdouble& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(cdouble scale, ComplexMatrix m) {
  m *= scale;
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double hermiticity_error(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("hermiticity_error: matrix must be square");
  double e = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      e = std::max(e, std::abs(m(i, j) - std::conj(m(j, i))));
  return e;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) s += std::norm(m.data()[i]);
  return std::sqrt(s);
}

void hermitize(ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m(i, i) = cdouble(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const cdouble avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
}

double PureState::norm() const {
  double s = 0.0;
  for (const cdouble& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

cdouble inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner_product: dimension mismatch");
  cdouble s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

ComplexMatrix projector(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      p(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  return p;
}

}  // namespace qens
