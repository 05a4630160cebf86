#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qens {

using cdouble = std::complex<double>;

// Dense row-major complex matrix. Everything in this library is small and
// dense (dim <= 64), so storage is a flat vector and products are naive.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  cdouble operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  cdouble* data() { return data_.data(); }
  const cdouble* data() const { return data_.data(); }

  // View as interleaved (re, im) doubles; layout guaranteed by std::complex.
  const double* reals() const { return reinterpret_cast<const double*>(data_.data()); }

  ComplexMatrix adjoint() const;
  cdouble trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cdouble scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble scale, ComplexMatrix m);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// max_ij |m_ij - conj(m_ji)|
double hermiticity_error(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
// Mirrors the strict lower triangle onto the upper one and zeroes the
// imaginary parts of the diagonal.
void hermitize(ComplexMatrix& m);

struct PureState {
  std::vector<cdouble> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

cdouble inner_product(const PureState& a, const PureState& b);  // <a|b>
ComplexMatrix projector(const PureState& psi);                  // |psi><psi|

}  // namespace qens
