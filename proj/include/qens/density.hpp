#pragma once

#include "qens/matrix.hpp"

namespace qens {

// Density-matrix contract tolerances.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kMinEigenvalueTol = -1e-9;

// A dim x dim Hermitian, PSD, unit-trace matrix. `validated` performs the
// full contract check (including an eigendecomposition for positivity) and
// is used at IO and conversion boundaries; samplers and estimators that
// produce valid states by construction use `from_unchecked`.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  static DensityMatrix validated(ComplexMatrix m);
  static DensityMatrix from_unchecked(ComplexMatrix m);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

DensityMatrix maximally_mixed(std::size_t dim);
DensityMatrix pure_density(const PureState& psi);

// Tr(rho^2), in [1/dim, 1] for a valid state. Checks Hermiticity and trace.
double purity(const DensityMatrix& rho);

// [Tr sqrt(sqrt(sigma) rho sqrt(sigma))]^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Tr[(A - B)^dag (A - B)], the squared Frobenius distance.
double frobenius_sq(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qens
