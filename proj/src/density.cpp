#include "qens/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qens/errors.hpp"
#include "qens/kernels.hpp"
#include "qens/linalg.hpp"

namespace qens {

namespace {

void check_cheap(const ComplexMatrix& m, const char* who) {
  if (!m.square()) throw ValidityError(std::string(who) + ": matrix must be square");
  if (!m.all_finite()) throw ValidityError(std::string(who) + ": non-finite entries");
  if (hermiticity_error(m) > kHermitianTol)
    throw ValidityError(std::string(who) + ": not Hermitian within tolerance");
  if (std::abs(m.trace() - cdouble(1.0, 0.0)) > kTraceTol)
    throw ValidityError(std::string(who) + ": trace differs from one");
}

}  // namespace

DensityMatrix DensityMatrix::validated(ComplexMatrix m) {
  check_cheap(m, "DensityMatrix");
  const EigResult eig = hermitian_eig(m);
  if (eig.eigenvalues.back() < kMinEigenvalueTol)
    throw ValidityError("DensityMatrix: negative eigenvalue beyond tolerance");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_unchecked(ComplexMatrix m) {
  if (!m.square()) throw ValidityError("DensityMatrix: matrix must be square");
  return DensityMatrix(std::move(m));
}

DensityMatrix maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DimensionError("maximally_mixed: dim must be positive");
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix::from_unchecked(std::move(m));
}

DensityMatrix pure_density(const PureState& psi) {
  if (psi.dim() == 0) throw DimensionError("pure_density: empty state");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw ValidityError("pure_density: state is not unit norm");
  ComplexMatrix m = projector(psi);
  hermitize(m);
  return DensityMatrix::from_unchecked(std::move(m));
}

double purity(const DensityMatrix& rho) {
  check_cheap(rho.matrix(), "purity");
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return kernels::active_ops().sum_sq(rho.matrix().reals(), 2 * rho.matrix().size());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("fidelity: dimension mismatch");
  check_cheap(rho.matrix(), "fidelity");
  check_cheap(sigma.matrix(), "fidelity");

  const ComplexMatrix root = matrix_sqrt_psd(sigma.matrix());
  ComplexMatrix inner = root * rho.matrix() * root;
  hermitize(inner);
  const EigResult eig = hermitian_eig(inner);
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) sum += std::sqrt(std::max(lambda, 0.0));
  return std::clamp(sum * sum, 0.0, 1.0);
}

double frobenius_sq(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("frobenius_sq: dimension mismatch");
  return kernels::active_ops().sum_sq_diff(a.matrix().reals(), b.matrix().reals(),
                                           2 * a.matrix().size());
}

}  // namespace qens
