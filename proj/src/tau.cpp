#include "qens/tau.hpp"

#include <cmath>

#include "qens/errors.hpp"
#include "qens/linalg.hpp"

namespace qens {

namespace {
constexpr double kCholeskyJitter = 1e-12;
}

std::vector<std::pair<std::size_t, std::size_t>> tau_lower_order(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  order.reserve(dim * (dim - 1) / 2);
  for (std::size_t sub = 1; sub < dim; ++sub)
    for (std::size_t col = 0; col + sub < dim; ++col) order.emplace_back(col + sub, col);
  return order;
}

DensityMatrix tau_to_rho(const TauVector& tau) {
  if (tau.dim == 0 || tau.values.size() != tau.dim * tau.dim)
    throw DimensionError("tau_to_rho: need dim^2 parameters");
  bool any = false;
  for (double v : tau.values) {
    if (!std::isfinite(v)) throw DomainError("tau_to_rho: non-finite parameter");
    if (v != 0.0) any = true;
  }
  if (!any) throw DomainError("tau_to_rho: tau vector is identically zero");

  const std::size_t d = tau.dim;
  ComplexMatrix xi(d, d);
  for (std::size_t i = 0; i < d; ++i) xi(i, i) = tau.values[i];
  std::size_t slot = d;
  for (const auto& [row, col] : tau_lower_order(d)) {
    xi(row, col) = cdouble(tau.values[slot], tau.values[slot + 1]);
    slot += 2;
  }

  ComplexMatrix rho = xi * xi.adjoint();
  hermitize(rho);
  const double tr = rho.trace().real();
  rho *= cdouble(1.0 / tr, 0.0);
  return DensityMatrix::from_unchecked(std::move(rho));
}

TauVector rho_to_tau(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  ComplexMatrix xi;
  try {
    xi = cholesky_lower(rho.matrix());
  } catch (const NumericalError&) {
    ComplexMatrix jittered = rho.matrix();
    for (std::size_t i = 0; i < d; ++i) jittered(i, i) += kCholeskyJitter;
    try {
      xi = cholesky_lower(jittered);
    } catch (const NumericalError&) {
      throw NumericalError("rho_to_tau: Cholesky factorization failed after jitter");
    }
  }

  TauVector tau;
  tau.dim = d;
  tau.values.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) tau.values[i] = xi(i, i).real();
  std::size_t slot = d;
  for (const auto& [row, col] : tau_lower_order(d)) {
    tau.values[slot] = xi(row, col).real();
    tau.values[slot + 1] = xi(row, col).imag();
    slot += 2;
  }
  return tau;
}

}  // namespace qens
