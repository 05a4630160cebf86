#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qens/density.hpp"

namespace qens {

// Real parameter vector of the lower-triangular Cholesky factor xi of a
// density matrix, flattened in a fixed order: the diagonal occupies
// tau_0..tau_{D-1}, then each subdiagonal in turn contributes (re, im)
// pairs walking down. For D = 4 this places tau_4+i tau_5 at xi_10,
// tau_6+i tau_7 at xi_21, ..., tau_14+i tau_15 at xi_30.
struct TauVector {
  std::size_t dim = 0;
  std::vector<double> values;  // length dim^2
};

// Strictly-lower entries (row, col) in the flattening order above.
std::vector<std::pair<std::size_t, std::size_t>> tau_lower_order(std::size_t dim);

// xi xi^dag / Tr(xi xi^dag); any nonzero tau yields a valid state.
DensityMatrix tau_to_rho(const TauVector& tau);

// Cholesky parameters of rho, with a 1e-12 diagonal jitter retry when the
// factorization hits a rank-deficient pivot.
TauVector rho_to_tau(const DensityMatrix& rho);

}  // namespace qens
