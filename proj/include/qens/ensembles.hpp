#pragma once

#include <string>
#include <vector>

#include "qens/density.hpp"
#include "qens/rng.hpp"

namespace qens {

enum class EnsembleKind { HaarPure, Bures, HS, MA, Zyczkowski };

const char* ensemble_name(EnsembleKind kind);
EnsembleKind ensemble_from_name(const std::string& name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::HS;
  std::size_t dim = 2;
  std::size_t k = 1;     // MA only
  double alpha = 1.0;    // MA concentration
  double beta = 1.0;     // Zyczkowski concentration

  static EnsembleSpec haar_pure(std::size_t dim);
  static EnsembleSpec bures(std::size_t dim);
  static EnsembleSpec hs(std::size_t dim);
  static EnsembleSpec ma(std::size_t dim, std::size_t k, double alpha);
  static EnsembleSpec zyczkowski(std::size_t dim, double beta);

  void validate() const;  // throws DomainError
};

// Matrix with independent standard complex-normal entries (real and
// imaginary parts each N(0,1)), drawn in row-major order.
ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, SeededRng& rng);

// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
// phases folded into Q.
ComplexMatrix haar_from_ginibre(const ComplexMatrix& ginibre);
ComplexMatrix sample_haar_unitary(std::size_t dim, SeededRng& rng);

// Uniform (Fubini-Study) pure state: a normalized complex-normal vector,
// identical in law to a column of a Haar unitary.
PureState sample_haar_pure(std::size_t dim, SeededRng& rng);

// Symmetric Dirichlet(alpha) weights via normalized Gamma(alpha, 1) draws.
// Underflowing draws (possible for alpha below ~1e-3) trigger a full
// resample of the vector.
std::vector<double> sample_dirichlet_symmetric(std::size_t k, double alpha, SeededRng& rng);

// Deterministic state builders. The samplers below and the MCMC prior
// parameterizations in inference.hpp both run through these, so a chain
// coordinate vector and a direct sample with the same draws produce the
// same state bit for bit.
DensityMatrix hs_state(const ComplexMatrix& ginibre);
DensityMatrix bures_state(const ComplexMatrix& ginibre, const ComplexMatrix& unitary);
// rho = sum_k (u_k / sum_l u_l) v_k v_k^dag / |v_k|^2 with v_k the rows of
// `vectors` (k x dim).
DensityMatrix ma_state(const std::vector<double>& weights, const ComplexMatrix& vectors);

DensityMatrix sample_hs(std::size_t dim, SeededRng& rng);
DensityMatrix sample_bures(std::size_t dim, SeededRng& rng);
DensityMatrix sample_ma(std::size_t dim, std::size_t k, double alpha, SeededRng& rng);
DensityMatrix sample_zyczkowski(std::size_t dim, double beta, SeededRng& rng);

DensityMatrix sample(const EnsembleSpec& spec, SeededRng& rng);

}  // namespace qens
