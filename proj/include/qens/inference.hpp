#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qens/ensembles.hpp"
#include "qens/measurement.hpp"

namespace qens {

enum class PriorKind { Bures, HS, MA };

const char* prior_name(PriorKind kind);
PriorKind prior_from_name(const std::string& name);

struct PriorSpec {
  PriorKind kind = PriorKind::Bures;
  std::size_t dim = 2;
  std::size_t k = 1;    // MA only
  double alpha = 0.4;   // MA only

  static PriorSpec bures(std::size_t dim);
  static PriorSpec hs(std::size_t dim);
  static PriorSpec ma(std::size_t dim, std::size_t k, double alpha);

  void validate() const;
};

// Unnormalized chain coordinates. Gaussian coordinates hold, in draw order:
// Bures: the Ginibre matrix G (dim^2, row-major) then the Ginibre seed of the
// Haar unitary (dim^2); HS: G only; MA: the K state vectors v_k (K x dim,
// row-major). MA additionally carries K positive gamma coordinates u_k.
struct ChainState {
  std::vector<cdouble> gaussian;
  std::vector<double> gamma_u;
};

// Draws a state from the prior, consuming rng in the same order as the
// direct samplers, so an HS chain state from seed s maps to exactly
// sample_hs(dim, rng(s)).
ChainState sample_prior_state(const PriorSpec& prior, SeededRng& rng);

DensityMatrix state_to_rho(const PriorSpec& prior, const ChainState& state);

struct Proposal {
  ChainState state;
  // log of the prior x proposal-density correction entering the acceptance
  // ratio; zero for purely Gaussian coordinates (pCN preserves the prior).
  double log_correction = 0.0;
};

// Gaussian coordinates move by the prior-preserving pCN step
// w' = sqrt(1 - b^2) w + b xi. Gamma coordinates move multiplicatively,
// u' = u exp(b eta), with the Gamma(alpha,1)-prior and log-normal-proposal
// correction reported in log_correction.
Proposal pcn_propose(const PriorSpec& prior, const ChainState& state, double pcn_step,
                     SeededRng& rng);

struct ChainConfig {
  double pcn_step = 0.1;
  std::size_t kept_samples = 1 << 10;
  std::size_t thinning = 1 << 8;
  // Prepended iterations before any sample is kept; defaults to a tenth of
  // kept * thinning when left at npos.
  std::size_t burn_in = npos;
  // Tune pcn_step toward ~23% acceptance during burn-in only; the step is
  // frozen afterwards so the kept chain satisfies detailed balance.
  bool adapt_step = true;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t effective_burn_in() const {
    return burn_in == npos ? kept_samples * thinning / 10 : burn_in;
  }
  std::size_t total_iterations() const {
    return effective_burn_in() + kept_samples * thinning;
  }
};

struct BmeDiagnostics {
  double acceptance_rate = 0.0;
  bool any_accepted = false;  // false flags a non-mixing chain
  double final_step = 0.0;
  std::vector<double> kept_purities;
};

struct BmeResult {
  DensityMatrix rho;
  BmeDiagnostics diagnostics;
};

// Metropolis-Hastings over the prior parameterization with likelihood-ratio
// acceptance; the estimate is the mean state over the kept thinned samples.
BmeResult run_bme(const MeasurementDataset& dataset, const PriorSpec& prior,
                  const ChainConfig& config);

struct ProjectorDatum {
  ComplexMatrix projector;  // Hermitian measurement operator
  double frequency = 0.0;   // observed relative frequency
};

std::vector<ProjectorDatum> to_projector_data(const SettingCounts& counts);

// Least-squares fit of a Hermitian unit-trace matrix to Tr(rho P_i) = f_i.
// The result may have negative eigenvalues. Throws DomainError when the
// projector set is not informationally complete.
ComplexMatrix mle_linear_inversion(const std::vector<ProjectorDatum>& data, std::size_t dim);
ComplexMatrix mle_linear_inversion(const SettingCounts& counts);

// Eigenvalue truncate-and-redistribute projection onto PSD unit-trace
// matrices; the Frobenius-nearest such matrix to the input.
DensityMatrix smolin_project(const ComplexMatrix& hermitian_unit_trace);

// Mean squared Frobenius distance over (estimate, ground truth) pairs.
double mse_report(const std::vector<std::pair<DensityMatrix, DensityMatrix>>& pairs);

}  // namespace qens
