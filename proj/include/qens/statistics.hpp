#pragma once

#include <vector>

#include "qens/ensembles.hpp"

namespace qens {

inline constexpr std::size_t kHistogramBins = 100;

// Closed-form mean purity E[Tr rho^2] of an ensemble.
double mean_purity(const EnsembleSpec& spec);

struct MatchingAlphas {
  double alpha_bures;  // (2D - 1) / (4 + D)
  double alpha_hs;     // D
};

// MA concentrations (K = D) whose mean purity equals the Bures and HS ones.
MatchingAlphas matching_alphas(std::size_t dim);

struct MatchingBetas {
  double beta_ma;     // alpha (D-1) / ((alpha+1) D), for the K = D MA ensemble
  double beta_bures;  // (D-1)(2D-1) / (3D(D+1))
  double beta_hs;     // (D-1) / (D+1)
};

MatchingBetas matching_betas(std::size_t dim, double alpha_ma = 1.0);

// Inverts the MA mean purity for alpha. The achievable open interval is
// ((D+K-1)/(DK), 1); targets outside it throw DomainError naming it.
double solve_alpha_for_mean(std::size_t dim, std::size_t k, double target_mean);

// Bhatia-Davis upper bound on Var[Tr rho^2] for the MA ensemble.
double variance_bound_ma(std::size_t dim, std::size_t k, double alpha);

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> bins;  // kHistogramBins entries summing to one
  std::size_t count = 0;     // raw samples

  double bin_width() const { return (hi - lo) / static_cast<double>(bins.size()); }
};

// 100-bin normalized histogram; out-of-range values clamp to the edge bins
// and v = hi lands in the last bin.
Histogram build_histogram(const std::vector<double>& values, double lo, double hi);

// sum_l sqrt(h1_l h2_l); requires identical binning.
double bhattacharyya(const Histogram& h1, const Histogram& h2);

}  // namespace qens
