#include "qens/statistics.hpp"

#include <cmath>
#include <string>

#include "qens/errors.hpp"

namespace qens {

double mean_purity(const EnsembleSpec& spec) {
  spec.validate();
  const double d = static_cast<double>(spec.dim);
  switch (spec.kind) {
    case EnsembleKind::HaarPure:
      return 1.0;
    case EnsembleKind::Bures:
      return (5.0 * d * d + 1.0) / (2.0 * d * (d * d + 2.0));
    case EnsembleKind::HS:
      return 2.0 * d / (d * d + 1.0);
    case EnsembleKind::MA: {
      const double k = static_cast<double>(spec.k);
      const double a = spec.alpha;
      return (d + a * (d + k - 1.0)) / (d * (1.0 + a * k));
    }
    case EnsembleKind::Zyczkowski:
      return (1.0 + spec.beta) / (1.0 + d * spec.beta);
  }
  throw DomainError("mean_purity: unknown ensemble kind");
}

MatchingAlphas matching_alphas(std::size_t dim) {
  if (dim < 2) throw DomainError("matching_alphas: requires dim >= 2");
  const double d = static_cast<double>(dim);
  return {(2.0 * d - 1.0) / (4.0 + d), d};
}

MatchingBetas matching_betas(std::size_t dim, double alpha_ma) {
  if (dim < 2) throw DomainError("matching_betas: requires dim >= 2");
  if (!(alpha_ma > 0.0)) throw DomainError("matching_betas: alpha must be positive");
  const double d = static_cast<double>(dim);
  MatchingBetas out;
  out.beta_ma = alpha_ma * (d - 1.0) / ((alpha_ma + 1.0) * d);
  out.beta_bures = (d - 1.0) * (2.0 * d - 1.0) / (3.0 * d * (d + 1.0));
  out.beta_hs = (d - 1.0) / (d + 1.0);
  return out;
}

double solve_alpha_for_mean(std::size_t dim, std::size_t k, double target_mean) {
  if (dim == 0 || k == 0) throw DomainError("solve_alpha_for_mean: dim and K must be positive");
  const double d = static_cast<double>(dim);
  const double kk = static_cast<double>(k);
  const double lower = (d + kk - 1.0) / (d * kk);  // alpha -> infinity limit
  if (!(target_mean > lower) || !(target_mean < 1.0))
    throw DomainError("solve_alpha_for_mean: target mean " + std::to_string(target_mean) +
                      " outside achievable open interval (" + std::to_string(lower) + ", 1)");
  return d * (1.0 - target_mean) / (target_mean * d * kk - d - kk + 1.0);
}

double variance_bound_ma(std::size_t dim, std::size_t k, double alpha) {
  EnsembleSpec::ma(dim, k, alpha).validate();
  const double d = static_cast<double>(dim);
  const double kk = static_cast<double>(k);
  const double denom = d + alpha * d * kk;
  return alpha * (1.0 + alpha) * (d - 1.0) * (d - 1.0) * (kk - 1.0) / (denom * denom);
}

Histogram build_histogram(const std::vector<double>& values, double lo, double hi) {
  if (values.empty()) throw DomainError("build_histogram: empty input");
  if (!(lo < hi)) throw DomainError("build_histogram: need lo < hi");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.count = values.size();
  h.bins.assign(kHistogramBins, 0.0);
  const double scale = static_cast<double>(kHistogramBins) / (hi - lo);
  const long last = static_cast<long>(kHistogramBins) - 1;
  for (double v : values) {
    long idx = static_cast<long>(std::floor((v - lo) * scale));
    if (idx < 0) idx = 0;
    if (idx > last) idx = last;
    h.bins[static_cast<std::size_t>(idx)] += 1.0;
  }
  const double inv = 1.0 / static_cast<double>(h.count);
  for (double& b : h.bins) b *= inv;
  return h;
}

double bhattacharyya(const Histogram& h1, const Histogram& h2) {
  if (h1.bins.size() != h2.bins.size() || h1.lo != h2.lo || h1.hi != h2.hi)
    throw DimensionError("bhattacharyya: histograms have mismatched binning");
  double b = 0.0;
  for (std::size_t i = 0; i < h1.bins.size(); ++i) b += std::sqrt(h1.bins[i] * h2.bins[i]);
  return b;
}

}  // namespace qens
