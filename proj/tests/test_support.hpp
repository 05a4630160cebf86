#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "qens/ensembles.hpp"
#include "qens/matrix.hpp"
#include "qens/rng.hpp"

namespace qens::test {

inline ComplexMatrix random_hermitian(std::size_t dim, SeededRng& rng) {
  ComplexMatrix g = sample_ginibre(dim, dim, rng);
  ComplexMatrix h = g + g.adjoint();
  h *= cdouble(0.5, 0.0);
  hermitize(h);
  return h;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

inline MeanSe mean_and_se(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

inline double sample_variance(const std::vector<double>& values) {
  const MeanSe ms = mean_and_se(values);
  return ms.se * ms.se * static_cast<double>(values.size());
}

// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

}  // namespace qens::test
