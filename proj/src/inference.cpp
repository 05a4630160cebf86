#include "qens/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qens/errors.hpp"
#include "qens/linalg.hpp"

namespace qens {

namespace {

ComplexMatrix matrix_from_span(const cdouble* data, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m.data()[i] = data[i];
  return m;
}

// Orthonormal traceless Hermitian basis (generalized Gell-Mann matrices).
std::vector<ComplexMatrix> traceless_hermitian_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d - 1);
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexMatrix sym(d, d);
      sym(i, j) = inv_sqrt2;
      sym(j, i) = inv_sqrt2;
      basis.push_back(std::move(sym));
      ComplexMatrix asym(d, d);
      asym(i, j) = cdouble(0.0, -inv_sqrt2);
      asym(j, i) = cdouble(0.0, inv_sqrt2);
      basis.push_back(std::move(asym));
    }
  }
  for (std::size_t l = 1; l < d; ++l) {
    ComplexMatrix diag(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (std::size_t i = 0; i < l; ++i) diag(i, i) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(std::move(diag));
  }
  return basis;
}

// Solves the SPD system n x = c in place via real Cholesky; throws
// DomainError on a rank-deficient matrix.
std::vector<double> solve_spd(std::vector<double> n, std::vector<double> c, std::size_t d) {
  double max_diag = 0.0;
  for (std::size_t i = 0; i < d; ++i) max_diag = std::max(max_diag, n[i * d + i]);
  const double pivot_floor = 1e-12 * std::max(max_diag, 1.0);
  for (std::size_t j = 0; j < d; ++j) {
    double pivot = n[j * d + j];
    for (std::size_t k = 0; k < j; ++k) pivot -= n[j * d + k] * n[j * d + k];
    if (!(pivot > pivot_floor))
      throw DomainError("mle_linear_inversion: design matrix rank-deficient "
                        "(measurement set not informationally complete)");
    const double ljj = std::sqrt(pivot);
    n[j * d + j] = ljj;
    for (std::size_t i = j + 1; i < d; ++i) {
      double s = n[i * d + j];
      for (std::size_t k = 0; k < j; ++k) s -= n[i * d + k] * n[j * d + k];
      n[i * d + j] = s / ljj;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    double s = c[i];
    for (std::size_t k = 0; k < i; ++k) s -= n[i * d + k] * c[k];
    c[i] = s / n[i * d + i];
  }
  for (std::size_t i = d; i-- > 0;) {
    double s = c[i];
    for (std::size_t k = i + 1; k < d; ++k) s -= n[k * d + i] * c[k];
    c[i] = s / n[i * d + i];
  }
  return c;
}

}  // namespace

const char* prior_name(PriorKind kind) {
  switch (kind) {
    case PriorKind::Bures: return "bures";
    case PriorKind::HS: return "hs";
    case PriorKind::MA: return "ma";
  }
  return "?";
}

PriorKind prior_from_name(const std::string& name) {
  if (name == "bures") return PriorKind::Bures;
  if (name == "hs") return PriorKind::HS;
  if (name == "ma") return PriorKind::MA;
  throw DomainError("unknown prior '" + name + "' (expected bures|hs|ma)");
}

PriorSpec PriorSpec::bures(std::size_t dim) { return {PriorKind::Bures, dim, 1, 0.4}; }
PriorSpec PriorSpec::hs(std::size_t dim) { return {PriorKind::HS, dim, 1, 0.4}; }
PriorSpec PriorSpec::ma(std::size_t dim, std::size_t k, double alpha) {
  return {PriorKind::MA, dim, k, alpha};
}

void PriorSpec::validate() const {
  if (dim == 0) throw DomainError("prior spec: dim must be positive");
  if (kind == PriorKind::MA) {
    if (k == 0) throw DomainError("prior spec: MA requires K >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw DomainError("prior spec: MA requires alpha > 0");
  }
}

ChainState sample_prior_state(const PriorSpec& prior, SeededRng& rng) {
  prior.validate();
  const std::size_t d = prior.dim;
  ChainState state;
  switch (prior.kind) {
    case PriorKind::Bures:
      state.gaussian.resize(2 * d * d);
      break;
    case PriorKind::HS:
      state.gaussian.resize(d * d);
      break;
    case PriorKind::MA: {
      state.gamma_u.resize(prior.k);
      for (double& u : state.gamma_u) u = rng.gamma(prior.alpha);
      state.gaussian.resize(prior.k * d);
      break;
    }
  }
  for (cdouble& w : state.gaussian) w = rng.complex_normal();
  return state;
}

DensityMatrix state_to_rho(const PriorSpec& prior, const ChainState& state) {
  prior.validate();
  const std::size_t d = prior.dim;
  switch (prior.kind) {
    case PriorKind::Bures: {
      if (state.gaussian.size() != 2 * d * d || !state.gamma_u.empty())
        throw DimensionError("state_to_rho: Bures state layout mismatch");
      const ComplexMatrix g = matrix_from_span(state.gaussian.data(), d, d);
      const ComplexMatrix seed = matrix_from_span(state.gaussian.data() + d * d, d, d);
      return bures_state(g, haar_from_ginibre(seed));
    }
    case PriorKind::HS: {
      if (state.gaussian.size() != d * d || !state.gamma_u.empty())
        throw DimensionError("state_to_rho: HS state layout mismatch");
      return hs_state(matrix_from_span(state.gaussian.data(), d, d));
    }
    case PriorKind::MA: {
      if (state.gaussian.size() != prior.k * d || state.gamma_u.size() != prior.k)
        throw DimensionError("state_to_rho: MA state layout mismatch");
      return ma_state(state.gamma_u, matrix_from_span(state.gaussian.data(), prior.k, d));
    }
  }
  throw DomainError("state_to_rho: unknown prior kind");
}

Proposal pcn_propose(const PriorSpec& prior, const ChainState& state, double pcn_step,
                     SeededRng& rng) {
  if (!(pcn_step >= 0.0) || !(pcn_step <= 1.0))
    throw DomainError("pcn_propose: step must lie in [0, 1]");
  Proposal prop;
  prop.state.gaussian.resize(state.gaussian.size());
  prop.state.gamma_u.resize(state.gamma_u.size());

  const double keep = std::sqrt(1.0 - pcn_step * pcn_step);
  for (std::size_t i = 0; i < state.gaussian.size(); ++i) {
    const cdouble xi = rng.complex_normal();
    prop.state.gaussian[i] = keep * state.gaussian[i] + pcn_step * xi;
  }
  for (std::size_t i = 0; i < state.gamma_u.size(); ++i) {
    const double u = state.gamma_u[i];
    const double u_new = u * std::exp(pcn_step * rng.normal());
    prop.state.gamma_u[i] = u_new;
    // Gamma(alpha, 1) prior ratio times the log-normal proposal asymmetry
    // q(u|u')/q(u'|u) = u'/u collapses to alpha*log(u'/u) - (u' - u).
    prop.log_correction += prior.alpha * std::log(u_new / u) - (u_new - u);
  }
  return prop;
}

BmeResult run_bme(const MeasurementDataset& dataset, const PriorSpec& prior,
                  const ChainConfig& config) {
  prior.validate();
  if (!dataset.records.empty() && dataset.dim() != prior.dim)
    throw DimensionError("run_bme: dataset and prior dimensions differ");
  if (config.kept_samples == 0 || config.thinning == 0)
    throw DomainError("run_bme: kept_samples and thinning must be positive");

  SeededRng rng(config.seed, config.stream);
  const PackedEigenstates packed = PackedEigenstates::pack(dataset);
  std::vector<double> scratch;

  ChainState current = sample_prior_state(prior, rng);
  DensityMatrix rho_current = state_to_rho(prior, current);
  double loglik_current = log_likelihood(packed, rho_current, scratch);

  const std::size_t burn = config.effective_burn_in();
  const std::size_t total = config.total_iterations();
  double step = config.pcn_step;
  std::size_t accepted_total = 0;
  std::size_t accepted_window = 0;
  std::size_t window = 0;
  constexpr std::size_t kAdaptWindow = 64;
  constexpr double kTargetAcceptance = 0.23;

  ComplexMatrix accum(prior.dim, prior.dim);
  BmeDiagnostics diag;
  diag.kept_purities.reserve(config.kept_samples);

  for (std::size_t iter = 0; iter < total; ++iter) {
    Proposal prop = pcn_propose(prior, current, step, rng);
    DensityMatrix rho_prop = state_to_rho(prior, prop.state);
    const double loglik_prop = log_likelihood(packed, rho_prop, scratch);

    bool accept;
    if (std::isinf(loglik_prop) && loglik_prop < 0.0) {
      accept = false;
    } else if (std::isinf(loglik_current) && loglik_current < 0.0) {
      accept = true;
    } else {
      const double log_ratio = (loglik_prop - loglik_current) + prop.log_correction;
      accept = log_ratio >= 0.0 || std::log(rng.uniform()) < log_ratio;
    }
    if (accept) {
      current = std::move(prop.state);
      rho_current = std::move(rho_prop);
      loglik_current = loglik_prop;
      ++accepted_total;
      ++accepted_window;
    }

    if (config.adapt_step && iter < burn && ++window == kAdaptWindow) {
      const double rate = static_cast<double>(accepted_window) / kAdaptWindow;
      step = std::clamp(step * std::exp(rate - kTargetAcceptance), 1e-3, 1.0);
      accepted_window = 0;
      window = 0;
    }

    if (iter >= burn && (iter - burn + 1) % config.thinning == 0) {
      accum += rho_current.matrix();
      diag.kept_purities.push_back(purity(rho_current));
    }
  }

  accum *= cdouble(1.0 / static_cast<double>(config.kept_samples), 0.0);
  hermitize(accum);
  accum *= cdouble(1.0 / accum.trace().real(), 0.0);

  diag.acceptance_rate = static_cast<double>(accepted_total) / static_cast<double>(total);
  diag.any_accepted = accepted_total > 0;
  diag.final_step = step;
  return {DensityMatrix::from_unchecked(std::move(accum)), std::move(diag)};
}

std::vector<ProjectorDatum> to_projector_data(const SettingCounts& counts) {
  if (counts.shots == 0) throw DomainError("to_projector_data: zero shots");
  std::vector<ProjectorDatum> data;
  data.reserve(counts.n_settings() * counts.dim());
  for (std::size_t s = 0; s < counts.n_settings(); ++s) {
    const std::string setting = setting_string(s, counts.n_qubits);
    for (std::size_t o = 0; o < counts.dim(); ++o) {
      ProjectorDatum datum;
      datum.projector = projector(pauli_eigenstate(setting, outcome_string(o, counts.n_qubits)));
      datum.frequency =
          static_cast<double>(counts.counts[s][o]) / static_cast<double>(counts.shots);
      data.push_back(std::move(datum));
    }
  }
  return data;
}

ComplexMatrix mle_linear_inversion(const std::vector<ProjectorDatum>& data, std::size_t dim) {
  if (dim == 0) throw DimensionError("mle_linear_inversion: dim must be positive");
  if (data.empty()) throw DomainError("mle_linear_inversion: no measurement data");
  const std::vector<ComplexMatrix> basis = traceless_hermitian_basis(dim);
  const std::size_t p = basis.size();
  const double inv_dim = 1.0 / static_cast<double>(dim);

  // Normal equations for rho = I/dim + sum_k theta_k B_k.
  std::vector<double> gram(p * p, 0.0);
  std::vector<double> rhs(p, 0.0);
  std::vector<double> row(p);
  for (const ProjectorDatum& datum : data) {
    if (!datum.projector.square() || datum.projector.rows() != dim)
      throw DimensionError("mle_linear_inversion: projector dimension mismatch");
    for (std::size_t k = 0; k < p; ++k) {
      cdouble t = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) t += datum.projector(i, j) * basis[k](j, i);
      row[k] = t.real();
    }
    const double b = datum.frequency - datum.projector.trace().real() * inv_dim;
    for (std::size_t k = 0; k < p; ++k) {
      rhs[k] += row[k] * b;
      for (std::size_t l = k; l < p; ++l) gram[k * p + l] += row[k] * row[l];
    }
  }
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t l = 0; l < k; ++l) gram[k * p + l] = gram[l * p + k];

  const std::vector<double> theta = solve_spd(std::move(gram), std::move(rhs), p);

  ComplexMatrix rho(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) rho(i, i) = inv_dim;
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) rho(i, j) += theta[k] * basis[k](i, j);
  }
  hermitize(rho);
  return rho;
}

ComplexMatrix mle_linear_inversion(const SettingCounts& counts) {
  return mle_linear_inversion(to_projector_data(counts), counts.dim());
}

DensityMatrix smolin_project(const ComplexMatrix& hermitian_unit_trace) {
  if (!hermitian_unit_trace.square())
    throw DimensionError("smolin_project: matrix must be square");
  if (hermiticity_error(hermitian_unit_trace) > kHermitianTol)
    throw ValidityError("smolin_project: input is not Hermitian");
  if (std::abs(hermitian_unit_trace.trace().real() - 1.0) > 1e-8)
    throw ValidityError("smolin_project: input trace differs from one");

  EigResult eig = hermitian_eig(hermitian_unit_trace);
  const std::size_t n = eig.eigenvalues.size();
  // Work on the ascending sequence; eigenvalues arrive descending.
  std::vector<double> lambda(eig.eigenvalues.rbegin(), eig.eigenvalues.rend());

  std::size_t zeroed = 0;
  while (zeroed < n && lambda[zeroed] < 0.0) {
    const double deficit = lambda[zeroed];
    lambda[zeroed] = 0.0;
    const double share = deficit / static_cast<double>(n - zeroed - 1);
    for (std::size_t i = zeroed + 1; i < n; ++i) lambda[i] += share;
    ++zeroed;
  }

  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = lambda[n - 1 - j];  // map back to descending order
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= v;
  }
  ComplexMatrix rho = scaled * eig.eigenvectors.adjoint();
  hermitize(rho);
  rho *= cdouble(1.0 / rho.trace().real(), 0.0);
  return DensityMatrix::from_unchecked(std::move(rho));
}

double mse_report(const std::vector<std::pair<DensityMatrix, DensityMatrix>>& pairs) {
  if (pairs.empty()) throw DomainError("mse_report: empty estimate list");
  double sum = 0.0;
  for (const auto& [estimate, truth] : pairs) sum += frobenius_sq(estimate, truth);
  return sum / static_cast<double>(pairs.size());
}

}  // namespace qens
