#include "qens/ensembles.hpp"

#include <cmath>
#include <limits>

#include "qens/errors.hpp"
#include "qens/linalg.hpp"

namespace qens {

const char* ensemble_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::HaarPure: return "pure";
    case EnsembleKind::Bures: return "bures";
    case EnsembleKind::HS: return "hs";
    case EnsembleKind::MA: return "ma";
    case EnsembleKind::Zyczkowski: return "zyczkowski";
  }
  return "?";
}

EnsembleKind ensemble_from_name(const std::string& name) {
  if (name == "pure") return EnsembleKind::HaarPure;
  if (name == "bures") return EnsembleKind::Bures;
  if (name == "hs") return EnsembleKind::HS;
  if (name == "ma") return EnsembleKind::MA;
  if (name == "zyczkowski") return EnsembleKind::Zyczkowski;
  throw DomainError("unknown ensemble '" + name + "' (expected ma|bures|hs|zyczkowski|pure)");
}

EnsembleSpec EnsembleSpec::haar_pure(std::size_t dim) { return {EnsembleKind::HaarPure, dim, 1, 1.0, 1.0}; }
EnsembleSpec EnsembleSpec::bures(std::size_t dim) { return {EnsembleKind::Bures, dim, 1, 1.0, 1.0}; }
EnsembleSpec EnsembleSpec::hs(std::size_t dim) { return {EnsembleKind::HS, dim, 1, 1.0, 1.0}; }
EnsembleSpec EnsembleSpec::ma(std::size_t dim, std::size_t k, double alpha) {
  return {EnsembleKind::MA, dim, k, alpha, 1.0};
}
EnsembleSpec EnsembleSpec::zyczkowski(std::size_t dim, double beta) {
  return {EnsembleKind::Zyczkowski, dim, 1, 1.0, beta};
}

void EnsembleSpec::validate() const {
  if (dim == 0) throw DomainError("ensemble spec: dim must be positive");
  if (kind == EnsembleKind::MA) {
    if (k == 0) throw DomainError("ensemble spec: MA requires K >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw DomainError("ensemble spec: MA requires alpha > 0");
  }
  if (kind == EnsembleKind::Zyczkowski && (!(beta > 0.0) || !std::isfinite(beta)))
    throw DomainError("ensemble spec: Zyczkowski requires beta > 0");
}

ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, SeededRng& rng) {
  if (rows == 0 || cols == 0) throw DimensionError("sample_ginibre: empty shape");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

ComplexMatrix haar_from_ginibre(const ComplexMatrix& ginibre) {
  QrResult qr = householder_qr(ginibre);
  const std::size_t n = ginibre.rows();
  ComplexMatrix u = std::move(qr.q);
  for (std::size_t j = 0; j < n; ++j) {
    const cdouble rjj = qr.r(j, j);
    const double mag = std::abs(rjj);
    const cdouble phase = (mag == 0.0) ? cdouble(1.0, 0.0) : rjj / mag;
    for (std::size_t i = 0; i < n; ++i) u(i, j) *= phase;
  }
  return u;
}

ComplexMatrix sample_haar_unitary(std::size_t dim, SeededRng& rng) {
  return haar_from_ginibre(sample_ginibre(dim, dim, rng));
}

PureState sample_haar_pure(std::size_t dim, SeededRng& rng) {
  if (dim == 0) throw DimensionError("sample_haar_pure: dim must be positive");
  PureState psi;
  psi.amplitudes.resize(dim);
  for (;;) {
    for (cdouble& a : psi.amplitudes) a = rng.complex_normal();
    const double n = psi.norm();
    if (n > 0.0) {
      for (cdouble& a : psi.amplitudes) a /= n;
      return psi;
    }
  }
}

std::vector<double> sample_dirichlet_symmetric(std::size_t k, double alpha, SeededRng& rng) {
  if (k == 0) throw DomainError("sample_dirichlet_symmetric: K must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("sample_dirichlet_symmetric: alpha must be positive");
  std::vector<double> x(k);
  for (int attempt = 0; attempt < 64; ++attempt) {
    double sum = 0.0;
    for (double& v : x) {
      v = rng.gamma(alpha);
      sum += v;
    }
    if (sum >= std::numeric_limits<double>::min()) {
      for (double& v : x) v /= sum;
      return x;
    }
    // All draws underflowed; redraw the whole vector.
  }
  throw DomainError("sample_dirichlet_symmetric: gamma draws underflow (alpha too small)");
}

DensityMatrix hs_state(const ComplexMatrix& ginibre) {
  ComplexMatrix rho = ginibre * ginibre.adjoint();
  hermitize(rho);
  rho *= cdouble(1.0 / rho.trace().real(), 0.0);
  return DensityMatrix::from_unchecked(std::move(rho));
}

DensityMatrix bures_state(const ComplexMatrix& ginibre, const ComplexMatrix& unitary) {
  const std::size_t n = ginibre.rows();
  ComplexMatrix mixer = ComplexMatrix::identity(n) + unitary;
  ComplexMatrix core = ginibre * ginibre.adjoint();
  ComplexMatrix rho = mixer * core * mixer.adjoint();
  hermitize(rho);
  rho *= cdouble(1.0 / rho.trace().real(), 0.0);
  return DensityMatrix::from_unchecked(std::move(rho));
}

DensityMatrix ma_state(const std::vector<double>& weights, const ComplexMatrix& vectors) {
  const std::size_t k = weights.size();
  const std::size_t d = vectors.cols();
  if (vectors.rows() != k || k == 0)
    throw DimensionError("ma_state: need one weight per state vector");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("ma_state: weights must be nonnegative");
    wsum += w;
  }
  if (!(wsum > 0.0)) throw DomainError("ma_state: weights sum to zero");

  ComplexMatrix rho(d, d);
  for (std::size_t s = 0; s < k; ++s) {
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm_sq += std::norm(vectors(s, i));
    if (!(norm_sq > 0.0)) throw DomainError("ma_state: zero state vector");
    const double scale = weights[s] / (wsum * norm_sq);
    for (std::size_t i = 0; i < d; ++i) {
      const cdouble vi = vectors(s, i);
      for (std::size_t j = 0; j < d; ++j)
        rho(i, j) += scale * vi * std::conj(vectors(s, j));
    }
  }
  hermitize(rho);
  rho *= cdouble(1.0 / rho.trace().real(), 0.0);
  return DensityMatrix::from_unchecked(std::move(rho));
}

DensityMatrix sample_hs(std::size_t dim, SeededRng& rng) {
  return hs_state(sample_ginibre(dim, dim, rng));
}

DensityMatrix sample_bures(std::size_t dim, SeededRng& rng) {
  const ComplexMatrix g = sample_ginibre(dim, dim, rng);
  const ComplexMatrix u = sample_haar_unitary(dim, rng);
  return bures_state(g, u);
}

DensityMatrix sample_ma(std::size_t dim, std::size_t k, double alpha, SeededRng& rng) {
  if (dim == 0) throw DomainError("sample_ma: dim must be positive");
  const std::vector<double> x = sample_dirichlet_symmetric(k, alpha, rng);
  ComplexMatrix vectors(k, dim);
  for (std::size_t s = 0; s < k; ++s) {
    const PureState psi = sample_haar_pure(dim, rng);
    for (std::size_t i = 0; i < dim; ++i) vectors(s, i) = psi.amplitudes[i];
  }
  return ma_state(x, vectors);
}

DensityMatrix sample_zyczkowski(std::size_t dim, double beta, SeededRng& rng) {
  if (dim == 0) throw DomainError("sample_zyczkowski: dim must be positive");
  const std::vector<double> x = sample_dirichlet_symmetric(dim, beta, rng);
  const ComplexMatrix u = sample_haar_unitary(dim, rng);
  ComplexMatrix rho(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      cdouble s = 0.0;
      for (std::size_t l = 0; l < dim; ++l) s += u(i, l) * x[l] * std::conj(u(j, l));
      rho(i, j) = s;
    }
  }
  hermitize(rho);
  rho *= cdouble(1.0 / rho.trace().real(), 0.0);
  return DensityMatrix::from_unchecked(std::move(rho));
}

DensityMatrix sample(const EnsembleSpec& spec, SeededRng& rng) {
  spec.validate();
  switch (spec.kind) {
    case EnsembleKind::HaarPure: return pure_density(sample_haar_pure(spec.dim, rng));
    case EnsembleKind::Bures: return sample_bures(spec.dim, rng);
    case EnsembleKind::HS: return sample_hs(spec.dim, rng);
    case EnsembleKind::MA: return sample_ma(spec.dim, spec.k, spec.alpha, rng);
    case EnsembleKind::Zyczkowski: return sample_zyczkowski(spec.dim, spec.beta, rng);
  }
  throw DomainError("sample: unknown ensemble kind");
}

}  // namespace qens
