#include "qens/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qens/errors.hpp"

namespace qens {

namespace {

constexpr double kHermitianInputTol = 1e-10;

double offdiagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("hermitian_eig: matrix must be square");
  if (!m.all_finite()) throw ValidityError("hermitian_eig: non-finite entries");
  if (hermiticity_error(m) > kHermitianInputTol)
    throw ValidityError("hermitian_eig: input is not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  hermitize(a);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius_norm(a);
  const double tol = 1e-15 * scale;
  bool converged = (n == 1) || (scale == 0.0);

  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    if (offdiagonal_norm(a) <= tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const cdouble f = apq / r;  // unit-modulus phase of a_pq

        const double tau = (app - aqq) / (2.0 * r);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- W^dag A W and V <- V W with the plane rotation
        // W_pp = c, W_pq = -s f, W_qp = s conj(f), W_qq = c.
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble akp = a(k, p);
          const cdouble akq = a(k, q);
          a(k, p) = c * akp + s * std::conj(f) * akq;
          a(k, q) = -s * f * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble apk = a(p, k);
          const cdouble aqk = a(q, k);
          a(p, k) = c * apk + s * f * aqk;
          a(q, k) = -s * std::conj(f) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble vkp = v(k, p);
          const cdouble vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(f) * vkq;
          v(k, q) = -s * f * vkp + c * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cdouble(a(p, p).real(), 0.0);
        a(q, q) = cdouble(a(q, q).real(), 0.0);
      }
    }
  }
  if (!converged && offdiagonal_norm(a) > tol * 1e3)
    throw NumericalError("hermitian_eig: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

ComplexMatrix cholesky_lower(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("cholesky_lower: matrix must be square");
  const std::size_t n = a.rows();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) throw NumericalError("cholesky_lower: non-positive pivot");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cdouble s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

QrResult householder_qr(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("householder_qr: matrix must be square");
  const std::size_t n = m.rows();
  ComplexMatrix r = m;
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<cdouble> v(n);

  for (std::size_t k = 0; k < n; ++k) {
    double beta_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) beta_sq += std::norm(r(i, k));
    const double beta = std::sqrt(beta_sq);
    if (beta == 0.0) continue;

    const cdouble x0 = r(k, k);
    const double x0abs = std::abs(x0);
    const cdouble phase = (x0abs == 0.0) ? cdouble(1.0, 0.0) : x0 / x0abs;
    const cdouble alpha = -phase * beta;

    double vnorm_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      v[i] = r(i, k);
      if (i == k) v[i] -= alpha;
      vnorm_sq += std::norm(v[i]);
    }
    if (vnorm_sq == 0.0) continue;
    const double tau = 2.0 / vnorm_sq;

    // R <- (I - tau v v^dag) R on the trailing columns.
    for (std::size_t j = k; j < n; ++j) {
      cdouble w = 0.0;
      for (std::size_t i = k; i < n; ++i) w += std::conj(v[i]) * r(i, j);
      w *= tau;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= w * v[i];
    }
    // Q <- Q (I - tau v v^dag); reflectors are Hermitian, so the product of
    // their adjoints in reverse is accumulated by right-multiplication.
    for (std::size_t i = 0; i < n; ++i) {
      cdouble w = 0.0;
      for (std::size_t j = k; j < n; ++j) w += q(i, j) * v[j];
      w *= tau;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= w * std::conj(v[j]);
    }
    r(k, k) = alpha;
    for (std::size_t i = k + 1; i < n; ++i) r(i, k) = 0.0;
  }
  return {std::move(q), std::move(r)};
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& hermitian) {
  const EigResult eig = hermitian_eig(hermitian);
  const std::size_t n = hermitian.rows();
  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t j = 0; j < n; ++j) {
    const double root = std::sqrt(std::max(eig.eigenvalues[j], 0.0));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= root;
  }
  ComplexMatrix out = scaled * eig.eigenvectors.adjoint();
  hermitize(out);
  return out;
}

}  // namespace qens
