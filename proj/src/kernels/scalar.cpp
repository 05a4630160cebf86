#include "qens/kernels.hpp"

// Reference kernels. Reductions keep four interleaved partial sums that are
// merged as (s0 + s2) + (s1 + s3), matching the AVX2 register layout and its
// horizontal reduction exactly; tails are accumulated after the merge, again
// exactly as the AVX2 variant does.

namespace qens::kernels {
namespace {

double sum_sq_scalar(const double* x, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += x[i] * x[i];
    s1 += x[i + 1] * x[i + 1];
    s2 += x[i + 2] * x[i + 2];
    s3 += x[i + 3] * x[i + 3];
  }
  double s = (s0 + s2) + (s1 + s3);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const double d0 = a[i] - b[i];
    const double d1 = a[i + 1] - b[i + 1];
    const double d2 = a[i + 2] - b[i + 2];
    const double d3 = a[i + 3] - b[i + 3];
    s0 += d0 * d0;
    s1 += d1 * d1;
    s2 += d2 * d2;
    s3 += d3 * d3;
  }
  double s = (s0 + s2) + (s1 + s3);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Single-record quadratic form; also serves as the tail loop of the AVX2
// variant, so the (i, j) evaluation order here is the contract.
inline double qform_one(std::size_t dim, std::size_t count, const double* psi_re,
                        const double* psi_im, const double* rho, std::size_t r) {
  double q = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double re_i = psi_re[i * count + r];
    const double im_i = psi_im[i * count + r];
    const double* row = rho + 2 * i * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      const double re_j = psi_re[j * count + r];
      const double im_j = psi_im[j * count + r];
      const double tre = re_i * re_j + im_i * im_j;
      const double tim = re_i * im_j - im_i * re_j;
      q += row[2 * j] * tre;
      q -= row[2 * j + 1] * tim;
    }
  }
  return q;
}

void born_qform_batch_scalar(std::size_t dim, std::size_t count, const double* psi_re,
                             const double* psi_im, const double* rho, double* out) {
  for (std::size_t r = 0; r < count; ++r)
    out[r] = qform_one(dim, count, psi_re, psi_im, rho, r);
}

constexpr Ops kScalarOps = {
    "scalar",
    &sum_sq_scalar,
    &sum_sq_diff_scalar,
    &born_qform_batch_scalar,
};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

namespace detail {
double qform_scalar_tail(std::size_t dim, std::size_t count, const double* psi_re,
                         const double* psi_im, const double* rho, std::size_t r) {
  return qform_one(dim, count, psi_re, psi_im, rho, r);
}
}  // namespace detail

}  // namespace qens::kernels
