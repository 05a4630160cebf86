// AVX2 variants of the dispatch kernels. Compiled with -mavx2 only; the
// dispatcher checks CPU support before handing these out. Multiplies and
// adds stay separate (no FMA) so every lane reproduces the scalar reference
// bit for bit.

#if defined(__AVX2__)

#include <immintrin.h>

#include "qens/kernels.hpp"

namespace qens::kernels {

namespace detail {
double qform_scalar_tail(std::size_t dim, std::size_t count, const double* psi_re,
                         const double* psi_im, const double* rho, std::size_t r);
}

namespace {

// (v0 + v2) + (v1 + v3), the merge order mirrored by the scalar kernels.
inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

double sum_sq_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

void born_qform_batch_avx2(std::size_t dim, std::size_t count, const double* psi_re,
                           const double* psi_im, const double* rho, double* out) {
  std::size_t r = 0;
  for (; r + 4 <= count; r += 4) {
    __m256d q = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dim; ++i) {
      const __m256d re_i = _mm256_loadu_pd(psi_re + i * count + r);
      const __m256d im_i = _mm256_loadu_pd(psi_im + i * count + r);
      const double* row = rho + 2 * i * dim;
      for (std::size_t j = 0; j < dim; ++j) {
        const __m256d re_j = _mm256_loadu_pd(psi_re + j * count + r);
        const __m256d im_j = _mm256_loadu_pd(psi_im + j * count + r);
        const __m256d tre =
            _mm256_add_pd(_mm256_mul_pd(re_i, re_j), _mm256_mul_pd(im_i, im_j));
        const __m256d tim =
            _mm256_sub_pd(_mm256_mul_pd(re_i, im_j), _mm256_mul_pd(im_i, re_j));
        q = _mm256_add_pd(q, _mm256_mul_pd(_mm256_set1_pd(row[2 * j]), tre));
        q = _mm256_sub_pd(q, _mm256_mul_pd(_mm256_set1_pd(row[2 * j + 1]), tim));
      }
    }
    _mm256_storeu_pd(out + r, q);
  }
  for (; r < count; ++r)
    out[r] = detail::qform_scalar_tail(dim, count, psi_re, psi_im, rho, r);
}

constexpr Ops kAvx2Ops = {
    "avx2",
    &sum_sq_avx2,
    &sum_sq_diff_avx2,
    &born_qform_batch_avx2,
};

}  // namespace

const Ops* avx2_ops() {
  return __builtin_cpu_supports("avx2") ? &kAvx2Ops : nullptr;
}

}  // namespace qens::kernels

#endif  // defined(__AVX2__)
