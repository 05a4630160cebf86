#pragma once

#include <cstddef>

// Data-parallel inner loops, provided as scalar reference kernels plus an
// AVX2 variant selected at runtime. Both variants perform the same floating
// point operations in the same order (no FMA contraction, lane-mirrored
// reductions), so results are bit-identical whichever one the dispatcher
// picks. Equivalence is enforced in tests/test_kernels.cpp.

namespace qens::kernels {

struct Ops {
  const char* name;

  // sum_i x[i]^2
  double (*sum_sq)(const double* x, std::size_t n);

  // sum_i (a[i] - b[i])^2
  double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);

  // Born-rule quadratic forms Re <psi_r| rho |psi_r> for a batch of state
  // vectors, vectorized across the batch index r. The state vectors are
  // stored transposed and split: psi_re[i * count + r] = Re(psi_r[i]), and
  // likewise psi_im. rho is dim x dim row-major interleaved (re, im) pairs
  // and must be Hermitian so the forms are real. out[r] receives the form.
  void (*born_qform_batch)(std::size_t dim, std::size_t count,
                           const double* psi_re, const double* psi_im,
                           const double* rho, double* out);
};

const Ops& scalar_ops();

// Null when the binary was built without AVX2 codegen or the CPU lacks it.
const Ops* avx2_ops();

// Resolved once per process: AVX2 when available, otherwise scalar. The
// QENS_KERNELS environment variable ("scalar" or "avx2") forces a variant;
// an unavailable forced variant falls back to scalar.
const Ops& active_ops();

}  // namespace qens::kernels
