#pragma once

#include <vector>

#include "qens/matrix.hpp"

namespace qens {

struct EigResult {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // matching columns, orthonormal
};

// Cyclic complex Jacobi diagonalization. The input must be Hermitian to
// 1e-10; the reconstruction V diag(lambda) V^dag matches the input to well
// under 1e-8 for dim <= 64.
EigResult hermitian_eig(const ComplexMatrix& m);

// Lower Cholesky factor L with L L^dag = a. Throws NumericalError on a
// non-positive pivot.
ComplexMatrix cholesky_lower(const ComplexMatrix& a);

struct QrResult {
  ComplexMatrix q;  // unitary
  ComplexMatrix r;  // upper triangular
};

// Householder QR of a square complex matrix.
QrResult householder_qr(const ComplexMatrix& m);

// V sqrt(clamp(lambda, 0)) V^dag of a Hermitian matrix.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& hermitian);

}  // namespace qens
