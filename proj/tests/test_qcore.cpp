#include <doctest.h>

#include <cmath>

#include "qens/density.hpp"
#include "qens/ensembles.hpp"
#include "qens/errors.hpp"
#include "qens/linalg.hpp"
#include "qens/tau.hpp"
#include "test_support.hpp"

using namespace qens;

namespace {

DensityMatrix diag_state(std::initializer_list<double> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (double v : entries) m(i, i) = v, ++i;
  return DensityMatrix::from_unchecked(std::move(m));
}

PureState basis_state(std::size_t dim, std::size_t index) {
  PureState psi;
  psi.amplitudes.assign(dim, 0.0);
  psi.amplitudes[index] = 1.0;
  return psi;
}

}  // namespace

TEST_CASE("purity of reference states") {
  for (std::size_t d : {std::size_t(2), std::size_t(4), std::size_t(7)})
    CHECK(purity(maximally_mixed(d)) == doctest::Approx(1.0 / double(d)).epsilon(1e-12));
  CHECK(purity(pure_density(basis_state(4, 0))) == doctest::Approx(1.0));
  // Hand-computed oracle: eigenvalues 0.75 and 0.25, sum of squares 0.625.
  CHECK(purity(diag_state({0.75, 0.25})) == doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("purity rejects invalid inputs") {
  ComplexMatrix bad(2, 2);
  bad(0, 0) = 0.5;
  bad(0, 1) = cdouble(0.0, 0.3);
  bad(1, 0) = cdouble(0.0, 0.3);  // not conjugate-symmetric
  bad(1, 1) = 0.5;
  CHECK_THROWS_AS(purity(DensityMatrix::from_unchecked(bad)), ValidityError);
  CHECK_THROWS_AS(purity(DensityMatrix::from_unchecked(ComplexMatrix::identity(2))),
                  ValidityError);  // trace two
}

TEST_CASE("purity stays in [1/D, 1] on random samples") {
  SeededRng rng(11, 0);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = sample_bures(4, rng);
    const double p = purity(rho);
    CHECK(p >= 0.25 - 1e-12);
    CHECK(p <= 1.0 + 1e-9);
  }
}

TEST_CASE("fidelity reference values") {
  const DensityMatrix zero = pure_density(basis_state(2, 0));
  const DensityMatrix one = pure_density(basis_state(2, 1));
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(fidelity(zero, maximally_mixed(2)) == doctest::Approx(0.5).epsilon(1e-8));

  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  CHECK_THROWS_AS(fidelity(zero, DensityMatrix::from_unchecked(ComplexMatrix(3, 3))),
                  DimensionError);
}

TEST_CASE("fidelity is symmetric on random pairs") {
  SeededRng rng(12, 0);
  for (std::size_t d : {std::size_t(2), std::size_t(4)}) {
    for (int i = 0; i < 100; ++i) {
      const DensityMatrix a = sample_hs(d, rng);
      const DensityMatrix b = sample_bures(d, rng);
      CHECK(fidelity(a, b) == doctest::Approx(fidelity(b, a)).epsilon(0).scale(1).epsilon(1e-8));
    }
  }
}

TEST_CASE("frobenius_sq reference values") {
  const DensityMatrix zero = pure_density(basis_state(2, 0));
  const DensityMatrix one = pure_density(basis_state(2, 1));
  CHECK(frobenius_sq(zero, zero) == doctest::Approx(0.0));
  CHECK(frobenius_sq(zero, one) == doctest::Approx(2.0).epsilon(1e-12));
  // diag(-0.5, 0.5) difference: 0.25 + 0.25.
  CHECK(frobenius_sq(maximally_mixed(2), zero) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hermitian_eig reference spectra") {
  const EigResult id = hermitian_eig(ComplexMatrix::identity(2));
  CHECK(id.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(id.eigenvalues[1] == doctest::Approx(1.0));

  ComplexMatrix pauli_z(2, 2);
  pauli_z(0, 0) = 1.0;
  pauli_z(1, 1) = -1.0;
  const EigResult z = hermitian_eig(pauli_z);
  CHECK(z.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(std::abs(z.eigenvectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(z.eigenvectors(1, 1)) == doctest::Approx(1.0));

  const EigResult mix = hermitian_eig(diag_state({0.75, 0.25}).matrix());
  CHECK(mix.eigenvalues[0] == doctest::Approx(0.75));
  CHECK(mix.eigenvalues[1] == doctest::Approx(0.25));
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  SeededRng rng(13, 0);
  for (std::size_t d : {std::size_t(2), std::size_t(3), std::size_t(8), std::size_t(16)}) {
    const ComplexMatrix h = test::random_hermitian(d, rng);
    const EigResult eig = hermitian_eig(h);
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) scaled(i, j) *= eig.eigenvalues[j];
    const ComplexMatrix rebuilt = scaled * eig.eigenvectors.adjoint();
    CHECK(max_abs_diff(rebuilt, h) <= 1e-8);
    // Orthonormal columns.
    CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors,
                       ComplexMatrix::identity(d)) <= 1e-10);
    for (std::size_t j = 1; j < d; ++j) CHECK(eig.eigenvalues[j - 1] >= eig.eigenvalues[j]);
  }
}

TEST_CASE("hermitian_eig matches the closed-form 2x2 spectrum") {
  SeededRng rng(14, 0);
  for (int i = 0; i < 25; ++i) {
    const ComplexMatrix h = test::random_hermitian(2, rng);
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double off = std::abs(h(0, 1));
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    const EigResult eig = hermitian_eig(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(mid + rad).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(mid - rad).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(bad), ValidityError);
}

TEST_CASE("tau ordering follows the fixed D=4 placement") {
  // xi entries chosen distinct; tau slots: diagonal first, then the
  // subdiagonals walking down, (re, im) pairs each.
  TauVector tau;
  tau.dim = 4;
  tau.values.assign(16, 0.0);
  tau.values[0] = 1.0;
  tau.values[1] = 2.0;
  tau.values[2] = 3.0;
  tau.values[3] = 4.0;
  for (std::size_t s = 4; s < 16; ++s) tau.values[s] = 0.1 * double(s);

  ComplexMatrix xi(4, 4);
  xi(0, 0) = 1.0;
  xi(1, 1) = 2.0;
  xi(2, 2) = 3.0;
  xi(3, 3) = 4.0;
  xi(1, 0) = cdouble(0.4, 0.5);
  xi(2, 1) = cdouble(0.6, 0.7);
  xi(3, 2) = cdouble(0.8, 0.9);
  xi(2, 0) = cdouble(1.0, 1.1);
  xi(3, 1) = cdouble(1.2, 1.3);
  xi(3, 0) = cdouble(1.4, 1.5);

  ComplexMatrix expected = xi * xi.adjoint();
  expected *= cdouble(1.0 / expected.trace().real(), 0.0);
  CHECK(max_abs_diff(tau_to_rho(tau).matrix(), expected) <= 1e-14);
}

TEST_CASE("tau_to_rho reference states") {
  TauVector tau;
  tau.dim = 4;
  tau.values.assign(16, 0.0);
  tau.values[0] = 1.0;
  CHECK(max_abs_diff(tau_to_rho(tau).matrix(),
                     pure_density(basis_state(4, 0)).matrix()) <= 1e-14);

  TauVector half;
  half.dim = 4;
  half.values.assign(16, 0.0);
  for (std::size_t i = 0; i < 4; ++i) half.values[i] = 0.5;
  CHECK(max_abs_diff(tau_to_rho(half).matrix(), maximally_mixed(4).matrix()) <= 1e-14);

  TauVector zero;
  zero.dim = 4;
  zero.values.assign(16, 0.0);
  CHECK_THROWS_AS(tau_to_rho(zero), DomainError);
}

TEST_CASE("rho_to_tau reference values") {
  const TauVector mixed = rho_to_tau(maximally_mixed(4));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(mixed.values[i] == doctest::Approx(0.5).epsilon(1e-12));
  for (std::size_t i = 4; i < 16; ++i) CHECK(mixed.values[i] == doctest::Approx(0.0));

  // Rank-one state needs the jitter path.
  const TauVector pure = rho_to_tau(pure_density(basis_state(4, 0)));
  CHECK(pure.values[0] == doctest::Approx(1.0).epsilon(1e-5));
  for (std::size_t i = 1; i < 16; ++i) CHECK(std::abs(pure.values[i]) <= 1e-5);
}

TEST_CASE("tau round-trip on random full-rank samples") {
  SeededRng rng(15, 0);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = (i % 2 == 0) ? sample_hs(4, rng) : sample_bures(4, rng);
    const DensityMatrix back = tau_to_rho(rho_to_tau(rho));
    CHECK(std::sqrt(frobenius_sq(back, rho)) <= 1e-6);
    // Cholesky diagonal is nonnegative under the canonical ordering.
    const TauVector tau = rho_to_tau(rho);
    for (std::size_t j = 0; j < 4; ++j) CHECK(tau.values[j] >= 0.0);
  }
}

TEST_CASE("validated construction enforces the density-matrix contract") {
  CHECK_THROWS_AS(DensityMatrix::validated(ComplexMatrix::identity(2)), ValidityError);

  ComplexMatrix negative(2, 2);
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix::validated(negative), ValidityError);

  SeededRng rng(16, 0);
  const DensityMatrix ok = sample_hs(4, rng);
  CHECK_NOTHROW(DensityMatrix::validated(ok.matrix()));
}
