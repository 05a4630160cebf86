#include <doctest.h>

#include <string>
#include <vector>

#include "qens/kernels.hpp"
#include "qens/matrix.hpp"
#include "qens/rng.hpp"
#include "test_support.hpp"

using namespace qens;
using kernels::Ops;

namespace {

std::vector<double> random_array(std::size_t n, SeededRng& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal();
  return x;
}

}  // namespace

TEST_CASE("active kernel set is one of the known variants") {
  const std::string name = kernels::active_ops().name;
  CHECK((name == "scalar" || name == "avx2"));
  CHECK(kernels::scalar_ops().sum_sq != nullptr);
}

TEST_CASE("sum_sq matches extended-precision accumulation") {
  SeededRng rng(7, 0);
  for (std::size_t n : {std::size_t(1), std::size_t(5), std::size_t(64), std::size_t(1000)}) {
    const std::vector<double> x = random_array(n, rng);
    long double ref = 0.0L;
    for (double v : x) ref += static_cast<long double>(v) * v;
    const double got = kernels::scalar_ops().sum_sq(x.data(), n);
    CHECK(got == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));
  }
}

TEST_CASE("sum_sq_diff matches extended-precision accumulation") {
  SeededRng rng(8, 0);
  const std::vector<double> a = random_array(513, rng);
  const std::vector<double> b = random_array(513, rng);
  long double ref = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double d = static_cast<long double>(a[i]) - b[i];
    ref += d * d;
  }
  const double got = kernels::scalar_ops().sum_sq_diff(a.data(), b.data(), a.size());
  CHECK(got == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));
}

TEST_CASE("born_qform_batch agrees with direct matrix quadratic forms") {
  SeededRng rng(9, 0);
  for (std::size_t dim : {std::size_t(1), std::size_t(2), std::size_t(4), std::size_t(6)}) {
    const std::size_t count = 17;
    const ComplexMatrix h = test::random_hermitian(dim, rng);
    std::vector<double> re(dim * count), im(dim * count);
    std::vector<std::vector<cdouble>> psis(count, std::vector<cdouble>(dim));
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t i = 0; i < dim; ++i) {
        psis[r][i] = rng.complex_normal();
        re[i * count + r] = psis[r][i].real();
        im[i * count + r] = psis[r][i].imag();
      }
    std::vector<double> out(count);
    kernels::scalar_ops().born_qform_batch(dim, count, re.data(), im.data(), h.reals(),
                                           out.data());
    for (std::size_t r = 0; r < count; ++r) {
      cdouble q = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          q += std::conj(psis[r][i]) * h(i, j) * psis[r][j];
      CHECK(out[r] == doctest::Approx(q.real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("AVX2 variant is bit-identical to the scalar reference") {
  const Ops* avx2 = kernels::avx2_ops();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 unavailable on this host; equivalence not exercised");
    return;
  }
  const Ops& scalar = kernels::scalar_ops();
  SeededRng rng(10, 0);

  for (std::size_t n = 0; n <= 67; ++n) {
    const std::vector<double> a = random_array(n, rng);
    const std::vector<double> b = random_array(n, rng);
    CHECK(scalar.sum_sq(a.data(), n) == avx2->sum_sq(a.data(), n));
    CHECK(scalar.sum_sq_diff(a.data(), b.data(), n) == avx2->sum_sq_diff(a.data(), b.data(), n));
  }

  for (std::size_t dim : {std::size_t(1), std::size_t(2), std::size_t(3), std::size_t(4),
                          std::size_t(8), std::size_t(16)}) {
    for (std::size_t count : {std::size_t(1), std::size_t(2), std::size_t(3), std::size_t(4),
                              std::size_t(5), std::size_t(7), std::size_t(8), std::size_t(100)}) {
      const ComplexMatrix h = test::random_hermitian(dim, rng);
      std::vector<double> re(dim * count), im(dim * count);
      for (double& v : re) v = rng.normal();
      for (double& v : im) v = rng.normal();
      std::vector<double> out_scalar(count), out_avx2(count);
      scalar.born_qform_batch(dim, count, re.data(), im.data(), h.reals(), out_scalar.data());
      avx2->born_qform_batch(dim, count, re.data(), im.data(), h.reals(), out_avx2.data());
      for (std::size_t r = 0; r < count; ++r) CHECK(out_scalar[r] == out_avx2[r]);
    }
  }
}
