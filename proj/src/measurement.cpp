#include "qens/measurement.hpp"

#include <cmath>
#include <limits>

#include "qens/errors.hpp"
#include "qens/kernels.hpp"

namespace qens {

namespace {

constexpr double kLikelihoodFloor = 1e-300;

bool power_of_two(std::size_t d) { return d >= 2 && (d & (d - 1)) == 0; }

std::size_t qubit_count(std::size_t dim, const char* who) {
  if (!power_of_two(dim))
    throw DimensionError(std::string(who) + ": dimension must be a power of two (>= 2)");
  std::size_t n = 0;
  while ((std::size_t(1) << n) < dim) ++n;
  return n;
}

// Columns are the (+, -) eigenvectors of the given Pauli operator, so the
// matrix maps outcome labels to computational-basis amplitudes.
void basis_columns(char pauli, cdouble out[2][2]) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (pauli) {
    case 'X':
      out[0][0] = inv_sqrt2;
      out[1][0] = inv_sqrt2;
      out[0][1] = inv_sqrt2;
      out[1][1] = -inv_sqrt2;
      return;
    case 'Y':
      out[0][0] = inv_sqrt2;
      out[1][0] = cdouble(0.0, inv_sqrt2);
      out[0][1] = inv_sqrt2;
      out[1][1] = cdouble(0.0, -inv_sqrt2);
      return;
    case 'Z':
      out[0][0] = 1.0;
      out[1][0] = 0.0;
      out[0][1] = 0.0;
      out[1][1] = 1.0;
      return;
    default:
      throw DomainError(std::string("invalid Pauli basis label '") + pauli + "'");
  }
}

ComplexMatrix setting_unitary(const std::string& setting) {
  const std::size_t n = setting.size();
  if (n == 0) throw DomainError("empty Pauli setting");
  const std::size_t d = std::size_t(1) << n;
  ComplexMatrix w(d, d);
  cdouble cols[2][2];
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t col = 0; col < d; ++col) {
      cdouble amp = 1.0;
      for (std::size_t q = 0; q < n && amp != cdouble(0.0, 0.0); ++q) {
        const std::size_t shift = n - 1 - q;  // qubit 0 is the most significant bit
        const std::size_t rbit = (row >> shift) & 1;
        const std::size_t cbit = (col >> shift) & 1;
        basis_columns(setting[q], cols);
        amp *= cols[rbit][cbit];
      }
      w(row, col) = amp;
    }
  }
  return w;
}

std::size_t categorical(const std::vector<double>& probs, SeededRng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  return probs.size() - 1;
}

// log prod q_m, evaluated as a rescaled running product so only one log is
// taken; returns -inf when any factor falls below the likelihood floor.
double log_product(const double* q, std::size_t n) {
  double acc = 1.0;
  long shifts = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(q[i] > kLikelihoodFloor)) return -std::numeric_limits<double>::infinity();
    acc *= q[i];
    while (acc < 0x1.0p-512) {
      acc *= 0x1.0p512;
      shifts -= 1;
    }
    while (acc > 0x1.0p512) {
      acc *= 0x1.0p-512;
      shifts += 1;
    }
  }
  return std::log(acc) + static_cast<double>(shifts) * (512.0 * M_LN2);
}

}  // namespace

std::size_t setting_count(std::size_t n_qubits) {
  std::size_t c = 1;
  for (std::size_t q = 0; q < n_qubits; ++q) c *= 3;
  return c;
}

std::string setting_string(std::size_t setting_index, std::size_t n_qubits) {
  static const char kBases[3] = {'X', 'Y', 'Z'};
  std::string s(n_qubits, 'X');
  for (std::size_t q = n_qubits; q-- > 0;) {
    s[q] = kBases[setting_index % 3];
    setting_index /= 3;
  }
  return s;
}

std::string outcome_string(std::size_t outcome_index, std::size_t n_qubits) {
  std::string s(n_qubits, '+');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::size_t shift = n_qubits - 1 - q;
    s[q] = ((outcome_index >> shift) & 1) ? '-' : '+';
  }
  return s;
}

PureState pauli_eigenstate(const std::string& setting, const std::string& outcome) {
  const std::size_t n = setting.size();
  if (n == 0 || outcome.size() != n)
    throw DomainError("pauli_eigenstate: setting/outcome length mismatch");
  std::size_t index = 0;
  for (char c : outcome) {
    if (c != '+' && c != '-') throw DomainError("pauli_eigenstate: invalid outcome label");
    index = (index << 1) | (c == '-' ? 1 : 0);
  }
  const std::size_t d = std::size_t(1) << n;
  PureState psi;
  psi.amplitudes.assign(d, 0.0);
  cdouble cols[2][2];
  for (std::size_t row = 0; row < d; ++row) {
    cdouble amp = 1.0;
    for (std::size_t q = 0; q < n && amp != cdouble(0.0, 0.0); ++q) {
      const std::size_t shift = n - 1 - q;
      basis_columns(setting[q], cols);
      amp *= cols[(row >> shift) & 1][(index >> shift) & 1];
    }
    psi.amplitudes[row] = amp;
  }
  return psi;
}

std::vector<double> born_probabilities(const DensityMatrix& rho, const std::string& setting) {
  const std::size_t n = qubit_count(rho.dim(), "born_probabilities");
  if (setting.size() != n)
    throw DimensionError("born_probabilities: setting length does not match state");
  const ComplexMatrix w = setting_unitary(setting);
  const ComplexMatrix sigma = w.adjoint() * rho.matrix() * w;
  std::vector<double> p(rho.dim());
  double total = 0.0;
  for (std::size_t o = 0; o < p.size(); ++o) {
    p[o] = std::max(sigma(o, o).real(), 0.0);
    total += p[o];
  }
  if (!(total > 0.0)) throw NumericalError("born_probabilities: vanishing total probability");
  for (double& v : p) v /= total;
  return p;
}

MeasurementDataset simulate_random_pauli(const DensityMatrix& rho, std::size_t shots,
                                         SeededRng& rng) {
  const std::size_t n = qubit_count(rho.dim(), "simulate_random_pauli");
  static const char kBases[3] = {'X', 'Y', 'Z'};
  MeasurementDataset ds;
  ds.n_qubits = n;
  ds.records.reserve(shots);
  std::string setting(n, 'X');
  for (std::size_t shot = 0; shot < shots; ++shot) {
    for (std::size_t q = 0; q < n; ++q) setting[q] = kBases[rng.uniform_int(3)];
    const std::vector<double> p = born_probabilities(rho, setting);
    const std::size_t o = categorical(p, rng);
    MeasurementRecord rec;
    rec.setting = setting;
    rec.outcome = outcome_string(o, n);
    rec.eigenstate = pauli_eigenstate(rec.setting, rec.outcome);
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

SettingCounts simulate_setting_counts(const DensityMatrix& rho, std::size_t shots_per_setting,
                                      SeededRng& rng) {
  const std::size_t n = qubit_count(rho.dim(), "simulate_setting_counts");
  if (shots_per_setting == 0)
    throw DomainError("simulate_setting_counts: shots must be >= 1");
  SettingCounts sc;
  sc.n_qubits = n;
  sc.shots = shots_per_setting;
  const std::size_t n_settings = setting_count(n);
  sc.counts.assign(n_settings, std::vector<std::uint64_t>(rho.dim(), 0));
  for (std::size_t s = 0; s < n_settings; ++s) {
    const std::vector<double> p = born_probabilities(rho, setting_string(s, n));
    for (std::size_t shot = 0; shot < shots_per_setting; ++shot)
      sc.counts[s][categorical(p, rng)] += 1;
  }
  return sc;
}

PackedEigenstates PackedEigenstates::pack(const MeasurementDataset& dataset) {
  PackedEigenstates packed;
  packed.count = dataset.records.size();
  packed.dim = dataset.dim();
  packed.re.assign(packed.dim * packed.count, 0.0);
  packed.im.assign(packed.dim * packed.count, 0.0);
  for (std::size_t r = 0; r < packed.count; ++r) {
    const PureState& psi = dataset.records[r].eigenstate;
    if (psi.dim() != packed.dim)
      throw DimensionError("PackedEigenstates: record dimension mismatch");
    for (std::size_t i = 0; i < packed.dim; ++i) {
      packed.re[i * packed.count + r] = psi.amplitudes[i].real();
      packed.im[i * packed.count + r] = psi.amplitudes[i].imag();
    }
  }
  return packed;
}

double log_likelihood(const PackedEigenstates& packed, const DensityMatrix& rho,
                      std::vector<double>& scratch) {
  if (packed.count == 0) return 0.0;
  if (packed.dim != rho.dim())
    throw DimensionError("log_likelihood: dataset and state dimensions differ");
  scratch.resize(packed.count);
  kernels::active_ops().born_qform_batch(packed.dim, packed.count, packed.re.data(),
                                         packed.im.data(), rho.matrix().reals(),
                                         scratch.data());
  return log_product(scratch.data(), packed.count);
}

double log_likelihood(const PackedEigenstates& packed, const DensityMatrix& rho) {
  std::vector<double> scratch;
  return log_likelihood(packed, rho, scratch);
}

double log_likelihood(const MeasurementDataset& dataset, const DensityMatrix& rho) {
  if (dataset.records.empty()) return 0.0;
  if (dataset.dim() != rho.dim())
    throw DimensionError("log_likelihood: dataset and state dimensions differ");
  return log_likelihood(PackedEigenstates::pack(dataset), rho);
}

}  // namespace qens
