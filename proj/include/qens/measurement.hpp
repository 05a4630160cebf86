#pragma once

#include <string>
#include <vector>

#include "qens/density.hpp"
#include "qens/rng.hpp"

namespace qens {

// Per-qubit Pauli settings are strings over {X, Y, Z} and outcomes strings
// over {+, -}; the leftmost character is qubit 0, which indexes the most
// significant bit of the computational-basis labels.

struct MeasurementRecord {
  std::string setting;
  std::string outcome;
  PureState eigenstate;  // tensor product consistent with (setting, outcome)
};

struct MeasurementDataset {
  std::size_t n_qubits = 0;
  std::vector<MeasurementRecord> records;

  std::size_t dim() const { return std::size_t(1) << n_qubits; }
};

// Outcome counts for every one of the 3^n Pauli settings, each measured with
// the same number of shots. Settings are indexed lexicographically (X < Y < Z)
// and outcomes by their bit pattern ('+' = 0, '-' = 1).
struct SettingCounts {
  std::size_t n_qubits = 0;
  std::size_t shots = 0;
  std::vector<std::vector<std::uint64_t>> counts;  // [setting][outcome]

  std::size_t dim() const { return std::size_t(1) << n_qubits; }
  std::size_t n_settings() const { return counts.size(); }
};

std::size_t setting_count(std::size_t n_qubits);  // 3^n
std::string setting_string(std::size_t setting_index, std::size_t n_qubits);
std::string outcome_string(std::size_t outcome_index, std::size_t n_qubits);

PureState pauli_eigenstate(const std::string& setting, const std::string& outcome);

// All 2^n Born probabilities <psi_o| rho |psi_o> for one setting, clamped
// nonnegative and normalized.
std::vector<double> born_probabilities(const DensityMatrix& rho, const std::string& setting);

// One shot per uniformly random per-qubit basis choice, sampled from the
// joint outcome distribution.
MeasurementDataset simulate_random_pauli(const DensityMatrix& rho, std::size_t shots,
                                         SeededRng& rng);

// Multinomial outcome counts for every setting.
SettingCounts simulate_setting_counts(const DensityMatrix& rho, std::size_t shots_per_setting,
                                      SeededRng& rng);

// Eigenstate amplitudes stored transposed and split for the batched
// quadratic-form kernel: re[basis_index * count + record].
struct PackedEigenstates {
  std::size_t count = 0;
  std::size_t dim = 0;
  std::vector<double> re;
  std::vector<double> im;

  static PackedEigenstates pack(const MeasurementDataset& dataset);
};

// sum_m log <psi_m| rho |psi_m>, or -inf when any term is <= 1e-300.
double log_likelihood(const MeasurementDataset& dataset, const DensityMatrix& rho);
double log_likelihood(const PackedEigenstates& packed, const DensityMatrix& rho);
double log_likelihood(const PackedEigenstates& packed, const DensityMatrix& rho,
                      std::vector<double>& scratch);

}  // namespace qens
