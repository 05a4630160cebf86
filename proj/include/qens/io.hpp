#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qens/density.hpp"
#include "qens/measurement.hpp"
#include "qens/statistics.hpp"

namespace qens {

// Shortest round-trip decimal representation (locale-independent).
std::string format_double(double v);

// Density matrices travel as one JSON object per line:
//   {"dim": D, "re": [row-major D^2 reals], "im": [row-major D^2 reals]}
std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);  // fully validated

void write_states_jsonl(const std::string& path, const std::vector<DensityMatrix>& states);
std::vector<DensityMatrix> read_states_jsonl(const std::string& path);
DensityMatrix read_state_json(const std::string& path);  // first record of the file
void write_state_json(const std::string& path, const DensityMatrix& rho);

// Measurement datasets are JSON lines {"setting": "XZ..", "outcome": "+-.."}.
std::string record_to_json(const MeasurementRecord& record);
void write_dataset_jsonl(const std::string& path, const MeasurementDataset& dataset);
MeasurementDataset read_dataset_jsonl(const std::string& path);

// Setting counts are CSV with header setting,outcome,count.
void write_counts_csv(const std::string& path, const SettingCounts& counts);
SettingCounts read_counts_csv(const std::string& path);

// One real value per line.
std::vector<double> read_values(const std::string& path);
void write_values(const std::string& path, const std::vector<double>& values);

void write_histogram_csv(std::ostream& out, const Histogram& h1, const Histogram& h2);

}  // namespace qens
