#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qens/density.hpp"
#include "qens/ensembles.hpp"
#include "qens/errors.hpp"
#include "qens/io.hpp"
#include "qens/statistics.hpp"

using namespace qens;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(std::stod(format_double(1.4553392759687097e-3)) == 1.4553392759687097e-3);
}

TEST_CASE("density json round trip is exact") {
  SeededRng rng(91, 0);
  const DensityMatrix rho = sample_bures(4, rng);
  const std::string text = density_to_json(rho);
  const DensityMatrix back = density_from_json(text);
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
  CHECK(density_to_json(back) == text);
}

TEST_CASE("density json rejects malformed and unphysical input") {
  CHECK_THROWS_AS(density_from_json("not json"), IoError);
  CHECK_THROWS_AS(density_from_json("{\"dim\": 2, \"re\": [1, 0, 0], \"im\": [0, 0, 0, 0]}"),
                  IoError);
  // Hermitian but trace 2.
  CHECK_THROWS_AS(
      density_from_json("{\"dim\": 2, \"re\": [1, 0, 0, 1], \"im\": [0, 0, 0, 0]}"),
      ValidityError);
  // Correct trace but negative eigenvalue.
  CHECK_THROWS_AS(
      density_from_json("{\"dim\": 2, \"re\": [1.2, 0, 0, -0.2], \"im\": [0, 0, 0, 0]}"),
      ValidityError);
}

TEST_CASE("states jsonl round trip") {
  SeededRng rng(92, 0);
  std::vector<DensityMatrix> states;
  for (int i = 0; i < 7; ++i) states.push_back(sample_ma(4, 4, 0.4, rng));
  const std::string path = temp_path("qens_states_io.jsonl");
  write_states_jsonl(path, states);
  const std::vector<DensityMatrix> back = read_states_jsonl(path);
  REQUIRE(back.size() == states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    CHECK(max_abs_diff(back[i].matrix(), states[i].matrix()) == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("counts csv round trip") {
  SeededRng rng(93, 0);
  const SettingCounts counts = simulate_setting_counts(maximally_mixed(4), 100, rng);
  const std::string path = temp_path("qens_counts_io.csv");
  write_counts_csv(path, counts);
  const SettingCounts back = read_counts_csv(path);
  CHECK(back.n_qubits == counts.n_qubits);
  CHECK(back.shots == counts.shots);
  for (std::size_t s = 0; s < counts.n_settings(); ++s)
    for (std::size_t o = 0; o < counts.dim(); ++o)
      CHECK(back.counts[s][o] == counts.counts[s][o]);
  std::filesystem::remove(path);
}

TEST_CASE("value files round trip") {
  const std::string path = temp_path("qens_values_io.txt");
  const std::vector<double> values = {0.5, 1.0 / 3.0, 0.9999999999999};
  write_values(path, values);
  const std::vector<double> back = read_values(path);
  REQUIRE(back.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(back[i] == values[i]);
  std::filesystem::remove(path);
}

TEST_CASE("histogram csv layout") {
  const Histogram h1 = build_histogram({0.1, 0.4}, 0.0, 1.0);
  const Histogram h2 = build_histogram({0.9}, 0.0, 1.0);
  std::ostringstream out;
  write_histogram_csv(out, h1, h2);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "bin_lo,h1,h2");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == kHistogramBins);
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(read_states_jsonl("/nonexistent/qens.jsonl"), IoError);
  CHECK_THROWS_AS(read_counts_csv("/nonexistent/qens.csv"), IoError);
}
