#include "qens/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qens/errors.hpp"

namespace qens {

namespace {

using json = nlohmann::ordered_json;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string density_to_json(const DensityMatrix& rho) {
  json obj;
  obj["dim"] = rho.dim();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < rho.matrix().size(); ++i) {
    re.push_back(rho.matrix().data()[i].real());
    im.push_back(rho.matrix().data()[i].imag());
  }
  obj["re"] = std::move(re);
  obj["im"] = std::move(im);
  return obj.dump();
}

DensityMatrix density_from_json(const std::string& text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid density-matrix JSON: ") + e.what());
  }
  if (!obj.is_object() || !obj.contains("dim") || !obj.contains("re") || !obj.contains("im"))
    throw IoError("density-matrix JSON requires dim, re and im fields");
  const std::size_t dim = obj["dim"].get<std::size_t>();
  if (dim == 0 || dim > 64) throw IoError("density-matrix dim out of supported range [1, 64]");
  const auto& re = obj["re"];
  const auto& im = obj["im"];
  if (!re.is_array() || !im.is_array() || re.size() != dim * dim || im.size() != dim * dim)
    throw IoError("density-matrix re/im arrays must hold dim^2 entries");
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim * dim; ++i)
    m.data()[i] = cdouble(re[i].get<double>(), im[i].get<double>());
  return DensityMatrix::validated(std::move(m));
}

void write_states_jsonl(const std::string& path, const std::vector<DensityMatrix>& states) {
  std::ofstream out = open_output(path);
  for (const DensityMatrix& rho : states) out << density_to_json(rho) << '\n';
}

std::vector<DensityMatrix> read_states_jsonl(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<DensityMatrix> states;
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    states.push_back(density_from_json(line));
  }
  if (states.empty()) throw IoError("no density matrices found in '" + path + "'");
  return states;
}

DensityMatrix read_state_json(const std::string& path) {
  return read_states_jsonl(path).front();
}

void write_state_json(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out = open_output(path);
  out << density_to_json(rho) << '\n';
}

std::string record_to_json(const MeasurementRecord& record) {
  json obj;
  obj["setting"] = record.setting;
  obj["outcome"] = record.outcome;
  return obj.dump();
}

void write_dataset_jsonl(const std::string& path, const MeasurementDataset& dataset) {
  std::ofstream out = open_output(path);
  for (const MeasurementRecord& rec : dataset.records) out << record_to_json(rec) << '\n';
}

MeasurementDataset read_dataset_jsonl(const std::string& path) {
  std::ifstream in = open_input(path);
  MeasurementDataset ds;
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw IoError(std::string("invalid measurement record JSON: ") + e.what());
    }
    if (!obj.contains("setting") || !obj.contains("outcome"))
      throw IoError("measurement record requires setting and outcome fields");
    MeasurementRecord rec;
    rec.setting = obj["setting"].get<std::string>();
    rec.outcome = obj["outcome"].get<std::string>();
    rec.eigenstate = pauli_eigenstate(rec.setting, rec.outcome);
    if (ds.records.empty()) {
      ds.n_qubits = rec.setting.size();
    } else if (rec.setting.size() != ds.n_qubits) {
      throw IoError("measurement records disagree on qubit count");
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

void write_counts_csv(const std::string& path, const SettingCounts& counts) {
  std::ofstream out = open_output(path);
  out << "setting,outcome,count\n";
  for (std::size_t s = 0; s < counts.n_settings(); ++s) {
    const std::string setting = setting_string(s, counts.n_qubits);
    for (std::size_t o = 0; o < counts.dim(); ++o)
      out << setting << ',' << outcome_string(o, counts.n_qubits) << ','
          << counts.counts[s][o] << '\n';
  }
}

SettingCounts read_counts_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty counts file '" + path + "'");
  strip_cr(line);
  if (line != "setting,outcome,count")
    throw IoError("counts file must start with header setting,outcome,count");

  std::size_t n_qubits = 0;
  std::vector<std::pair<std::string, std::vector<std::uint64_t>>> rows;
  std::vector<std::string> order;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string setting, outcome, count_text;
    if (!std::getline(ss, setting, ',') || !std::getline(ss, outcome, ',') ||
        !std::getline(ss, count_text))
      throw IoError("malformed counts row: " + line);
    if (n_qubits == 0) n_qubits = setting.size();
    if (setting.size() != n_qubits || outcome.size() != n_qubits)
      throw IoError("counts rows disagree on qubit count");

    std::size_t outcome_index = 0;
    for (char c : outcome) {
      if (c != '+' && c != '-') throw IoError("invalid outcome label in counts file");
      outcome_index = (outcome_index << 1) | (c == '-' ? 1 : 0);
    }
    std::uint64_t value = 0;
    const auto res =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), value);
    if (res.ec != std::errc() || res.ptr != count_text.data() + count_text.size())
      throw IoError("invalid count value: " + count_text);

    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const auto& r) { return r.first == setting; });
    if (it == rows.end()) {
      rows.emplace_back(setting, std::vector<std::uint64_t>(std::size_t(1) << n_qubits, 0));
      it = rows.end() - 1;
    }
    it->second[outcome_index] += value;
  }
  if (n_qubits == 0) throw IoError("no counts rows in '" + path + "'");

  SettingCounts counts;
  counts.n_qubits = n_qubits;
  const std::size_t n_settings = setting_count(n_qubits);
  if (rows.size() != n_settings)
    throw IoError("counts file must cover all " + std::to_string(n_settings) +
                  " Pauli settings");
  counts.counts.assign(n_settings, {});
  std::size_t shots = 0;
  for (auto& [setting, outcome_counts] : rows) {
    std::size_t index = 0;
    for (char c : setting) {
      std::size_t digit;
      if (c == 'X') digit = 0;
      else if (c == 'Y') digit = 1;
      else if (c == 'Z') digit = 2;
      else throw IoError("invalid Pauli label in counts file");
      index = index * 3 + digit;
    }
    std::uint64_t total = 0;
    for (std::uint64_t v : outcome_counts) total += v;
    if (shots == 0) shots = total;
    if (total != shots) throw IoError("settings disagree on total shot count");
    counts.counts[index] = std::move(outcome_counts);
  }
  counts.shots = shots;
  return counts;
}

std::vector<double> read_values(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    double v = 0.0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
    if (res.ec != std::errc() || res.ptr != line.data() + line.size())
      throw IoError("invalid value line: " + line);
    values.push_back(v);
  }
  return values;
}

void write_values(const std::string& path, const std::vector<double>& values) {
  std::ofstream out = open_output(path);
  for (double v : values) out << format_double(v) << '\n';
}

void write_histogram_csv(std::ostream& out, const Histogram& h1, const Histogram& h2) {
  if (h1.bins.size() != h2.bins.size() || h1.lo != h2.lo || h1.hi != h2.hi)
    throw DimensionError("write_histogram_csv: histograms have mismatched binning");
  out << "bin_lo,h1,h2\n";
  for (std::size_t i = 0; i < h1.bins.size(); ++i) {
    const double lo = h1.lo + h1.bin_width() * static_cast<double>(i);
    out << format_double(lo) << ',' << format_double(h1.bins[i]) << ','
        << format_double(h2.bins[i]) << '\n';
  }
}

}  // namespace qens
