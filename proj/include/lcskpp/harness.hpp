#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

#include "lcskpp/simmodel.hpp"
#include "lcskpp/sweep.hpp"

namespace lcskpp::harness {

inline constexpr std::size_t kHistogramBins = 50;

struct ExperimentConfig {
  std::size_t n = 1000;
  Index k = 10;
  sim::PairClass pair_class;
  std::size_t trials = 200;
  sim::Seed base_seed{};
  sim::AlphabetDistribution dist = sim::AlphabetDistribution::acgt_uniform();
  sim::MutationModel mutation = sim::MutationModel::kResample;
};

struct Histogram {
  // Bin b covers [b / bins, (b + 1) / bins); the last bin also holds 1.0.
  std::array<std::size_t, kHistogramBins> counts{};

  static double bin_lo(std::size_t b) {
    return static_cast<double>(b) / static_cast<double>(kHistogramBins);
  }
  static double bin_hi(std::size_t b) {
    return static_cast<double>(b + 1) / static_cast<double>(kHistogramBins);
  }
  void add(double v) {
    auto b = static_cast<std::size_t>(v * static_cast<double>(kHistogramBins));
    counts[std::min(b, kHistogramBins - 1)] += 1;
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

// Normalized statistics of LCSk++/n over the trials. The standard deviation
// uses the (trials - 1) divisor and is 0 for a single trial.
struct TrialStats {
  double mean_normalized = 0.0;
  double stddev_normalized = 0.0;
  Histogram histogram;
  std::size_t trials = 0;
  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

struct Experiment {
  ExperimentConfig config;
  TrialStats stats;
};

inline sim::Seed trial_seed(sim::Seed base, std::size_t trial) {
  return sim::derive_seed(base, static_cast<std::uint64_t>(trial));
}

inline void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw InvalidParameter("trials must be >= 1");
  if (config.n < 1) throw InvalidParameter("string length must be >= 1");
  require_positive_k(config.k);
  if (config.pair_class.kind == sim::PairKind::kSimilar) {
    const double e = config.pair_class.e_similar;
    if (!(e >= 0.0) || !(e < sim::unrelated_error(config.dist))) {
      throw InvalidParameter("e_similar must lie in [0, e_unrelated)");
    }
  }
}

// Runs the trials on up to `threads` workers. Each trial owns its seed and
// result slot; aggregation walks the slots in trial order.
inline TrialStats run_trials(const ExperimentConfig& config,
                             unsigned threads = 1) {
  validate(config);
  std::vector<Score> values(config.trials, 0);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < config.trials; t += stride) {
      const auto [x, y] = sim::gen_pair(config.n, config.dist, config.pair_class,
                                        trial_seed(config.base_seed, t),
                                        config.mutation);
      values[t] = lcskpp(x, y, config.k);
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, config.trials);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  TrialStats stats;
  stats.trials = config.trials;
  const auto n = static_cast<double>(config.n);
  double sum = 0.0;
  for (Score v : values) {
    const double norm = static_cast<double>(v) / n;
    sum += norm;
    stats.histogram.add(norm);
  }
  stats.mean_normalized = sum / static_cast<double>(config.trials);
  if (config.trials > 1) {
    double ss = 0.0;
    for (Score v : values) {
      const double d = static_cast<double>(v) / n - stats.mean_normalized;
      ss += d * d;
    }
    stats.stddev_normalized =
        std::sqrt(ss / static_cast<double>(config.trials - 1));
  }
  return stats;
}

struct SeparabilityReport {
  Experiment unrelated;
  Experiment similar;
  double mean_gap = 0.0;        // similar mean - unrelated mean
  bool separable = false;       // similar mean > unrelated mean
  double overlap_mass = 0.0;    // shared histogram mass, in [0, 1]
};

inline SeparabilityReport separability_report(
    std::size_t n, Index k, double e_similar, std::size_t trials,
    sim::Seed base_seed,
    const sim::AlphabetDistribution& dist = sim::AlphabetDistribution::acgt_uniform(),
    unsigned threads = 1,
    sim::MutationModel mutation = sim::MutationModel::kResample) {
  SeparabilityReport report;
  report.unrelated.config = {n, k, sim::PairClass::unrelated(), trials,
                             sim::derive_seed(base_seed, 0x756e72656cULL), dist,
                             mutation};
  report.similar.config = {n, k, sim::PairClass::similar(e_similar), trials,
                           sim::derive_seed(base_seed, 0x73696d696cULL), dist,
                           mutation};
  // Validate both before spending time on either.
  validate(report.unrelated.config);
  validate(report.similar.config);
  report.unrelated.stats = run_trials(report.unrelated.config, threads);
  report.similar.stats = run_trials(report.similar.config, threads);

  const auto& u = report.unrelated.stats;
  const auto& s = report.similar.stats;
  report.mean_gap = s.mean_normalized - u.mean_normalized;
  report.separable = s.mean_normalized > u.mean_normalized;
  std::size_t shared = 0;
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    shared += std::min(u.histogram.counts[b], s.histogram.counts[b]);
  }
  report.overlap_mass = static_cast<double>(shared) / static_cast<double>(trials);
  return report;
}

// ---------------------------------------------------------------------------
// CSV output

inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline std::string error_label(const sim::PairClass& pc) {
  return pc.kind == sim::PairKind::kUnrelated ? "unrelated"
                                              : format_double(pc.e_similar);
}

inline constexpr std::string_view kTableHeader =
    "k,n,error,mean_normalized,stddev_normalized,trials,seed";

// Companion histogram file for row `row` of the table at `table`:
// <dir>/<stem>_hist_<row>.csv
inline std::filesystem::path histogram_path(const std::filesystem::path& table,
                                            std::size_t row) {
  auto name = table.stem().string() + "_hist_" + std::to_string(row) + ".csv";
  return table.parent_path() / name;
}

inline std::string table_csv(const std::vector<Experiment>& experiments) {
  std::ostringstream out;
  out << kTableHeader << '\n';
  for (const auto& e : experiments) {
    out << e.config.k << ',' << e.config.n << ',' << error_label(e.config.pair_class)
        << ',' << format_double(e.stats.mean_normalized) << ','
        << format_double(e.stats.stddev_normalized) << ',' << e.stats.trials << ','
        << e.config.base_seed.value << '\n';
  }
  return out.str();
}

inline std::string histogram_csv(const Histogram& h) {
  std::ostringstream out;
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    out << format_double(Histogram::bin_lo(b)) << ','
        << format_double(Histogram::bin_hi(b)) << ',' << h.counts[b] << '\n';
  }
  return out.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f << body;
  f.close();
  if (!f) throw IoError("write failed: " + path.string());
}

// Writes the summary table and one histogram companion per experiment.
inline void write_table(const std::vector<Experiment>& experiments,
                        const std::filesystem::path& destination) {
  write_file(destination, table_csv(experiments));
  for (std::size_t row = 0; row < experiments.size(); ++row) {
    write_file(histogram_path(destination, row),
               histogram_csv(experiments[row].stats.histogram));
  }
}

struct TableRow {
  Index k = 0;
  std::size_t n = 0;
  std::string error;
  double mean_normalized = 0.0;
  double stddev_normalized = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

namespace detail {

template <typename T>
T parse_field(const std::string& s, const std::filesystem::path& path) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw IoError("malformed field '" + s + "' in " + path.string());
  }
  return v;
}

}  // namespace detail

inline std::vector<TableRow> read_table(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path.string());
  std::string line;
  if (!std::getline(f, line) || line != kTableHeader) {
    throw IoError("missing or unexpected header in " + path.string());
  }
  std::vector<TableRow> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, ',');) fields.push_back(field);
    if (fields.size() != 7) throw IoError("expected 7 fields in " + path.string());
    TableRow row;
    row.k = detail::parse_field<Index>(fields[0], path);
    row.n = detail::parse_field<std::size_t>(fields[1], path);
    row.error = fields[2];
    row.mean_normalized = detail::parse_field<double>(fields[3], path);
    row.stddev_normalized = detail::parse_field<double>(fields[4], path);
    row.trials = detail::parse_field<std::size_t>(fields[5], path);
    row.seed = detail::parse_field<std::uint64_t>(fields[6], path);
    rows.push_back(std::move(row));
  }
  return rows;
}

// The published grid: k in {10, 20} x lengths x {unrelated, 0.20, 0.10, 0.05}.
inline std::vector<ExperimentConfig> table_grid(
    const std::vector<std::size_t>& lengths, std::size_t trials, sim::Seed base,
    const sim::AlphabetDistribution& dist = sim::AlphabetDistribution::acgt_uniform(),
    sim::MutationModel mutation = sim::MutationModel::kResample) {
  std::vector<ExperimentConfig> grid;
  const std::array<sim::PairClass, 4> classes = {
      sim::PairClass::unrelated(), sim::PairClass::similar(0.20),
      sim::PairClass::similar(0.10), sim::PairClass::similar(0.05)};
  std::uint64_t cell = 0;
  for (Index k : {Index{10}, Index{20}}) {
    for (auto n : lengths) {
      for (const auto& pc : classes) {
        grid.push_back(
            {n, k, pc, trials, sim::derive_seed(base, cell++), dist, mutation});
      }
    }
  }
  return grid;
}

}  // namespace lcskpp::harness
