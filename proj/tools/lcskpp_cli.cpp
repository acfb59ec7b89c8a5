// lcskpp command-line front end: compute, simulate, suggest-k.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcskpp/input.hpp"
#include "lcskpp/lcskpp.hpp"

namespace {

using namespace lcskpp;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

struct ComputeArgs {
  std::optional<std::string> x_path, y_path, x_lit, y_lit;
  std::optional<std::string> x_record, y_record, alphabet, out;
  std::string format = "plain";
  std::string mode = "lcskpp";
  Index k = 0;
  bool reconstruct = false;
  bool stats = false;
  bool preserve_case = false;
  std::size_t max_pairs = 100'000'000;
  unsigned threads = 1;  // accepted for symmetry; compute is single-threaded
};

struct SimulateArgs {
  std::size_t n = 1000;
  Index k = 0;
  std::string pair_class = "unrelated";
  std::optional<double> e;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  std::optional<std::string> out;
  bool both_classes = false;
  bool grid = false;
  std::vector<std::size_t> lengths = {1000, 10000};
  std::string alphabet = "acgt-uniform";
  std::string mutation = "resample";
};

struct SuggestArgs {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string alphabet = "acgt-uniform";
};

// Sends results to --out when given, stdout otherwise.
class ResultSink {
 public:
  explicit ResultSink(const std::optional<std::string>& path) {
    if (path) {
      file_.open(*path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot open for writing: " + *path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

io::InputSpec input_spec(const std::optional<std::string>& path,
                         const std::optional<std::string>& literal,
                         const std::optional<std::string>& record,
                         const ComputeArgs& a, const char* which) {
  if (path.has_value() == literal.has_value()) {
    throw InvalidParameter(std::string("give exactly one of --") + which +
                           " or --" + which + "-lit");
  }
  io::InputSpec spec;
  if (path) spec.path = *path;
  spec.literal = literal;
  spec.format = a.format == "fasta" ? io::Format::kFasta : io::Format::kPlain;
  spec.record = record;
  spec.preserve_case = a.preserve_case;
  spec.alphabet = a.alphabet;
  return spec;
}

int run_compute(const ComputeArgs& a) {
  if (a.reconstruct && a.mode == "lcsk") {
    throw InvalidParameter("--reconstruct is only available in lcskpp mode");
  }
  const auto x = io::load(input_spec(a.x_path, a.x_lit, a.x_record, a, "x"));
  const auto y = io::load(input_spec(a.y_path, a.y_lit, a.y_record, a, "y"));
  const Mode mode = a.mode == "lcsk" ? Mode::kLcsk : Mode::kLcskpp;

  const auto started = std::chrono::steady_clock::now();
  std::vector<MatchPair> pairs;
  try {
    pairs = find_match_pairs(x, y, a.k, MatchOptions{a.max_pairs});
  } catch (const TooManyMatchPairs& e) {
    throw InvalidParameter(std::string(e.what()) +
                           "; choose a larger --k (see `lcskpp suggest-k`) or "
                           "raise --max-pairs");
  }
  const auto result = sweep_pairs(pairs, a.k, static_cast<Index>(y.size()), mode);
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - started);

  ResultSink sink(a.out);
  auto& out = sink.stream();
  out << result.value << '\n';
  if (a.reconstruct) {
    for (const auto& ij : reconstruct(result, pairs, a.k)) {
      out << ij.i << '\t' << ij.j << '\n';
    }
  }
  out.flush();
  if (!out) throw IoError("failed writing results");
  if (a.stats) {
    std::cerr << "r=" << pairs.size() << '\n'
              << "elapsed_ms=" << elapsed.count() << '\n';
  }
  return kExitOk;
}

sim::MutationModel parse_mutation(const std::string& s) {
  return s == "substitute" ? sim::MutationModel::kSubstitute
                           : sim::MutationModel::kResample;
}

std::string summary(const harness::TrialStats& s) {
  return "mean=" + harness::format_double(s.mean_normalized) +
         " stddev=" + harness::format_double(s.stddev_normalized);
}

int run_simulate(const SimulateArgs& a) {
  if (a.trials < 1) throw InvalidParameter("--trials must be >= 1");
  const auto dist = sim::AlphabetDistribution::parse(a.alphabet);
  const auto mutation = parse_mutation(a.mutation);
  const sim::Seed seed{a.seed};
  std::vector<harness::Experiment> experiments;

  if (a.grid) {
    for (const auto& config :
         harness::table_grid(a.lengths, a.trials, seed, dist, mutation)) {
      harness::Experiment e{config, harness::run_trials(config, a.threads)};
      std::cout << "k=" << config.k << " n=" << config.n
                << " error=" << harness::error_label(config.pair_class) << ' '
                << summary(e.stats) << '\n';
      experiments.push_back(std::move(e));
    }
  } else {
    if (a.k < 1) throw InvalidParameter("--k is required and must be >= 1");
    if (a.both_classes) {
      if (!a.e) throw InvalidParameter("--both-classes needs --e");
      const auto report = harness::separability_report(
          a.n, a.k, *a.e, a.trials, seed, dist, a.threads, mutation);
      std::cout << "unrelated " << summary(report.unrelated.stats) << '\n'
                << "similar " << summary(report.similar.stats) << '\n'
                << "gap=" << harness::format_double(report.mean_gap)
                << " separable=" << (report.separable ? "true" : "false")
                << " overlap=" << harness::format_double(report.overlap_mass)
                << '\n';
      experiments = {report.unrelated, report.similar};
    } else {
      sim::PairClass pc = sim::PairClass::unrelated();
      if (a.pair_class == "similar") {
        if (!a.e) throw InvalidParameter("--class similar needs --e");
        pc = sim::PairClass::similar(*a.e);
      }
      harness::ExperimentConfig config{a.n, a.k, pc, a.trials, seed, dist, mutation};
      harness::Experiment e{config, harness::run_trials(config, a.threads)};
      std::cout << summary(e.stats) << '\n';
      experiments.push_back(std::move(e));
    }
  }
  if (a.out) harness::write_table(experiments, *a.out);
  return kExitOk;
}

int run_suggest(const SuggestArgs& a) {
  if (a.n < 1 || a.m < 1) throw InvalidParameter("--n and --m must be >= 1");
  const auto dist = sim::AlphabetDistribution::parse(a.alphabet);
  const Index k = sim::k_fast(a.n, a.m, dist);
  std::cout << "k=" << k << '\n'
            << "S=" << harness::format_double(sim::match_probability(dist)) << '\n'
            << "expected_match_pairs="
            << harness::format_double(sim::expected_match_pairs(a.n, a.m, k, dist))
            << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCSk++ / LCSk string similarity for long strings"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "Compute LCSk++ (or LCSk) of two sequences");
  cmd_compute->add_option("--x", compute.x_path, "Path to the first sequence");
  cmd_compute->add_option("--y", compute.y_path, "Path to the second sequence");
  cmd_compute->add_option("--x-lit", compute.x_lit, "First sequence given inline");
  cmd_compute->add_option("--y-lit", compute.y_lit, "Second sequence given inline");
  cmd_compute->add_option("--format", compute.format, "Input file format")
      ->check(CLI::IsMember({"plain", "fasta"}));
  cmd_compute->add_option("--x-record", compute.x_record, "FASTA record id for --x");
  cmd_compute->add_option("--y-record", compute.y_record, "FASTA record id for --y");
  cmd_compute->add_flag("--preserve-case", compute.preserve_case,
                        "Do not uppercase FASTA input");
  cmd_compute->add_option("--alphabet", compute.alphabet,
                          "Reject inputs with symbols outside this set");
  cmd_compute->add_option("--k", compute.k, "Minimum run length k")->required();
  cmd_compute->add_option("--mode", compute.mode, "Metric")
      ->check(CLI::IsMember({"lcskpp", "lcsk"}));
  cmd_compute->add_flag("--reconstruct", compute.reconstruct,
                        "Print the matched index pairs, one 'i<TAB>j' per line");
  cmd_compute->add_flag("--stats", compute.stats,
                        "Print match-pair count and elapsed time to stderr");
  cmd_compute->add_option("--max-pairs", compute.max_pairs,
                          "Abort if more match pairs than this are found");
  cmd_compute->add_option("--out", compute.out, "Write results here instead of stdout");
  cmd_compute->add_option("--threads", compute.threads,
                          "Accepted for uniformity; compute always runs on one thread")
      ->check(CLI::PositiveNumber);

  SimulateArgs simulate;
  auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo LCSk++/n statistics");
  cmd_simulate->add_option("--n", simulate.n, "String length");
  cmd_simulate->add_option("--k", simulate.k, "Minimum run length k");
  cmd_simulate->add_option("--class", simulate.pair_class, "Pair class")
      ->check(CLI::IsMember({"unrelated", "similar"}));
  cmd_simulate->add_option("--e", simulate.e, "Mutation rate e_similar");
  cmd_simulate->add_option("--trials", simulate.trials, "Trials per experiment");
  cmd_simulate->add_option("--seed", simulate.seed, "Base seed");
  cmd_simulate->add_option("--threads", simulate.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd_simulate->add_option("--out", simulate.out,
                           "Summary CSV path; histograms go next to it");
  cmd_simulate->add_flag("--both-classes", simulate.both_classes,
                         "Run unrelated and similar classes and report separability");
  cmd_simulate->add_flag("--grid", simulate.grid,
                         "Run the k x length x error grid of the published table");
  cmd_simulate->add_option("--lengths", simulate.lengths, "String lengths for --grid")
      ->delimiter(',');
  cmd_simulate->add_option("--alphabet", simulate.alphabet,
                           "acgt-uniform | uniform-<N> | A:0.4,C:0.1,...");
  cmd_simulate->add_option("--mutation", simulate.mutation,
                           "Similar-pair mutation model")
      ->check(CLI::IsMember({"resample", "substitute"}));

  SuggestArgs suggest;
  auto* cmd_suggest = app.add_subcommand("suggest-k", "Pick k so that E[r] is linear");
  cmd_suggest->add_option("--n", suggest.n, "Length of the first string")->required();
  cmd_suggest->add_option("--m", suggest.m, "Length of the second string")->required();
  cmd_suggest->add_option("--alphabet", suggest.alphabet,
                          "acgt-uniform | uniform-<N> | A:0.4,C:0.1,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*cmd_compute) return run_compute(compute);
    if (*cmd_simulate) return run_simulate(simulate);
    if (*cmd_suggest) return run_suggest(suggest);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
