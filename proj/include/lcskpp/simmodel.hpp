#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcskpp/common.hpp"

namespace lcskpp::sim {

// Generators draw from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. All sampling below consumes raw 64-bit words so the
// generated bytes do not depend on the standard library's distributions.
using Engine = std::mt19937_64;

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(const Seed&, const Seed&) = default;
};

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Child seed for an independent stream; distinct indices give distinct seeds.
constexpr Seed derive_seed(Seed parent, std::uint64_t index) {
  return {mix64(parent.value + index * 0xD1B54A32D192ED03ULL)};
}

enum class StreamRole : std::uint64_t { kFirst = 1, kSecond = 2, kMutation = 3 };

inline Engine make_engine(Seed seed, StreamRole role) {
  return Engine(derive_seed(seed, static_cast<std::uint64_t>(role)).value);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection, bound >= 1.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

class AlphabetDistribution {
 public:
  AlphabetDistribution(std::string symbols, std::vector<double> probs)
      : symbols_(std::move(symbols)), probs_(std::move(probs)) {
    validate();
    double acc = 0.0;
    cumulative_.reserve(probs_.size());
    for (double p : probs_) cumulative_.push_back(acc += p);
  }

  static AlphabetDistribution uniform(std::string symbols) {
    const auto size = symbols.size();
    return {std::move(symbols),
            std::vector<double>(size, size == 0 ? 0.0 : 1.0 / static_cast<double>(size))};
  }

  static AlphabetDistribution acgt_uniform() { return uniform("ACGT"); }

  // "acgt-uniform", "uniform-<N>" (N distinct printable symbols starting at
  // 'A'), or an explicit list "A:0.5,C:0.3,G:0.1,T:0.1".
  static AlphabetDistribution parse(std::string_view spec);

  const std::string& symbols() const { return symbols_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return symbols_.size(); }

  char sample(Engine& rng) const {
    const double u = uniform01(rng) * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return symbols_[static_cast<std::size_t>(it - cumulative_.begin())];
  }

 private:
  void validate() const {
    if (symbols_.size() < 2 || symbols_.size() != probs_.size()) {
      throw InvalidParameter(
          "alphabet needs >= 2 symbols and one probability per symbol");
    }
    std::string sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidParameter("alphabet symbols must be distinct");
    }
    double sum = 0.0;
    int positive = 0;
    for (double p : probs_) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw InvalidParameter("symbol probabilities must be finite and >= 0");
      }
      sum += p;
      positive += p > 0.0;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw InvalidParameter("symbol probabilities must sum to 1");
    }
    if (positive < 2) {
      throw InvalidParameter("at least two symbols need positive probability");
    }
  }

  std::string symbols_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

inline AlphabetDistribution AlphabetDistribution::parse(std::string_view spec) {
  if (spec == "acgt-uniform") return acgt_uniform();

  constexpr std::string_view kUniform = "uniform-";
  if (spec.starts_with(kUniform)) {
    const auto digits = spec.substr(kUniform.size());
    int count = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || count < 2 ||
        count > 94) {
      throw InvalidParameter("bad alphabet spec: " + std::string(spec));
    }
    std::string symbols;
    for (int c = 0; c < count; ++c) symbols.push_back(static_cast<char>('A' + c));
    return uniform(std::move(symbols));
  }

  std::string symbols;
  std::vector<double> probs;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.size() < 3 || item[1] != ':') {
      throw InvalidParameter("bad alphabet entry: " + std::string(item));
    }
    double p = 0.0;
    const auto value = item.substr(2);
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), p);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw InvalidParameter("bad probability: " + std::string(item));
    }
    symbols.push_back(item[0]);
    probs.push_back(p);
  }
  return {std::move(symbols), std::move(probs)};
}

// S = probability that two independent draws agree.
inline double match_probability(const AlphabetDistribution& dist) {
  double s = 0.0;
  for (double p : dist.probs()) s += p * p;
  return s;
}

inline double unrelated_error(const AlphabetDistribution& dist) {
  return 1.0 - match_probability(dist);
}

enum class PairKind { kUnrelated, kSimilar };

struct PairClass {
  PairKind kind = PairKind::kUnrelated;
  double e_similar = 0.0;  // used only for kSimilar

  static PairClass unrelated() { return {}; }
  static PairClass similar(double e) { return {PairKind::kSimilar, e}; }
};

inline Sequence sample_sequence(std::size_t n, const AlphabetDistribution& dist,
                                Engine& rng) {
  Sequence s(n, '\0');
  for (auto& c : s) c = dist.sample(rng);
  return s;
}

inline std::pair<Sequence, Sequence> gen_unrelated(std::size_t n,
                                                   const AlphabetDistribution& dist,
                                                   Seed seed) {
  auto rx = make_engine(seed, StreamRole::kFirst);
  auto ry = make_engine(seed, StreamRole::kSecond);
  auto x = sample_sequence(n, dist, rx);
  auto y = sample_sequence(n, dist, ry);
  return {std::move(x), std::move(y)};
}

// How the second string of a similar pair is derived from the first.
//  kSubstitute: with probability e_similar a position becomes a uniformly
//               chosen different symbol, so P[X_i != Y_i] = e_similar.
//  kResample:   with probability e_similar a position is redrawn from the
//               symbol distribution (possibly unchanged), so
//               P[X_i != Y_i] = e_similar * (1 - S). This is the model the
//               published LCSk++ distribution table is consistent with.
enum class MutationModel { kSubstitute, kResample };

inline std::pair<Sequence, Sequence> gen_similar(
    std::size_t n, const AlphabetDistribution& dist, double e_similar, Seed seed,
    MutationModel model = MutationModel::kSubstitute) {
  const double e_unrelated = unrelated_error(dist);
  if (!(e_similar >= 0.0) || !(e_similar < e_unrelated)) {
    throw InvalidParameter("e_similar must lie in [0, e_unrelated = " +
                           std::to_string(e_unrelated) + ")");
  }
  auto rx = make_engine(seed, StreamRole::kFirst);
  auto rm = make_engine(seed, StreamRole::kMutation);
  auto x = sample_sequence(n, dist, rx);
  Sequence y = x;
  const auto& symbols = dist.symbols();
  for (auto& c : y) {
    if (uniform01(rm) >= e_similar) continue;
    if (model == MutationModel::kResample) {
      c = dist.sample(rm);
      continue;
    }
    const auto self = symbols.find(c);
    auto pick = static_cast<std::size_t>(uniform_below(rm, symbols.size() - 1));
    if (pick >= self) ++pick;
    c = symbols[pick];
  }
  return {std::move(x), std::move(y)};
}

inline std::pair<Sequence, Sequence> gen_pair(
    std::size_t n, const AlphabetDistribution& dist, const PairClass& pair_class,
    Seed seed, MutationModel model = MutationModel::kSubstitute) {
  return pair_class.kind == PairKind::kUnrelated
             ? gen_unrelated(n, dist, seed)
             : gen_similar(n, dist, pair_class.e_similar, seed, model);
}

// Budgeting estimate (n + m) + n*m*S^k for the number of match pairs.
inline double expected_match_pairs(std::uint64_t n, std::uint64_t m, Index k,
                                   const AlphabetDistribution& dist) {
  require_positive_k(k);
  const double s = match_probability(dist);
  const auto dn = static_cast<double>(n);
  const auto dm = static_cast<double>(m);
  return dn + dm + dn * dm * std::pow(s, static_cast<double>(k));
}

// Smallest integer k >= log_{1/S}(nm / (n + m)), at least 1.
inline Index k_fast(std::uint64_t n, std::uint64_t m,
                    const AlphabetDistribution& dist) {
  if (n < 1 || m < 1) throw InvalidParameter("k_fast needs n, m >= 1");
  const double s = match_probability(dist);
  const auto dn = static_cast<double>(n);
  const auto dm = static_cast<double>(m);
  const double k = std::log(dn * dm / (dn + dm)) / std::log(1.0 / s);
  // Absorb rounding noise when the ratio is an exact power of 1/S.
  return std::max<Index>(1, static_cast<Index>(std::ceil(k - 1e-9)));
}

}  // namespace lcskpp::sim
