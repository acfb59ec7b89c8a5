#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstring>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcskpp/common.hpp"

namespace lcskpp {

// Start of a k-match: X[i, i+k) == Y[j, j+k). The end is (i+k, j+k).
struct MatchPair {
  Index i = 0;
  Index j = 0;

  friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

// G precedes P: G's end lies weakly above-left of P's start.
inline bool precedes(const MatchPair& g, const MatchPair& p, Index k) {
  return g.i + k <= p.i && g.j + k <= p.j;
}

// P continues G: same diagonal, one step down-right.
inline bool continues(const MatchPair& p, const MatchPair& g) {
  return p.i - p.j == g.i - g.j && p.i - g.i == 1;
}

class TooManyMatchPairs : public std::runtime_error {
 public:
  explicit TooManyMatchPairs(std::size_t cap)
      : std::runtime_error("number of match pairs exceeds the cap of " +
                           std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct MatchOptions {
  std::size_t max_pairs = std::numeric_limits<std::size_t>::max();
};

namespace detail {

inline int nucleotide_code(unsigned char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
  }
}

inline bool is_acgt(SequenceView s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return nucleotide_code(static_cast<unsigned char>(c)) >= 0;
  });
}

// One 64-bit key per k-window. For ACGT text with k <= 32 the key is the
// 2-bit packed window itself and therefore collision-free; otherwise it is
// a polynomial rolling hash that callers must verify.
inline std::vector<std::uint64_t> window_keys(SequenceView s, Index k,
                                              bool packed) {
  const Index n = static_cast<Index>(s.size());
  std::vector<std::uint64_t> keys;
  if (n < k) return keys;
  keys.reserve(static_cast<std::size_t>(n - k + 1));

  if (packed) {
    const std::uint64_t mask =
        k >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * k)) - 1;
    std::uint64_t code = 0;
    for (Index t = 0; t < n; ++t) {
      code = ((code << 2) |
              static_cast<std::uint64_t>(
                  nucleotide_code(static_cast<unsigned char>(s[t])))) &
             mask;
      if (t >= k - 1) keys.push_back(code);
    }
    return keys;
  }

  constexpr std::uint64_t kBase = 0x9E3779B97F4A7C15ULL;
  std::uint64_t top = 1;  // kBase^(k-1)
  for (Index t = 1; t < k; ++t) top *= kBase;
  std::uint64_t h = 0;
  for (Index t = 0; t < n; ++t) {
    if (t >= k) {
      h -= (static_cast<std::uint64_t>(static_cast<unsigned char>(s[t - k])) + 1) * top;
    }
    h = h * kBase + static_cast<std::uint64_t>(static_cast<unsigned char>(s[t])) + 1;
    if (t >= k - 1) keys.push_back(h);
  }
  return keys;
}

}  // namespace detail

// All (i, j) with X[i, i+k) == Y[j, j+k), in row-major order. Hash hits are
// confirmed by direct comparison unless the key is an exact packing.
inline std::vector<MatchPair> find_match_pairs(SequenceView x, SequenceView y,
                                               Index k,
                                               const MatchOptions& options = {}) {
  require_positive_k(k);
  std::vector<MatchPair> pairs;
  if (k > static_cast<Index>(std::min(x.size(), y.size()))) return pairs;

  const bool packed = k <= 32 && detail::is_acgt(x) && detail::is_acgt(y);
  const auto x_keys = detail::window_keys(x, k, packed);
  const auto y_keys = detail::window_keys(y, k, packed);

  std::vector<std::pair<std::uint64_t, Index>> y_index;
  y_index.reserve(y_keys.size());
  for (std::size_t j = 0; j < y_keys.size(); ++j) {
    y_index.emplace_back(y_keys[j], static_cast<Index>(j));
  }
  std::sort(y_index.begin(), y_index.end());

  const auto klen = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < x_keys.size(); ++i) {
    const std::uint64_t key = x_keys[i];
    auto it = std::lower_bound(
        y_index.begin(), y_index.end(), key,
        [](const auto& entry, std::uint64_t v) { return entry.first < v; });
    for (; it != y_index.end() && it->first == key; ++it) {
      const auto j = static_cast<std::size_t>(it->second);
      if (!packed && std::memcmp(x.data() + i, y.data() + j, klen) != 0) {
        continue;
      }
      if (pairs.size() >= options.max_pairs) {
        throw TooManyMatchPairs(options.max_pairs);
      }
      pairs.push_back({static_cast<Index>(i), static_cast<Index>(j)});
    }
  }
  return pairs;
}

// Binary search for the pair starting exactly at (row, col) in a
// row-major-sorted list.
inline std::optional<std::size_t> continuation_lookup(
    std::span<const MatchPair> pairs, Index row, Index col) {
  const MatchPair target{row, col};
  auto it = std::lower_bound(pairs.begin(), pairs.end(), target);
  if (it == pairs.end() || *it != target) return std::nullopt;
  return static_cast<std::size_t>(it - pairs.begin());
}

}  // namespace lcskpp
