#pragma once

// Slow reference implementations. Quadratic-or-worse; test scale only.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "lcskpp/common.hpp"

namespace lcskpp::oracle {

// (|X|+1) x (|Y|+1) table; cell(i, j) refers to prefixes X[0, i), Y[0, j).
class DpTable {
 public:
  DpTable(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Score& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  Score operator()(std::size_t i, std::size_t j) const {
    return cells_[i * cols_ + j];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Score> cells_;
};

// Longest common suffix of X[0, i) and Y[0, j) for every (i, j).
inline DpTable common_suffix_table(SequenceView x, SequenceView y) {
  DpTable suf(x.size() + 1, y.size() + 1);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      if (x[i - 1] == y[j - 1]) suf(i, j) = suf(i - 1, j - 1) + 1;
    }
  }
  return suf;
}

inline DpTable lcskpp_table(SequenceView x, SequenceView y, Index k) {
  require_positive_k(k);
  const auto suf = common_suffix_table(x, y);
  DpTable dp(x.size() + 1, y.size() + 1);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      Score best = std::max(dp(i - 1, j), dp(i, j - 1));
      for (Score q = k; q <= suf(i, j); ++q) {
        const auto uq = static_cast<std::size_t>(q);
        best = std::max(best, dp(i - uq, j - uq) + q);
      }
      dp(i, j) = best;
    }
  }
  return dp;
}

inline Score lcskpp_dp(SequenceView x, SequenceView y, Index k) {
  return lcskpp_table(x, y, k)(x.size(), y.size());
}

inline DpTable lcsk_table(SequenceView x, SequenceView y, Index k) {
  require_positive_k(k);
  const auto suf = common_suffix_table(x, y);
  DpTable dp(x.size() + 1, y.size() + 1);
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      Score best = std::max(dp(i - 1, j), dp(i, j - 1));
      if (suf(i, j) >= k) best = std::max(best, dp(i - uk, j - uk) + 1);
      dp(i, j) = best;
    }
  }
  return dp;
}

inline Score lcsk_dp(SequenceView x, SequenceView y, Index k) {
  return lcsk_table(x, y, k)(x.size(), y.size());
}

inline Score lcs_classic(SequenceView x, SequenceView y) {
  std::vector<Score> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

inline Score count_match_pairs_naive(SequenceView x, SequenceView y, Index k) {
  require_positive_k(k);
  const auto uk = static_cast<std::size_t>(k);
  if (uk > x.size() || uk > y.size()) return 0;
  Score r = 0;
  for (std::size_t i = 0; i + uk <= x.size(); ++i) {
    for (std::size_t j = 0; j + uk <= y.size(); ++j) {
      if (x.substr(i, uk) == y.substr(j, uk)) ++r;
    }
  }
  return r;
}

// True iff (I, J) is a k++ common subsequence: equal sizes, strictly
// increasing, symbol-equal, and cut into aligned blocks (consecutive in both
// I and J) that are each at least k long.
inline bool validate_chain(SequenceView x, SequenceView y, Index k,
                           std::span<const Index> is, std::span<const Index> js) {
  if (k < 1 || is.size() != js.size()) return false;
  const auto n = is.size();
  for (std::size_t t = 0; t < n; ++t) {
    if (is[t] < 0 || js[t] < 0 || is[t] >= static_cast<Index>(x.size()) ||
        js[t] >= static_cast<Index>(y.size())) {
      return false;
    }
    if (x[static_cast<std::size_t>(is[t])] != y[static_cast<std::size_t>(js[t])]) {
      return false;
    }
    if (t > 0 && (is[t] <= is[t - 1] || js[t] <= js[t - 1])) return false;
  }
  Index run = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const bool extends =
        t > 0 && is[t] == is[t - 1] + 1 && js[t] == js[t - 1] + 1;
    if (!extends) {
      if (t > 0 && run < k) return false;
      run = 0;
    }
    ++run;
  }
  return n == 0 || run >= k;
}

}  // namespace lcskpp::oracle
