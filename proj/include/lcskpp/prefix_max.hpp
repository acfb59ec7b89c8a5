#pragma once

#include <cassert>
#include <cstddef>
#include <functional>
#include <vector>

#include "lcskpp/common.hpp"

namespace lcskpp {

// Fenwick tree over columns supporting point max-update and inclusive
// prefix max-query. Every cell starts at T{}, which must compare lowest.
template <typename T = Score, typename Less = std::less<T>>
class PrefixMaxIndex {
 public:
  explicit PrefixMaxIndex(std::size_t size, Less less = Less{})
      : tree_(size + 1), less_(less) {}

  std::size_t size() const { return tree_.size() - 1; }

  void update(std::size_t col, const T& value) {
    assert(col < size());
    for (std::size_t x = col + 1; x < tree_.size(); x += x & (~x + 1)) {
      if (less_(tree_[x], value)) tree_[x] = value;
    }
  }

  // Max over positions [0, col].
  T query(std::size_t col) const {
    assert(col < size());
    T best{};
    for (std::size_t x = col + 1; x > 0; x -= x & (~x + 1)) {
      if (less_(best, tree_[x])) best = tree_[x];
    }
    return best;
  }

 private:
  std::vector<T> tree_;
  Less less_;
};

}  // namespace lcskpp
