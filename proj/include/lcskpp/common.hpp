#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcskpp {

// Sequences are opaque byte strings; the metric compares symbols by value.
using Sequence = std::string;
using SequenceView = std::string_view;

using Index = std::int64_t;
using Score = std::int64_t;

// Raised for out-of-contract parameters (k = 0, e_similar >= e_unrelated, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by I/O helpers; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_positive_k(Index k) {
  if (k < 1) {
    throw InvalidParameter("k must be >= 1, got " + std::to_string(k));
  }
}

// X_{i..j} with the empty-string convention for i > j; bounds are clamped.
inline SequenceView substring(SequenceView s, Index i, Index j) {
  if (i > j || i >= static_cast<Index>(s.size()) || j < 0) return {};
  if (i < 0) i = 0;
  if (j >= static_cast<Index>(s.size())) j = static_cast<Index>(s.size()) - 1;
  return s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i + 1));
}

}  // namespace lcskpp
