#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

#include "lcskpp/common.hpp"

namespace lcskpp::io {

enum class Format { kPlain, kFasta };

struct InputSpec {
  std::optional<std::filesystem::path> path;
  std::optional<std::string> literal;
  Format format = Format::kPlain;
  std::optional<std::string> record;  // FASTA record id; first when unset
  bool preserve_case = false;         // FASTA only
  std::optional<std::string> alphabet;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path.string());
  std::string body((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  if (f.bad()) throw IoError("read failed: " + path.string());
  return body;
}

// Drops a single trailing "\n" or "\r\n"; everything else is kept verbatim.
inline Sequence parse_plain(std::string text) {
  if (!text.empty() && text.back() == '\n') {
    text.pop_back();
    if (!text.empty() && text.back() == '\r') text.pop_back();
  }
  return text;
}

// Concatenated sequence lines of the selected record (whitespace removed).
inline Sequence parse_fasta(std::string_view text,
                            const std::optional<std::string>& record,
                            bool preserve_case) {
  Sequence out;
  bool seen_header = false;
  bool in_record = false;
  bool found = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with('>')) {
      if (found) break;
      seen_header = true;
      auto header = line.substr(1);
      const auto id = header.substr(0, header.find_first_of(" \t"));
      in_record = !record || id == *record;
      found = in_record;
      continue;
    }
    if (!in_record) continue;
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      out.push_back(preserve_case
                        ? c
                        : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  if (!seen_header) throw InvalidParameter("FASTA input has no '>' header line");
  if (!found) {
    throw InvalidParameter("FASTA record not found: " + record.value_or(""));
  }
  return out;
}

inline void check_alphabet(SequenceView s, std::string_view alphabet) {
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (alphabet.find(s[t]) == std::string_view::npos) {
      throw InvalidParameter("symbol '" + std::string(1, s[t]) + "' at position " +
                             std::to_string(t) + " is not in the declared alphabet");
    }
  }
}

inline Sequence load(const InputSpec& spec) {
  Sequence seq;
  if (spec.literal) {
    seq = *spec.literal;
  } else if (spec.path) {
    auto text = read_file(*spec.path);
    seq = spec.format == Format::kFasta
              ? parse_fasta(text, spec.record, spec.preserve_case)
              : parse_plain(std::move(text));
  } else {
    throw InvalidParameter("no input given");
  }
  if (spec.alphabet) check_alphabet(seq, *spec.alphabet);
  return seq;
}

}  // namespace lcskpp::io
