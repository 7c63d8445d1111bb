#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gdkit/memo.hpp"

// Line-based memo cache:
//
//   GDKIT-CACHE v1
//   P <k1>,<k2>,...,<kn> <decimal>
//   G <tfirst> <ttarget> | <k1>,...,<km> <decimal>
//
// Keys are nonincreasing positive sizes; an empty g' rest leaves an empty
// field between single spaces ("G 2 1 |  1"). Entry lines are written in
// byte-wise lexicographic order so an unchanged store saves identically.

namespace gdkit::cache {

inline constexpr const char* kHeader = "GDKIT-CACHE v1";

inline std::vector<std::string> entry_lines(const MemoStore& memo) {
  std::vector<std::string> lines;
  lines.reserve(memo.p_table().size() + memo.g_table().size());
  for (const auto& [k, v] : memo.p_table()) lines.push_back("P " + key_str(k) + " " + v.str());
  for (const auto& [k, v] : memo.g_table())
    lines.push_back("G " + std::to_string(k.first) + " " + std::to_string(k.target) + " | " + key_str(k.rest) + " " +
                    v.str());
  std::sort(lines.begin(), lines.end());
  return lines;
}

inline void save(const MemoStore& memo, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& l : entry_lines(memo)) out << l << '\n';
}

namespace detail {

[[noreturn]] inline void corrupt(std::size_t line, const std::string& why) {
  throw Error(Errc::cache_corrupt, "line " + std::to_string(line) + ": " + why);
}

inline std::vector<std::string> split_spaces(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto sp = s.find(' ', pos);
    out.push_back(s.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos));
    if (sp == std::string::npos) break;
    pos = sp + 1;
  }
  return out;
}

inline Size parse_size(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    corrupt(line, "bad size '" + tok + "'");
  return static_cast<Size>(std::stoul(tok));
}

inline CanonicalKey parse_key(const std::string& tok, std::size_t line, bool allow_empty) {
  CanonicalKey k;
  if (tok.empty()) {
    if (!allow_empty) corrupt(line, "empty key");
    return k;
  }
  std::size_t pos = 0;
  while (true) {
    auto comma = tok.find(',', pos);
    k.push_back(parse_size(tok.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos), line));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) corrupt(line, "zero entry in key");
    if (i && k[i] > k[i - 1]) corrupt(line, "key not nonincreasing");
  }
  return k;
}

inline Count parse_value(const std::string& tok, std::size_t line) {
  try {
    return Count::parse(tok);
  } catch (const Error&) {
    corrupt(line, "bad value '" + tok + "'");
  }
}

}  // namespace detail

/// Adds every entry of the stream to `memo`. Throws Errc::cache_corrupt
/// naming the first offending line.
inline void load(std::istream& in, MemoStore& memo) {
  std::string line;
  std::size_t no = 1;
  if (!std::getline(in, line) || line != kHeader) detail::corrupt(1, "missing header '" + std::string(kHeader) + "'");
  while (std::getline(in, line)) {
    ++no;
    auto tok = detail::split_spaces(line);
    if (tok[0] == "P" && tok.size() == 3) {
      memo.store_p(detail::parse_key(tok[1], no, false), detail::parse_value(tok[2], no));
    } else if (tok[0] == "G" && tok.size() == 6 && tok[3] == "|") {
      GKey key{detail::parse_size(tok[1], no), detail::parse_size(tok[2], no), detail::parse_key(tok[4], no, true)};
      if (key.first == 0 || key.target == 0) detail::corrupt(no, "g' entry with a zero size");
      memo.store_g(std::move(key), detail::parse_value(tok[5], no));
    } else {
      detail::corrupt(no, "unrecognized entry");
    }
  }
}

inline void save_file(const MemoStore& memo, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::cache_corrupt, "cannot write cache file " + path);
  save(memo, out);
}

/// Loads `path` if it exists; a missing file is an empty cache.
inline bool load_file(const std::string& path, MemoStore& memo) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  load(in, memo);
  return true;
}

}  // namespace gdkit::cache
