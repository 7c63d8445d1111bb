#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "gdkit/error.hpp"

namespace gdkit {

using Size = std::uint32_t;

/// Block sizes sorted nonincreasing with zeros removed. P and P' only depend
/// on the multiset of nonzero sizes, so this is the key every cache uses.
using CanonicalKey = std::vector<Size>;

/// The sizes (t_1, ..., t_n) of the disjoint blocks, in caller order.
class BlockSizes {
 public:
  BlockSizes() = default;
  BlockSizes(std::initializer_list<Size> sizes) : sizes_(sizes) {}
  explicit BlockSizes(std::vector<Size> sizes) : sizes_(std::move(sizes)) {}

  const std::vector<Size>& sizes() const noexcept { return sizes_; }
  std::size_t size() const noexcept { return sizes_.size(); }
  bool empty() const noexcept { return sizes_.empty(); }
  Size operator[](std::size_t i) const { return sizes_.at(i); }

  std::uint64_t total() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::uint64_t{0}); }
  Size max() const { return sizes_.empty() ? 0 : *std::max_element(sizes_.begin(), sizes_.end()); }

  CanonicalKey canonical() const {
    CanonicalKey k;
    for (auto s : sizes_)
      if (s != 0) k.push_back(s);
    std::sort(k.begin(), k.end(), std::greater<>());
    return k;
  }

  /// Copy with sizes[i] replaced.
  BlockSizes with(std::size_t i, Size v) const {
    auto s = sizes_;
    s.at(i) = v;
    return BlockSizes(std::move(s));
  }

  BlockSizes appended(std::initializer_list<Size> more) const {
    auto s = sizes_;
    s.insert(s.end(), more);
    return BlockSizes(std::move(s));
  }

  std::string str(char sep = ',') const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(sizes_[i]);
    }
    return out;
  }

  friend bool operator==(const BlockSizes&, const BlockSizes&) = default;

 private:
  std::vector<Size> sizes_;
};

inline std::string key_str(const CanonicalKey& k) { return BlockSizes(k).str(); }

/// `count` copies of `size`.
inline BlockSizes repeated(Size size, std::size_t count) { return BlockSizes(std::vector<Size>(count, size)); }

/// Parse "t1,t2,...": nonnegative decimal integers separated by commas.
/// An empty string is the empty family.
inline BlockSizes parse_blocks(const std::string& text) {
  std::vector<Size> out;
  if (text.empty()) return BlockSizes{};
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(Errc::parse_error, "block sizes must be comma-separated nonnegative integers, got '" + text + "'");
    out.push_back(static_cast<Size>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return BlockSizes(std::move(out));
}

/// Feasibility: P > 0 exactly when 2 t_k <= sum for every k.
inline bool is_feasible(const BlockSizes& blocks) { return 2 * std::uint64_t{blocks.max()} <= blocks.total(); }

/// Integer partitions of m, each nonincreasing, in reverse lexicographic order.
inline std::vector<BlockSizes> partitions(Size m) {
  std::vector<BlockSizes> out;
  std::vector<Size> cur;
  std::function<void(Size, Size)> rec = [&](Size left, Size cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Size p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// Compositions of m into positive parts (2^(m-1) of them for m > 0).
inline std::vector<BlockSizes> compositions(Size m) {
  std::vector<BlockSizes> out;
  std::vector<Size> cur;
  std::function<void(Size)> rec = [&](Size left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Size p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

/// Every length-n vector of nonnegative sizes with sum at most max_sum.
inline std::vector<BlockSizes> bounded_vectors(std::size_t n, Size max_sum) {
  std::vector<BlockSizes> out;
  std::vector<Size> cur;
  std::function<void(Size)> rec = [&](Size left) {
    if (cur.size() == n) {
      out.emplace_back(cur);
      return;
    }
    for (Size p = 0; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(max_sum);
  return out;
}

}  // namespace gdkit
