#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "gdkit/blocks.hpp"
#include "gdkit/count.hpp"

namespace gdkit {

/// Key of a cached g'_i value. g'_i depends only on the size of the block
/// holding the fixed element, the size of the target block, and the multiset
/// of the remaining sizes.
struct GKey {
  Size first = 0;
  Size target = 0;
  CanonicalKey rest;

  friend auto operator<=>(const GKey&, const GKey&) = default;
};

struct MemoStats {
  std::size_t p_entries = 0;
  std::size_t g_entries = 0;
  std::uint64_t p_evaluations = 0;  // cache misses that ran the recursion
  std::uint64_t g_evaluations = 0;
  std::uint64_t hits = 0;

  std::size_t entries() const { return p_entries + g_entries; }
};

/// Cache of P' and g' values.
///
/// Not synchronized: a store belongs to one computation (or one thread) at a
/// time. Values are pure functions of their keys, so stores filled by
/// different threads can be merged freely.
class MemoStore {
 public:
  std::optional<Count> find_p(const CanonicalKey& k) {
    auto it = p_.find(k);
    if (it == p_.end()) return std::nullopt;
    ++hits_;
    return it->second;
  }

  std::optional<Count> find_g(const GKey& k) {
    auto it = g_.find(k);
    if (it == g_.end()) return std::nullopt;
    ++hits_;
    return it->second;
  }

  void store_p(CanonicalKey k, Count v) { p_.insert_or_assign(std::move(k), std::move(v)); }
  void store_g(GKey k, Count v) { g_.insert_or_assign(std::move(k), std::move(v)); }

  void note_p_evaluation() { ++p_evals_; }
  void note_g_evaluation() { ++g_evals_; }

  const std::map<CanonicalKey, Count>& p_table() const noexcept { return p_; }
  const std::map<GKey, Count>& g_table() const noexcept { return g_; }

  MemoStats stats() const { return {p_.size(), g_.size(), p_evals_, g_evals_, hits_}; }

  void reset_counters() { p_evals_ = g_evals_ = hits_ = 0; }
  void clear() {
    p_.clear();
    g_.clear();
    reset_counters();
  }

 private:
  std::map<CanonicalKey, Count> p_;
  std::map<GKey, Count> g_;
  std::uint64_t p_evals_ = 0;
  std::uint64_t g_evals_ = 0;
  std::uint64_t hits_ = 0;
};

inline MemoStats memo_stats(const MemoStore& memo) { return memo.stats(); }

}  // namespace gdkit
