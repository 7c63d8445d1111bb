#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "gdkit/counting.hpp"
#include "gdkit/reduction.hpp"
#include "gdkit/report.hpp"

namespace gdkit {

namespace detail {

inline std::vector<Size> padded_sorted(const BlockSizes& x, std::size_t len) {
  std::vector<Size> v = x.sizes();
  v.resize(std::max(len, v.size()), 0);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Whether a majorizes b: after zero-padding and sorting both nonincreasing,
/// every prefix sum of a is >= that of b, with equal totals.
inline bool majorizes(const BlockSizes& a, const BlockSizes& b) {
  std::size_t len = std::max(a.size(), b.size());
  auto x = detail::padded_sorted(a, len), y = detail::padded_sorted(b, len);
  std::uint64_t sx = 0, sy = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sx += x[k];
    sy += y[k];
    if (sx < sy) return false;
  }
  return sx == sy;
}

/// f(t1, t2, l) >= f(t1 + 1, t2 - 1, l) for t1 >= t2 >= 1.
inline Report check_lemma_4_1(std::uint64_t t1, std::uint64_t t2, std::uint64_t l) {
  if (!(t1 >= t2 && t2 >= 1)) throw Error(Errc::precondition_violated, "pairing comparison needs t1 >= t2 >= 1");
  Count lhs = pairing_count(t1, t2, l), rhs = pairing_count(t1 + 1, t2 - 1, l);
  return {"lemma41",
          "t1=" + std::to_string(t1) + ",t2=" + std::to_string(t2) + ",l=" + std::to_string(l),
          lhs >= rhs,
          lhs.str(),
          rhs.str(),
          lhs == rhs ? "equality" : "",
          std::nullopt};
}

/// Moving one element from block j into block i (t_i >= t_j >= 1) does not
/// increase P. The notes record three strictness conditions and whether the
/// observed inequality was strict: 2 t_i <= sum before (strict_pre) and
/// after (strict_post) the transfer, and feasibility of the family with
/// block j removed (strict_merged). Only the last one is sufficient; the
/// first two miss (2,1,1) with i=1, j=2, where both sides are 4.
inline Report check_transfer_inequality(const BlockSizes& blocks, std::size_t i, std::size_t j, MemoStore& memo) {
  if (i >= blocks.size() || j >= blocks.size() || i == j)
    throw Error(Errc::precondition_violated, "transfer needs two distinct valid indices");
  if (!(blocks[i] >= blocks[j] && blocks[j] >= 1))
    throw Error(Errc::precondition_violated, "transfer needs t_i >= t_j >= 1");
  BlockSizes after = blocks.with(i, blocks[i] + 1).with(j, blocks[j] - 1);
  Count before_p = count_labeled(blocks, memo), after_p = count_labeled(after, memo);
  std::uint64_t sum = blocks.total();
  bool strict_pre = 2 * std::uint64_t{blocks[i]} <= sum;
  bool strict_post = 2 * std::uint64_t{after[i]} <= sum;
  std::vector<Size> merged;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (k != j) merged.push_back(blocks[k]);
  bool strict_merged = is_feasible(BlockSizes(std::move(merged)));
  return {"thm41",
          blocks.str() + " i=" + std::to_string(i) + " j=" + std::to_string(j),
          before_p >= after_p,
          before_p.str(),
          after_p.str(),
          "strict_pre=" + detail::yes_no(strict_pre) + " strict_post=" + detail::yes_no(strict_post) +
              " strict_merged=" + detail::yes_no(strict_merged) + " strict_observed=" + detail::yes_no(before_p > after_p),
          std::nullopt};
}

/// If a majorizes b then P(a) <= P(b) (labeled) and P'(a) <= P'(b).
inline Report check_majorization_inequality(const BlockSizes& a, const BlockSizes& b, bool labeled, MemoStore& memo) {
  if (!majorizes(a, b)) throw Error(Errc::not_comparable, "(" + a.str() + ") does not majorize (" + b.str() + ")");
  Count lhs = labeled ? count_labeled(a, memo) : count_unlabeled(a, memo);
  Count rhs = labeled ? count_labeled(b, memo) : count_unlabeled(b, memo);
  return {labeled ? "thm42" : "thm43",
          a.str() + " > " + b.str(),
          lhs <= rhs,
          lhs.str(),
          rhs.str(),
          lhs == rhs ? "equality" : "",
          std::nullopt};
}

struct ExtremalResult {
  Size m = 0;
  Count claimed_max;
  BlockSizes claimed_max_at;
  Count claimed_min;
  BlockSizes claimed_min_at;
  bool swept = false;
  Count observed_max;
  Count observed_min;  // smallest positive value seen
  std::vector<BlockSizes> observed_max_at;
  std::vector<BlockSizes> observed_min_at;
  bool holds = false;

  Report report() const {
    std::string notes = "max at (" + claimed_max_at.str() + "), min positive at (" + claimed_min_at.str() + ")";
    if (!swept) notes += "; partition sweep skipped above m=12";
    return {"extremal", "m=" + std::to_string(m), holds, claimed_max.str(), claimed_min.str(), notes, std::nullopt};
  }
};

inline constexpr Size kExtremalSweepLimit = 12;

/// Largest P for fixed total m is d(m) at (1, ..., 1); the smallest positive
/// one is (l!)^2 at (l, l) for m = 2l and 2l (l!)^2 at (l, l, 1) for m = 2l + 1.
/// For m <= 12 the claim is checked against every partition of m.
inline ExtremalResult extremal_values(Size m, MemoStore& memo) {
  if (m < 2) throw Error(Errc::precondition_violated, "extremal_values needs m >= 2");
  ExtremalResult r;
  r.m = m;
  r.claimed_max_at = repeated(1, m);
  r.claimed_max = derangement(m);
  Size l = m / 2;
  Count lf = factorial(l);
  if (m % 2 == 0) {
    r.claimed_min_at = BlockSizes{l, l};
    r.claimed_min = lf * lf;
  } else {
    r.claimed_min_at = BlockSizes{l, l, 1};
    r.claimed_min = Count(2ull * l) * lf * lf;
  }
  r.holds = count_labeled(r.claimed_max_at, memo) == r.claimed_max &&
            count_labeled(r.claimed_min_at, memo) == r.claimed_min;

  if (m <= kExtremalSweepLimit) {
    r.swept = true;
    bool have_min = false;
    for (const auto& part : partitions(m)) {
      Count p = count_labeled(part, memo);
      if (p.is_zero()) continue;
      if (p > r.observed_max || r.observed_max_at.empty()) {
        r.observed_max = p;
        r.observed_max_at.clear();
      }
      if (p == r.observed_max) r.observed_max_at.push_back(part);
      if (!have_min || p < r.observed_min) {
        r.observed_min = p;
        r.observed_min_at.clear();
        have_min = true;
      }
      if (p == r.observed_min) r.observed_min_at.push_back(part);
    }
    r.holds = r.holds && r.observed_max == r.claimed_max && r.observed_min == r.claimed_min;
  }
  return r;
}

/// P(t) <= P(t + b) when b is positive and itself feasible.
inline Report check_superset_inequality(const BlockSizes& t, const BlockSizes& b, MemoStore& memo) {
  if (t.size() != b.size()) throw Error(Errc::precondition_violated, "t and b must have equal length");
  for (auto x : b.sizes())
    if (x == 0) throw Error(Errc::precondition_violated, "b must be all positive");
  if (!is_feasible(b)) throw Error(Errc::precondition_violated, "b must satisfy 2 b_k <= sum b");
  std::vector<Size> sum(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) sum[k] = t[k] + b[k];
  BlockSizes bigger(sum);
  Count lhs = count_labeled(t, memo), rhs = count_labeled(bigger, memo);
  return {"thm44", t.str() + " + " + b.str(), lhs <= rhs, lhs.str(), rhs.str(), "", std::nullopt};
}

/// P(.., t_i + 1, ..) >= P(t) whenever some block is strictly larger than t_i.
inline Report check_increment_inequality(const BlockSizes& blocks, std::size_t i, MemoStore& memo) {
  if (i >= blocks.size()) throw Error(Errc::precondition_violated, "index out of range");
  if (blocks.max() <= blocks[i])
    throw Error(Errc::precondition_violated, "some block must be strictly larger than block " + std::to_string(i));
  Count lhs = count_labeled(blocks.with(i, blocks[i] + 1), memo), rhs = count_labeled(blocks, memo);
  return {"thm45", blocks.str() + " i=" + std::to_string(i), lhs >= rhs, lhs.str(), rhs.str(), "", std::nullopt};
}

inline constexpr std::uint64_t kPenriceLimit = 14;

/// (kn)! ((n-1)/n)^{kn} <= P(k, ..., k) <= ((kn - k)!)^{n/(n-1)} for n copies
/// of k, both sides compared after clearing denominators and roots:
///   (kn)! (n-1)^{kn} <= P n^{kn}   and   P^{n-1} <= ((kn - k)!)^n.
inline Report check_penrice_bounds(std::uint64_t k, std::uint64_t n, MemoStore& memo) {
  if (k < 1 || n < 2) throw Error(Errc::precondition_violated, "penrice bounds need k >= 1 and n >= 2");
  if (k * n > kPenriceLimit) throw Error(Errc::too_large, "penrice check limited to kn <= 14");
  const auto kn = static_cast<unsigned>(k * n);
  Count p = count_labeled(repeated(static_cast<Size>(k), n), memo);
  bool lower_ok = factorial(kn) * Count(n - 1).pow(kn) <= p * Count(n).pow(kn);
  Count top = factorial(kn - k);
  bool upper_ok = p.pow(static_cast<unsigned>(n - 1)) <= top.pow(static_cast<unsigned>(n));

  long double lower = factorial(kn).value().convert_to<long double>() *
                      std::pow(static_cast<long double>(n - 1) / n, static_cast<long double>(kn));
  long double upper = std::pow(top.value().convert_to<long double>(), static_cast<long double>(n) / (n - 1));
  std::ostringstream notes;
  notes << std::setprecision(6) << "lower~" << lower << " upper~" << upper << " lower_ok=" << detail::yes_no(lower_ok)
        << " upper_ok=" << detail::yes_no(upper_ok);
  return {"penrice",
          "k=" + std::to_string(k) + ",n=" + std::to_string(n),
          lower_ok && upper_ok,
          p.str(),
          "",
          notes.str(),
          std::nullopt};
}

struct ScanResult {
  BlockSizes base;
  std::vector<std::pair<Size, Count>> table;  // X -> P(X, base...)
  std::vector<Size> argmax;
  Count best;

  Report report() const {
    std::string arg;
    for (std::size_t i = 0; i < argmax.size(); ++i) arg += (i ? "," : "") + std::to_string(argmax[i]);
    return {"scan-x", base.str(), true, "", "", "argmax={" + arg + "}", best.str()};
  }
};

/// Tabulates P(X, t_1, ..., t_n) for X from max t_i to sum t_i and reports
/// every maximizing X.
inline ScanResult scan_best_extra_block(const BlockSizes& t, MemoStore& memo,
                                        double budget = kDefaultStateBudget) {
  auto hi = static_cast<Size>(t.total());
  require_within_budget(t.appended({hi}), budget);
  ScanResult r;
  r.base = t;
  for (Size x = t.max(); x <= hi; ++x) {
    std::vector<Size> s{x};
    s.insert(s.end(), t.sizes().begin(), t.sizes().end());
    Count p = count_labeled(BlockSizes(std::move(s)), memo);
    if (r.table.empty() || p > r.best) {
      r.best = p;
      r.argmax.clear();
    }
    if (p == r.best) r.argmax.push_back(x);
    r.table.emplace_back(x, std::move(p));
  }
  return r;
}

/// Majorization checks (P and P') over every ordered pair of partitions of m related by
/// majorization, labeled and unlabeled.
inline std::vector<Report> sweep_majorization(Size m, MemoStore& memo) {
  std::vector<Report> out;
  auto parts = partitions(m);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      if (!majorizes(a, b)) continue;
      out.push_back(check_majorization_inequality(a, b, true, memo));
      out.push_back(check_majorization_inequality(a, b, false, memo));
    }
  return out;
}

/// Single-transfer check for every partition of m and every admissible ordered index pair.
inline std::vector<Report> sweep_transfer(Size m, MemoStore& memo) {
  std::vector<Report> out;
  for (const auto& p : partitions(m))
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (i != j && p[i] >= p[j] && p[j] >= 1) out.push_back(check_transfer_inequality(p, i, j, memo));
  return out;
}

}  // namespace gdkit
