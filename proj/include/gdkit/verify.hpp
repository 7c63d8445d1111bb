#pragma once

#include <string>
#include <vector>

#include "gdkit/modular.hpp"
#include "gdkit/oracle.hpp"
#include "gdkit/order.hpp"
#include "gdkit/reduction.hpp"

// Exhaustive sweeps behind `gdkit verify`. Each returns one Report per
// instance, in enumeration order.

namespace gdkit {

/// Pairing counts against brute-force partial injections, t1, t2 <= max_t.
inline std::vector<Report> verify_pairing_counts(Size max_t) {
  if (2 * std::uint64_t{max_t} > oracle::kInjectionLimit)
    throw Error(Errc::too_large, "lemma31 sweep limited to max_t <= 5");
  std::vector<Report> out;
  for (Size t1 = 0; t1 <= max_t; ++t1)
    for (Size t2 = 0; t2 <= max_t; ++t2)
      for (Size l = 0; l <= t1 + t2; ++l) {
        Count formula = pairing_count(t1, t2, l), brute = oracle::partial_injection_count(t1, t2, l);
        out.push_back({"lemma31",
                       "t1=" + std::to_string(t1) + ",t2=" + std::to_string(t2) + ",l=" + std::to_string(l),
                       formula == brute, formula.str(), brute.str(), "", std::nullopt});
      }
  return out;
}

/// Merge identity against the direct count for every composition with total
/// at most max_sum and every ordered pair of distinct blocks.
inline std::vector<Report> verify_merge_identity(Size max_sum, MemoStore& memo) {
  std::vector<Report> out;
  for (Size s = 0; s <= max_sum; ++s)
    for (const auto& c : compositions(s))
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (i == j) continue;
          Count merged = merge_count(c, i, j, memo), direct = count_labeled(c, memo);
          out.push_back({"thm33", c.str() + " i=" + std::to_string(i) + " j=" + std::to_string(j), merged == direct,
                         merged.str(), direct.str(), "", std::nullopt});
        }
  return out;
}

/// Binary-digit parity criterion and the odd-class product against P' mod 2
/// for every partition with total at most max_sum.
inline std::vector<Report> verify_parity(Size max_sum, MemoStore& memo) {
  std::vector<Report> out;
  for (Size s = 0; s <= max_sum; ++s)
    for (const auto& p : partitions(s)) {
      bool predicted = parity_unlabeled(p).odd;
      bool classes = odd_class_count(p).is_odd();
      Count value = count_unlabeled(p, memo);
      out.push_back({"thm52", p.str(), predicted == value.is_odd() && classes == value.is_odd(),
                     predicted ? "odd" : "even", value.is_odd() ? "odd" : "even", "P'=" + value.str(), std::nullopt});
    }
  return out;
}

/// Superset inequality for all t, b of length 2 and 3 with totals at most
/// max_sum, b positive and feasible.
inline std::vector<Report> verify_superset(Size max_sum, MemoStore& memo) {
  std::vector<Report> out;
  for (std::size_t n = 2; n <= 3; ++n) {
    auto vecs = bounded_vectors(n, max_sum);
    for (const auto& b : vecs) {
      if (b.canonical().size() != n || !is_feasible(b)) continue;
      for (const auto& t : vecs) out.push_back(check_superset_inequality(t, b, memo));
    }
  }
  return out;
}

/// Increment inequality for all vectors of length 2..4 with total at most
/// max_sum and every index below the maximum.
inline std::vector<Report> verify_increment(Size max_sum, MemoStore& memo) {
  std::vector<Report> out;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& t : bounded_vectors(n, max_sum))
      for (std::size_t i = 0; i < n; ++i)
        if (t[i] < t.max()) out.push_back(check_increment_inequality(t, i, memo));
  return out;
}

inline std::vector<Report> verify_penrice(std::uint64_t max_kn, MemoStore& memo) {
  if (max_kn > kPenriceLimit) throw Error(Errc::too_large, "penrice sweep limited to kn <= 14");
  std::vector<Report> out;
  for (std::uint64_t n = 2; n <= max_kn; ++n)
    for (std::uint64_t k = 1; k * n <= max_kn; ++k) out.push_back(check_penrice_bounds(k, n, memo));
  return out;
}

}  // namespace gdkit
