#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gdkit/core_arith.hpp"
#include "gdkit/counting.hpp"
#include "gdkit/report.hpp"

namespace gdkit {

/// For every bit position x, the indices i with bit x set in t_i.
struct ParityWitness {
  std::vector<std::vector<std::size_t>> level_sets;  // level_sets[x] = L_x

  std::vector<unsigned> per_level_parity() const {
    std::vector<unsigned> out;
    out.reserve(level_sets.size());
    for (const auto& l : level_sets) out.push_back(static_cast<unsigned>(l.size() % 2));
    return out;
  }

  /// sum over x of |L_x| 2^x, which is the total block size.
  std::uint64_t reconstruct_total() const {
    std::uint64_t s = 0;
    for (std::size_t x = 0; x < level_sets.size(); ++x) s += level_sets[x].size() << x;
    return s;
  }
};

struct ParityResult {
  bool odd = false;
  ParityWitness witness;
};

inline ParityWitness parity_witness(const BlockSizes& blocks) {
  ParityWitness w;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (auto x : bit_support(blocks[i]).positions) {
      if (w.level_sets.size() <= x) w.level_sets.resize(x + 1);
      w.level_sets[x].push_back(i);
    }
  }
  return w;
}

/// P' is odd iff every bit position is set in an even number of the t_i.
inline ParityResult parity_unlabeled(const BlockSizes& blocks) {
  ParityResult r{true, parity_witness(blocks)};
  for (const auto& l : r.witness.level_sets)
    if (l.size() % 2) r.odd = false;
  return r;
}

/// Number of AFL classes whose members are counted an odd number of times:
/// the product over bit positions x of d(|L_x|). Positions above the highest
/// set bit have L_x empty and contribute d(0) = 1.
inline Count odd_class_count(const BlockSizes& blocks) {
  auto w = parity_witness(blocks);
  std::size_t widest = 0;
  for (const auto& l : w.level_sets) widest = std::max(widest, l.size());
  auto d = derangement_table(widest);
  Count r = 1;
  for (const auto& l : w.level_sets) r *= d[l.size()];
  return r;
}

inline constexpr std::uint64_t kPrimeLimit = 100;

/// P'(p, ..., p) = P'(1, ..., 1) (mod p^3) for prime p, n copies.
inline Report check_theorem_5_1(std::uint64_t p, std::uint64_t n, MemoStore& memo) {
  if (p > kPrimeLimit) throw Error(Errc::too_large, "primality check limited to p <= 100");
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(Errc::precondition_violated, "n must be positive");
  auto blocks = repeated(static_cast<Size>(p), n);
  require_within_budget(blocks);
  Count lhs = count_unlabeled(blocks, memo);
  Count rhs = count_unlabeled(repeated(1, n), memo);
  std::uint64_t mod = p * p * p;
  std::uint64_t a = lhs.mod(mod), b = rhs.mod(mod);
  return {"thm51",
          "p=" + std::to_string(p) + ",n=" + std::to_string(n),
          a == b,
          lhs.str(),
          rhs.str(),
          "residues " + std::to_string(a) + " vs " + std::to_string(b) + " mod " + std::to_string(mod),
          std::nullopt};
}

/// The composite modulus example: P'(6,6,6) - P'(1,1,1) = 15182, not divisible by 6.
inline Report check_composite_counterexample(MemoStore& memo) {
  Count lhs = count_unlabeled(BlockSizes{6, 6, 6}, memo);
  Count rhs = count_unlabeled(BlockSizes{1, 1, 1}, memo);
  Count diff = lhs - rhs;
  bool holds = diff == Count(15182) && diff.mod(6) != 0;
  return {"thm51-composite", "p=6,n=3", holds, lhs.str(), rhs.str(),
          "difference mod 6 = " + std::to_string(diff.mod(6)), diff.str()};
}

/// P'(t_1, .., t_m, k x n) = P'(t_1, .., t_m) P'(k x n) (mod n).
inline Report check_theorem_5_3(const BlockSizes& t, Size k, std::uint64_t n, MemoStore& memo) {
  if (k < 1 || n < 1) throw Error(Errc::precondition_violated, "k and n must be positive");
  std::vector<Size> all = t.sizes();
  all.insert(all.end(), n, k);
  BlockSizes combined(all);
  require_within_budget(combined);
  Count lhs = count_unlabeled(combined, memo);
  Count rhs = count_unlabeled(t, memo) * count_unlabeled(repeated(k, n), memo);
  std::uint64_t a = lhs.mod(n), b = rhs.mod(n);
  return {"thm53",
          "t=" + t.str() + ",k=" + std::to_string(k) + ",n=" + std::to_string(n),
          a == b,
          lhs.str(),
          rhs.str(),
          "residues " + std::to_string(a) + " vs " + std::to_string(b) + " mod " + std::to_string(n),
          std::nullopt};
}

/// P'(k x (m + n)) = P'(k x m) P'(k x n) (mod lcm(m, n)).
inline Report check_corollary_5_1(Size k, std::uint64_t m, std::uint64_t n, MemoStore& memo) {
  if (k < 1 || m < 1 || n < 1) throw Error(Errc::precondition_violated, "k, m, n must be positive");
  require_within_budget(repeated(k, m + n));
  Count lhs = count_unlabeled(repeated(k, m + n), memo);
  Count rhs = count_unlabeled(repeated(k, m), memo) * count_unlabeled(repeated(k, n), memo);
  std::uint64_t mod = std::lcm(m, n);
  std::uint64_t a = lhs.mod(mod), b = rhs.mod(mod);
  return {"cor51",
          "k=" + std::to_string(k) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n),
          a == b,
          lhs.str(),
          rhs.str(),
          "residues " + std::to_string(a) + " vs " + std::to_string(b) + " mod " + std::to_string(mod),
          std::nullopt};
}

/// With m = n t + r, t = floor(m / n), r = m mod n:
/// P'(k x m) = P'(k x r) P'(k x n)^t (mod n).
inline Report check_corollary_5_2(Size k, std::uint64_t m, std::uint64_t n, MemoStore& memo) {
  if (k < 1 || m < 1 || n < 1) throw Error(Errc::precondition_violated, "k, m, n must be positive");
  require_within_budget(repeated(k, std::max(m, n)));
  std::uint64_t t = m / n, r = m % n;
  Count lhs = count_unlabeled(repeated(k, m), memo);
  Count rhs = count_unlabeled(repeated(k, r), memo) * count_unlabeled(repeated(k, n), memo).pow(static_cast<unsigned>(t));
  std::uint64_t a = lhs.mod(n), b = rhs.mod(n);
  return {"cor52",
          "k=" + std::to_string(k) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n),
          a == b,
          lhs.str(),
          rhs.str(),
          "t=" + std::to_string(t) + " r=" + std::to_string(r) + " residues " + std::to_string(a) + " vs " +
              std::to_string(b) + " mod " + std::to_string(n),
          std::nullopt};
}

/// n divides P'(k x (l n + 1)).
inline Report check_corollary_5_3(Size k, std::uint64_t n, std::uint64_t l, MemoStore& memo) {
  if (k < 1 || n < 1 || l < 1) throw Error(Errc::precondition_violated, "k, n, l must be positive");
  auto blocks = repeated(k, l * n + 1);
  require_within_budget(blocks);
  Count value = count_unlabeled(blocks, memo);
  return {"cor53",
          "k=" + std::to_string(k) + ",n=" + std::to_string(n) + ",l=" + std::to_string(l),
          value.mod(n) == 0,
          value.str(),
          std::to_string(n),
          "residue " + std::to_string(value.mod(n)),
          std::nullopt};
}

inline std::vector<Report> check_corollaries_5_1_to_5_3(Size k, std::uint64_t m, std::uint64_t n, std::uint64_t l,
                                                        MemoStore& memo) {
  return {check_corollary_5_1(k, m, n, memo), check_corollary_5_2(k, m, n, memo), check_corollary_5_3(k, n, l, memo)};
}

struct PeriodResult {
  std::uint64_t modulus = 1;
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::vector<std::uint64_t> cycle;     // residues a_preperiod .. a_{preperiod+period-1}
  std::vector<std::uint64_t> residues;  // a_0 .. a_max_m
};

/// Eventual period of a_m = P'(k x m) mod modulus over m = 0..max_m.
///
/// States are residue windows (a_m, .., a_{m+w-1}); for w = 1, 2, .. the first
/// repeated state proposes (preperiod, period), which is accepted only if the
/// whole remaining window agrees and spans at least two full periods.
inline PeriodResult detect_period(Size k, std::uint64_t modulus, std::size_t max_m, MemoStore& memo) {
  if (k < 1 || modulus < 1 || max_m < 1) throw Error(Errc::precondition_violated, "k, modulus, max_m must be positive");
  require_within_budget(repeated(k, max_m));
  PeriodResult r;
  r.modulus = modulus;
  for (std::size_t m = 0; m <= max_m; ++m) r.residues.push_back(count_unlabeled(repeated(k, m), memo).mod(modulus));
  const auto& a = r.residues;
  const std::size_t len = a.size();

  auto consistent = [&](std::size_t start, std::size_t period) {
    if (len - start < 2 * period) return false;
    for (std::size_t m = start; m + period < len; ++m)
      if (a[m] != a[m + period]) return false;
    return true;
  };

  for (std::size_t w = 1; w < len; ++w) {
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    for (std::size_t m = 0; m + w <= len; ++m) {
      std::vector<std::uint64_t> state(a.begin() + static_cast<std::ptrdiff_t>(m),
                                       a.begin() + static_cast<std::ptrdiff_t>(m + w));
      auto [it, fresh] = seen.emplace(std::move(state), m);
      if (fresh) continue;
      std::size_t start = it->second, period = m - it->second;
      if (!consistent(start, period)) break;
      while (start > 0 && a[start - 1] == a[start - 1 + period]) --start;
      r.preperiod = start;
      r.period = period;
      r.cycle.assign(a.begin() + static_cast<std::ptrdiff_t>(start),
                     a.begin() + static_cast<std::ptrdiff_t>(start + period));
      return r;
    }
  }
  throw Error(Errc::window_too_small, "no period confirmed within m <= " + std::to_string(max_m));
}

}  // namespace gdkit
