#pragma once

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "gdkit/cache_file.hpp"
#include "gdkit/counting.hpp"
#include "gdkit/modular.hpp"
#include "gdkit/order.hpp"
#include "gdkit/report.hpp"
#include "gdkit/sampler.hpp"
#include "gdkit/verify.hpp"

// The `gdkit` command line: count, verify, sample, scan-x.
//
// Exit codes: 0 success / all claims hold, 1 a claim failed, 2 usage or
// parameter error, 3 corrupt cache file, 4 infeasible blocks, 5 compute
// guard exceeded.

namespace gdkit::cli {

enum Exit : int {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kCacheCorrupt = 3,
  kInfeasible = 4,
  kGuard = 5,
};

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::cache_corrupt: return kCacheCorrupt;
    case Errc::infeasible: return kInfeasible;
    case Errc::too_large:
    case Errc::window_too_small: return kGuard;
    case Errc::negative_result: return kClaimFailed;
    default: return kUsage;
  }
}

namespace detail {

using nlohmann::json;

inline json blocks_json(const BlockSizes& b) { return json(b.sizes()); }

inline json stats_json(const MemoStats& s) {
  return {{"p_entries", s.p_entries},         {"g_entries", s.g_entries}, {"p_evaluations", s.p_evaluations},
          {"g_evaluations", s.g_evaluations}, {"hits", s.hits}};
}

inline std::string stats_text(const MemoStats& s) {
  return "memo: p_entries=" + std::to_string(s.p_entries) + " g_entries=" + std::to_string(s.g_entries) +
         " p_evaluations=" + std::to_string(s.p_evaluations) + " g_evaluations=" + std::to_string(s.g_evaluations) +
         " hits=" + std::to_string(s.hits);
}

inline void emit_json(std::ostream& out, const std::string& command, json input, const std::vector<Report>& results,
                      std::optional<json> extra = std::nullopt) {
  json doc{{"command", command}, {"input", std::move(input)}, {"results", results}};
  if (extra) doc["stats"] = *extra;
  out << doc.dump(2) << '\n';
}

inline std::string report_line(const Report& r) {
  std::string line = std::string(r.holds ? "PASS " : "FAIL ") + r.claim_id + " " + r.instance;
  if (!r.lhs.empty() || !r.rhs.empty()) line += " lhs=" + r.lhs + " rhs=" + r.rhs;
  if (r.value) line += " value=" + *r.value;
  if (!r.notes.empty()) line += " (" + r.notes + ")";
  return line;
}

/// Loads the cache named by --cache or GDKIT_CACHE, runs `body`, saves.
class CacheSession {
 public:
  explicit CacheSession(std::string path) : path_(std::move(path)) {
    if (!path_.empty()) cache::load_file(path_, memo_);
    memo_.reset_counters();
  }
  MemoStore& memo() { return memo_; }
  void save() {
    if (!path_.empty()) cache::save_file(memo_, path_);
  }

 private:
  std::string path_;
  MemoStore memo_;
};

inline std::string default_cache_path() {
  const char* env = std::getenv("GDKIT_CACHE");
  return env ? std::string(env) : std::string();
}

}  // namespace detail

struct CountOptions {
  std::string blocks;
  bool labeled = false;
  std::optional<std::uint64_t> mod;
  std::string cache;
  std::string format = "text";
  bool stats = false;
};

inline int cmd_count(const CountOptions& o, std::ostream& out, std::ostream& err) {
  BlockSizes blocks = parse_blocks(o.blocks);
  if (o.mod && *o.mod == 0) throw Error(Errc::precondition_violated, "--mod must be positive");
  detail::CacheSession session(o.cache);
  Count value = o.labeled ? count_labeled(blocks, session.memo()) : count_unlabeled(blocks, session.memo());
  auto stats = session.memo().stats();
  session.save();

  std::string shown = o.mod ? std::to_string(value.mod(*o.mod)) : value.str();
  if (o.format == "json") {
    nlohmann::json input{{"blocks", detail::blocks_json(blocks)},
                         {"canonical", blocks.canonical()},
                         {"labeled", o.labeled},
                         {"mod", o.mod ? nlohmann::json(*o.mod) : nlohmann::json(nullptr)}};
    Report r{"count", blocks.str(), true, "", "", o.labeled ? "P (labeled)" : "P' (unlabeled)", shown};
    if (o.mod) r.notes += " mod " + std::to_string(*o.mod);
    detail::emit_json(out, "count", std::move(input), {r},
                      o.stats ? std::optional(detail::stats_json(stats)) : std::nullopt);
  } else {
    out << shown << '\n';
    if (o.stats) err << detail::stats_text(stats) << '\n';
  }
  return kOk;
}

struct VerifyOptions {
  std::string suite;
  Size sum = 8;
  Size max_sum = 0;  // 0 = suite default
  std::uint64_t p = 0, n = 0, k = 0, m = 0, l = 0;
  std::string t;
  Size max_t = 4;
  std::uint64_t max_kn = 14;
  std::string format = "text";
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"thm41", "thm42", "thm44", "thm45",   "thm51", "thm52",  "thm53",
                                               "cor51", "cor52", "cor53", "lemma31", "thm33", "penrice"};
  return suites;
}

inline std::vector<Report> run_suite(const VerifyOptions& o, MemoStore& memo) {
  auto need = [&](std::uint64_t v, const char* name) {
    if (v == 0) throw Error(Errc::precondition_violated, std::string("suite ") + o.suite + " needs a positive --" + name);
    return v;
  };
  auto max_sum_or = [&](Size fallback) { return o.max_sum ? o.max_sum : fallback; };
  const auto& s = o.suite;
  if (s == "thm41") return sweep_transfer(o.sum, memo);
  if (s == "thm42") return sweep_majorization(o.sum, memo);
  if (s == "thm44") return verify_superset(max_sum_or(6), memo);
  if (s == "thm45") return verify_increment(max_sum_or(8), memo);
  if (s == "thm51") return {check_theorem_5_1(need(o.p, "p"), need(o.n, "n"), memo)};
  if (s == "thm52") return verify_parity(max_sum_or(12), memo);
  if (s == "thm53")
    return {check_theorem_5_3(parse_blocks(o.t), static_cast<Size>(need(o.k, "k")), need(o.n, "n"), memo)};
  if (s == "cor51")
    return {check_corollary_5_1(static_cast<Size>(need(o.k, "k")), need(o.m, "m"), need(o.n, "n"), memo)};
  if (s == "cor52")
    return {check_corollary_5_2(static_cast<Size>(need(o.k, "k")), need(o.m, "m"), need(o.n, "n"), memo)};
  if (s == "cor53")
    return {check_corollary_5_3(static_cast<Size>(need(o.k, "k")), need(o.n, "n"), need(o.l, "l"), memo)};
  if (s == "lemma31") return verify_pairing_counts(o.max_t);
  if (s == "thm33") return verify_merge_identity(max_sum_or(9), memo);
  if (s == "penrice") return verify_penrice(o.max_kn, memo);
  throw Error(Errc::precondition_violated, "unknown suite " + s);
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream&) {
  MemoStore memo;
  auto reports = run_suite(o, memo);
  if (o.format == "json") {
    nlohmann::json input{{"suite", o.suite}};
    detail::emit_json(out, "verify", std::move(input), reports);
  } else {
    std::size_t held = 0;
    for (const auto& r : reports) {
      out << detail::report_line(r) << '\n';
      held += r.holds;
    }
    out << held << "/" << reports.size() << " hold\n";
  }
  return all_hold(reports) ? kOk : kClaimFailed;
}

struct SampleOptions {
  std::string blocks;
  std::string method = "pairing";
  std::uint64_t seed = 0;
  std::size_t count = 1;
  bool labeled = false;
  std::string format = "text";
};

inline std::string assignment_str(const GdAssignment& gd) {
  std::string out;
  for (std::size_t e = 0; e < gd.image.size(); ++e) {
    auto [b, i] = gd.element(e);
    auto [b2, i2] = gd.element(gd.image[e]);
    if (e) out += ' ';
    out += std::to_string(b + 1) + "." + std::to_string(i + 1) + "->" + std::to_string(b2 + 1) + "." +
           std::to_string(i2 + 1);
  }
  return out;
}

inline int cmd_sample(const SampleOptions& o, std::ostream& out, std::ostream& err) {
  BlockSizes blocks = parse_blocks(o.blocks);
  if (!is_feasible(blocks)) {
    err << "infeasible: blocks (" << blocks.str() << ") fail the test 2*t_k <= sum t_i (2*" << blocks.max() << " > "
        << blocks.total() << ")\n";
    return kInfeasible;
  }
  std::mt19937_64 rng(o.seed);
  std::vector<Report> reports;
  for (std::size_t s = 0; s < o.count; ++s) {
    GdAssignment gd = o.method == "uniform" ? sample_gd_uniform(blocks, rng)
                      : o.method == "greedy" ? construct_gd_greedy(blocks)
                                             : construct_gd_pairing(blocks);
    std::string shown = o.labeled ? assignment_str(gd) : word_str(project_to_afl(gd));
    reports.push_back({"sample", blocks.str(), gd.is_valid(), "", "", o.method, shown});
  }
  if (o.format == "json") {
    nlohmann::json input{{"blocks", detail::blocks_json(blocks)},
                         {"canonical", blocks.canonical()},
                         {"method", o.method},
                         {"seed", o.seed},
                         {"count", o.count},
                         {"labeled", o.labeled}};
    detail::emit_json(out, "sample", std::move(input), reports);
  } else {
    for (const auto& r : reports) out << *r.value << '\n';
  }
  return all_hold(reports) ? kOk : kClaimFailed;
}

inline int cmd_scan_x(const std::string& blocks_text, const std::string& format, std::ostream& out) {
  BlockSizes blocks = parse_blocks(blocks_text);
  MemoStore memo;
  ScanResult scan = scan_best_extra_block(blocks, memo);
  std::vector<Report> reports;
  for (const auto& [x, p] : scan.table)
    reports.push_back({"scan-x-row", "X=" + std::to_string(x), true, "", "", "", p.str()});
  reports.push_back(scan.report());
  if (format == "json") {
    nlohmann::json input{{"blocks", detail::blocks_json(blocks)}, {"canonical", blocks.canonical()}};
    detail::emit_json(out, "scan-x", std::move(input), reports);
  } else {
    for (const auto& [x, p] : scan.table) out << "X=" << x << ": " << p << '\n';
    out << "argmax {";
    for (std::size_t i = 0; i < scan.argmax.size(); ++i) out << (i ? "," : "") << scan.argmax[i];
    out << "} P=" << scan.best << '\n';
  }
  return kOk;
}

/// Parses `args` (program name first) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, checks, and samplers for generalized derangements and anagrams without fixed letters",
               "gdkit"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  CountOptions count_opts;
  count_opts.cache = detail::default_cache_path();
  bool stats_flag = false;
  auto* count = app.add_subcommand("count", "Count AFLs (P') or, with --labeled, GDs (P)");
  count->add_option("--blocks", count_opts.blocks, "Comma-separated block sizes")->required();
  count->add_flag("--labeled", count_opts.labeled, "Count labeled generalized derangements");
  std::uint64_t mod = 0;
  auto* mod_opt = count->add_option("--mod", mod, "Print the residue modulo this value");
  count->add_option("--cache", count_opts.cache, "Memo cache file (default: $GDKIT_CACHE)");
  count->add_option("--format", count_opts.format)->check(CLI::IsMember(formats));
  count->add_flag("--stats", stats_flag, "Report memo statistics");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("suite", verify_opts.suite)->required()->check(CLI::IsMember(verify_suites()));
  verify->add_option("--sum", verify_opts.sum, "Total size for thm41/thm42");
  verify->add_option("--max-sum", verify_opts.max_sum, "Largest total for thm33/thm44/thm45/thm52");
  verify->add_option("--p", verify_opts.p);
  verify->add_option("--n", verify_opts.n);
  verify->add_option("--k", verify_opts.k);
  verify->add_option("--m", verify_opts.m);
  verify->add_option("--l", verify_opts.l);
  verify->add_option("--t", verify_opts.t, "Block sizes for thm53");
  verify->add_option("--max-t", verify_opts.max_t, "Largest block for lemma31");
  verify->add_option("--max-kn", verify_opts.max_kn, "Largest kn for penrice");
  verify->add_option("--format", verify_opts.format)->check(CLI::IsMember(formats));

  SampleOptions sample_opts;
  auto* sample = app.add_subcommand("sample", "Construct or sample generalized derangements");
  sample->add_option("--blocks", sample_opts.blocks)->required();
  sample->add_option("--method", sample_opts.method)->check(CLI::IsMember({"pairing", "greedy", "uniform"}));
  sample->add_option("--seed", sample_opts.seed);
  sample->add_option("--count", sample_opts.count);
  sample->add_flag("--labeled", sample_opts.labeled, "Print full assignments instead of anagrams");
  sample->add_option("--format", sample_opts.format)->check(CLI::IsMember(formats));

  std::string scan_blocks, scan_format = "text";
  auto* scan = app.add_subcommand("scan-x", "Tabulate P(X, blocks) and report the maximizing X");
  scan->add_option("--blocks", scan_blocks)->required();
  scan->add_option("--format", scan_format)->check(CLI::IsMember(formats));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) {
      if (*mod_opt) count_opts.mod = mod;
      count_opts.stats = stats_flag;
      return cmd_count(count_opts, out, err);
    }
    if (*verify) return cmd_verify(verify_opts, out, err);
    if (*sample) return cmd_sample(sample_opts, out, err);
    if (*scan) return cmd_scan_x(scan_blocks, scan_format, out);
  } catch (const Error& e) {
    err << "gdkit: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace gdkit::cli
