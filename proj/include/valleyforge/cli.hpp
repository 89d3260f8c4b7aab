#pragma once

// Command-line front end. Kept header-only so the same entry point drives
// both the `valleyforge` binary and the CLI tests.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "valleyforge/cache.hpp"
#include "valleyforge/dyck_path.hpp"
#include "valleyforge/eco.hpp"
#include "valleyforge/error.hpp"
#include "valleyforge/identity.hpp"
#include "valleyforge/oracle.hpp"
#include "valleyforge/series.hpp"
#include "valleyforge/verify.hpp"
#include "valleyforge/version.hpp"

namespace valleyforge::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

enum class Format { plain, json, csv };

struct RunConfig {
  Format format = Format::plain;
  std::optional<std::string> cache_path;
  std::size_t cap = default_oracle_cap;
};

/// Inclusive integer range written "4..7" or "4".
struct IntRange {
  int lo = 0;
  int hi = 0;
};

inline IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size())
      throw error(errc::domain_violation, "bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  IntRange r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw error(errc::domain_violation, "empty range '" + text + "'");
  return r;
}

namespace detail {

inline std::string join(const std::vector<BigInt>& values, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += values[i].str();
  }
  return s;
}

inline std::optional<ResultCache> open_cache(const RunConfig& cfg) {
  if (cfg.cache_path) return ResultCache(*cfg.cache_path);
  return std::nullopt;
}

// count ---------------------------------------------------------------------

struct CountArgs {
  int h = 0, k = 0;
  std::size_t n = 0;
  std::string method = "brute";
  bool cross_check = false;
};

inline BigCount count_by(const std::string& method, const ClassParams& p, std::size_t n,
                         const RunConfig& cfg, ResultCache* cache) {
  if (method == "brute") {
    if (cache)
      if (auto hit = cache->lookup(p.h, p.k, n)) return *hit;
    auto v = brute_count(p, n, cfg.cap);
    if (cache) cache->store(p.h, p.k, n, v);
    return v;
  }
  if (method == "eco") {
    valleyforge::detail::require_within_cap(n, cfg.cap);
    return eco_counts(p, n).back();
  }
  if (method == "rule") return total(rule_counts(p, n));
  return f_series(p, n)[n];
}

inline int cmd_count(const CountArgs& a, const RunConfig& cfg, std::ostream& out,
                     std::ostream& err) {
  const ClassParams p(a.h, a.k);
  if (a.method != "brute") p.require_eco_supported();
  auto cache = open_cache(cfg);
  ResultCache* cache_ptr = cache ? &*cache : nullptr;
  const BigCount value = count_by(a.method, p, a.n, cfg, cache_ptr);

  int code = kSuccess;
  if (a.cross_check) {
    std::vector<std::string> routes;
    if (a.n <= cfg.cap) routes.push_back("brute");
    if (p.eco_supported()) {
      if (a.n <= cfg.cap) routes.push_back("eco");
      routes.push_back("rule");
      routes.push_back("series");
    }
    for (const auto& r : routes) {
      const auto other = count_by(r, p, a.n, cfg, nullptr);
      if (other != value) {
        err << "disagreement: " << a.method << " = " << value << ", " << r << " = " << other
            << '\n';
        code = kVerificationFailure;
      }
    }
  }

  switch (cfg.format) {
    case Format::plain: out << value << '\n'; break;
    case Format::json:
      out << nlohmann::json{{"h", a.h}, {"k", a.k}, {"n", a.n}, {"method", a.method},
                            {"count", value.str()}}
                 .dump()
          << '\n';
      break;
    case Format::csv:
      out << "h,k,n,method,count\n"
          << a.h << ',' << a.k << ',' << a.n << ',' << a.method << ',' << value << '\n';
      break;
  }
  if (cache) cache->save();
  return code;
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  int h = 0, k = 0;
  std::size_t n = 0;
};

inline int cmd_generate(const GenerateArgs& a, const RunConfig& cfg, std::ostream& out) {
  const ClassParams p(a.h, a.k);
  p.require_eco_supported();
  valleyforge::detail::require_within_cap(a.n, cfg.cap);
  const auto paths = generate(p, a.n, valleyforge::detail::default_workers());
  if (cfg.format == Format::csv) out << "word,height,label\n";
  for (const auto& path : paths) {
    switch (cfg.format) {
      case Format::plain: out << path.word() << '\n'; break;
      case Format::json:
        out << nlohmann::json{{"word", path.word()},
                              {"height", height(path)},
                              {"label", label_of(path, p).to_string()}}
                   .dump()
            << '\n';
        break;
      case Format::csv:
        out << path.word() << ',' << height(path) << ',' << label_of(path, p).to_string() << '\n';
        break;
    }
  }
  return kSuccess;
}

// series --------------------------------------------------------------------

struct SeriesArgs {
  int h = 0, k = 0;
  std::size_t order = 10;
  bool show_components = false;
};

inline int cmd_series(const SeriesArgs& a, const RunConfig& cfg, std::ostream& out) {
  const ClassParams p(a.h, a.k);
  p.require_eco_supported();
  const auto F = solve_series(p, a.order);
  const auto f = f_from_components(F, p.k);
  const auto S = build_S(p.h, p.k);

  switch (cfg.format) {
    case Format::plain:
      out << join(f.coeffs(), " ") << '\n';
      if (a.show_components) {
        out << "S^(" << p.h << "," << p.k << ") = " << S.to_string() << '\n';
        for (std::size_t i = 0; i < F.size(); ++i)
          out << "F_" << i + 1 << " = " << join(F[i].coeffs(), " ") << '\n';
      }
      break;
    case Format::json: {
      nlohmann::json j{{"h", p.h}, {"k", p.k}, {"order", a.order}, {"coefficients", to_json(f)}};
      if (a.show_components) {
        j["S"] = to_json(S);
        j["F"] = nlohmann::json::array();
        for (const auto& Fi : F) j["F"].push_back(to_json(Fi));
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "n,D";
      if (a.show_components) {
        out << ",S";
        for (std::size_t i = 0; i < F.size(); ++i) out << ",F_" << i + 1;
      }
      out << '\n';
      for (std::size_t n = 0; n <= a.order; ++n) {
        out << n << ',' << f[n];
        if (a.show_components) {
          out << ',' << S[n];
          for (const auto& Fi : F) out << ',' << Fi[n];
        }
        out << '\n';
      }
      break;
  }
  return kSuccess;
}

// identity ------------------------------------------------------------------

struct IdentityArgs {
  int h_min = 4, h_max = 4;
};

inline int cmd_identity(const IdentityArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (a.h_min < 4 || a.h_min > a.h_max)
    throw error(errc::domain_violation, "need 4 <= h-min <= h-max");
  std::vector<IdentityReport> reports;
  for (int h = a.h_min; h <= a.h_max; ++h) reports.push_back(check_catalan_recurrence(h));
  const bool all = std::all_of(reports.begin(), reports.end(),
                               [](const IdentityReport& r) { return r.passed(); });

  switch (cfg.format) {
    case Format::plain:
      for (const auto& r : reports) {
        out << "h=" << r.h << " n=" << r.n_range.first << ".." << r.n_range.second << ' '
            << (r.passed() ? "pass" : "FAIL") << '\n';
        for (const auto& f : r.failures)
          out << "  n=" << f.n << " C_n=" << f.lhs << " recurrence=" << f.rhs << '\n';
      }
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "h,n_lo,n_hi,passed\n";
      for (const auto& r : reports)
        out << r.h << ',' << r.n_range.first << ',' << r.n_range.second << ','
            << (r.passed() ? "true" : "false") << '\n';
      break;
  }
  return all ? kSuccess : kVerificationFailure;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string h_range = "4..7";
  std::string k_range = "3..5";
  std::size_t n_max = 12;
  unsigned workers = 0;  // 0 = hardware concurrency
};

inline int cmd_verify(const VerifyArgs& a, const RunConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  const auto hr = parse_range(a.h_range);
  const auto kr = parse_range(a.k_range);
  GridSpec grid{hr.lo, hr.hi, kr.lo, kr.hi, a.n_max, cfg.cap,
                a.workers ? a.workers : valleyforge::detail::default_workers()};
  auto cache = open_cache(cfg);
  const auto cells = verify_grid(grid, cache ? &*cache : nullptr);
  if (cache) cache->save();

  std::size_t bad = 0;
  switch (cfg.format) {
    case Format::plain:
      out << "h k n eco rule series brute status\n";
      for (const auto& c : cells)
        out << c.h << ' ' << c.k << ' ' << c.n << ' ' << c.eco << ' ' << c.rule << ' '
            << c.series << ' ' << c.brute << ' ' << (c.agree() ? "ok" : "MISMATCH") << '\n';
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& c : cells)
        arr.push_back({{"h", c.h},
                       {"k", c.k},
                       {"n", c.n},
                       {"eco", c.eco.str()},
                       {"rule", c.rule.str()},
                       {"series", c.series.str()},
                       {"brute", c.brute.str()},
                       {"agree", c.agree()}});
      out << arr.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "h,k,n,eco,rule,series,brute,agree\n";
      for (const auto& c : cells)
        out << c.h << ',' << c.k << ',' << c.n << ',' << c.eco << ',' << c.rule << ','
            << c.series << ',' << c.brute << ',' << (c.agree() ? "true" : "false") << '\n';
      break;
  }
  for (const auto& c : cells) {
    if (c.agree()) continue;
    ++bad;
    err << "mismatch at h=" << c.h << " k=" << c.k << " n=" << c.n << ": eco=" << c.eco
        << " rule=" << c.rule << " series=" << c.series << " brute=" << c.brute << '\n';
  }
  return bad == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 on a verification failure, 2 on a usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count, generate and cross-verify Dyck paths of bounded height avoiding "
               "runs of valleys just below the top",
               "valleyforge"};
  // Subcommands take --h for the height bound, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", version);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "plain";
  bool json_flag = false;
  std::string cache_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_flag("--json", json_flag, "Shorthand for --format json");
  app.add_option("--cache", cache_path, "Results cache file (or VALLEYFORGE_CACHE)")
      ->envname("VALLEYFORGE_CACHE");
  app.add_option("--cap", cfg.cap, "Largest semilength for exhaustive routes")
      ->check(CLI::NonNegativeNumber);

  detail::CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print |D_n^(h,k)| by one route");
  count->add_option("--h", count_args.h, "Height bound")->required()->check(CLI::PositiveNumber);
  count->add_option("--k", count_args.k, "Forbid k-1 consecutive valleys")->required()
      ->check(CLI::Range(2, 1 << 20));
  count->add_option("--n", count_args.n, "Semilength")->required();
  count->add_option("--method", count_args.method, "Counting route")
      ->check(CLI::IsMember({"eco", "brute", "rule", "series"}));
  count->add_flag("--cross-check", count_args.cross_check,
                  "Also run every other applicable route; exit 1 on disagreement");

  detail::GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "List D_n^(h,k) in lexicographic order");
  gen->add_option("--h", gen_args.h, "Height bound")->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_args.k, "Forbid k-1 consecutive valleys")->required()
      ->check(CLI::Range(2, 1 << 20));
  gen->add_option("--n", gen_args.n, "Semilength")->required();

  detail::SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Expand the generating function");
  series->add_option("--h", series_args.h, "Height bound")->required()->check(CLI::PositiveNumber);
  series->add_option("--k", series_args.k, "Forbid k-1 consecutive valleys")->required()
      ->check(CLI::Range(2, 1 << 20));
  series->add_option("--order", series_args.order, "Highest power of x");
  series->add_flag("--show-components", series_args.show_components,
                   "Also print S^(h,k) and every F_i");

  detail::IdentityArgs id_args;
  auto* ident = app.add_subcommand("identity", "Check the Catalan recurrence over a range of h");
  ident->add_option("--h-min", id_args.h_min)->required();
  ident->add_option("--h-max", id_args.h_max)->required();

  detail::VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Four-route agreement grid");
  verify->add_option("--h", verify_args.h_range, "Height range, e.g. 4..7");
  verify->add_option("--k", verify_args.k_range, "Valley bound range, e.g. 3..5");
  verify->add_option("--n-max", verify_args.n_max, "Largest semilength");
  verify->add_option("--workers", verify_args.workers, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kUsageError;
  }

  cfg.format = (json_flag || format == "json") ? Format::json
               : format == "csv"               ? Format::csv
                                               : Format::plain;
  if (!cache_path.empty()) cfg.cache_path = cache_path;

  try {
    if (*count) return detail::cmd_count(count_args, cfg, out, err);
    if (*gen) return detail::cmd_generate(gen_args, cfg, out);
    if (*series) return detail::cmd_series(series_args, cfg, out);
    if (*ident) return detail::cmd_identity(id_args, cfg, out);
    if (*verify) return detail::cmd_verify(verify_args, cfg, out, err);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace valleyforge::cli
