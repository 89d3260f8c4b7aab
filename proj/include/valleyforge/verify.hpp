#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valleyforge/bigint.hpp"
#include "valleyforge/cache.hpp"
#include "valleyforge/detail/parallel.hpp"
#include "valleyforge/dyck_path.hpp"
#include "valleyforge/eco.hpp"
#include "valleyforge/error.hpp"
#include "valleyforge/oracle.hpp"
#include "valleyforge/series.hpp"

namespace valleyforge {

/// One (h, k, n) cell of the four-route comparison.
struct CellResult {
  int h;
  int k;
  std::size_t n;
  BigCount eco;
  BigCount rule;
  BigCount series;
  BigCount brute;

  bool agree() const { return eco == rule && rule == series && series == brute; }
};

/// |D_n^{(h,k)}| for n = 0..n_max, counted by generating every path.
inline std::vector<BigCount> eco_counts(const ClassParams& params, std::size_t n_max,
                                        unsigned workers = 1) {
  std::vector<BigCount> out;
  for_each_level(
      params, n_max,
      [&](std::size_t, const std::vector<DyckPath>& level) { out.emplace_back(level.size()); },
      workers);
  return out;
}

/// Coefficients 0..n_max of the generating function.
inline std::vector<BigCount> series_counts(const ClassParams& params, std::size_t n_max) {
  return f_series(params, n_max).coeffs();
}

struct GridSpec {
  int h_lo, h_hi;
  int k_lo, k_hi;
  std::size_t n_max;
  std::size_t cap = default_oracle_cap;
  unsigned workers = 1;
};

/// Runs all four routes over every cell of the grid, in (h, k, n) order.
///
/// When a cache is given, the brute-force column is read from it where
/// present, and every cell on which all four routes agree is written back.
inline std::vector<CellResult> verify_grid(const GridSpec& grid, ResultCache* cache = nullptr) {
  if (grid.h_lo > grid.h_hi || grid.k_lo > grid.k_hi)
    throw error(errc::domain_violation, "empty parameter range");
  detail::require_within_cap(grid.n_max, grid.cap);
  std::vector<ClassParams> pairs;
  for (int h = grid.h_lo; h <= grid.h_hi; ++h)
    for (int k = grid.k_lo; k <= grid.k_hi; ++k) {
      ClassParams p(h, k);
      p.require_eco_supported();
      pairs.push_back(p);
    }

  // Cache reads happen here, on the calling thread.
  std::vector<std::vector<std::optional<BigCount>>> cached(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t n = 0; n <= grid.n_max; ++n)
      cached[i].push_back(cache ? cache->lookup(pairs[i].h, pairs[i].k, n) : std::nullopt);

  auto per_pair = detail::parallel_chunks(pairs.size(), grid.workers, [&](std::size_t lo,
                                                                         std::size_t hi) {
    std::vector<CellResult> part;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& p = pairs[i];
      const auto eco = eco_counts(p, grid.n_max);
      const auto rule = rule_totals(p, grid.n_max);
      const auto series = series_counts(p, grid.n_max);
      for (std::size_t n = 0; n <= grid.n_max; ++n) {
        BigCount brute = cached[i][n] ? *cached[i][n] : brute_count(p, n, grid.cap);
        part.push_back({p.h, p.k, n, eco[n], rule[n], series[n], std::move(brute)});
      }
    }
    return part;
  });

  std::vector<CellResult> cells;
  for (auto& part : per_pair)
    for (auto& c : part) cells.push_back(std::move(c));
  if (cache)
    for (const auto& c : cells)
      if (c.agree()) cache->store(c.h, c.k, c.n, c.brute);
  return cells;
}

}  // namespace valleyforge
