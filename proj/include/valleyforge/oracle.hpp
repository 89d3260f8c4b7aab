#pragma once

// Brute-force ground truth. Shares nothing with the ECO or series routes
// beyond the path type and the class predicate.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "valleyforge/bigint.hpp"
#include "valleyforge/dyck_path.hpp"
#include "valleyforge/error.hpp"

namespace valleyforge {

inline constexpr std::size_t default_oracle_cap = 14;

namespace detail {

inline void require_within_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw error(errc::cap_exceeded,
                "semilength " + std::to_string(n) + " exceeds oracle cap " + std::to_string(cap));
}

inline void enumerate_rec(std::vector<Step>& prefix, std::size_t ups, std::size_t downs,
                          std::size_t n, std::vector<DyckPath>& out) {
  if (downs == n) {
    out.push_back(DyckPath::from_steps(prefix));
    return;
  }
  // Down before Up keeps the output sorted by word.
  if (downs < ups) {
    prefix.push_back(Step::Down);
    enumerate_rec(prefix, ups, downs + 1, n, out);
    prefix.pop_back();
  }
  if (ups < n) {
    prefix.push_back(Step::Up);
    enumerate_rec(prefix, ups + 1, downs, n, out);
    prefix.pop_back();
  }
}

/// Backtracking counter over (ordinate, valley run at height h-1, last step).
class ClassCounter {
 public:
  ClassCounter(const ClassParams& params, std::size_t n)
      : h_(params.h), max_run_(params.k - 2), n_(n) {}

  std::uint64_t count() { return rec(0, 0, 0, false, 0); }

 private:
  // `run` is the number of consecutive valleys at height h-1 that the current
  // position still extends; it survives only across the exact factor DU DU….
  std::uint64_t rec(std::size_t ups, std::size_t downs, int y, bool last_up, int run) {
    if (downs == n_) return 1;
    std::uint64_t total = 0;
    if (ups < n_ && y < h_) {
      int next_run = 0;
      if (!last_up && ups + downs > 0 && y == h_ - 1) next_run = run + 1;
      if (next_run <= max_run_) total += rec(ups + 1, downs, y + 1, true, next_run);
    }
    if (downs < ups) {
      const int next_run = (last_up && y == h_) ? run : 0;
      total += rec(ups, downs + 1, y - 1, false, next_run);
    }
    return total;
  }

  int h_;
  int max_run_;
  std::size_t n_;
};

}  // namespace detail

/// Every Dyck path of semilength n, sorted by word.
inline std::vector<DyckPath> enumerate_dyck(std::size_t n, std::size_t cap = default_oracle_cap) {
  detail::require_within_cap(n, cap);
  std::vector<DyckPath> out;
  std::vector<Step> prefix;
  prefix.reserve(2 * n);
  detail::enumerate_rec(prefix, 0, 0, n, out);
  return out;
}

/// |D_n^{(h,k)}| by pruned backtracking. Accepts every h >= 1, k >= 2.
inline BigCount brute_count(const ClassParams& params, std::size_t n,
                            std::size_t cap = default_oracle_cap) {
  detail::require_within_cap(n, cap);
  return BigCount(detail::ClassCounter(params, n).count());
}

/// Reference filter: enumerate everything, keep class members.
inline std::vector<DyckPath> brute_filter(const ClassParams& params, std::size_t n,
                                          std::size_t cap = default_oracle_cap) {
  std::vector<DyckPath> out;
  for (auto& p : enumerate_dyck(n, cap))
    if (is_in_class(p, params)) out.push_back(std::move(p));
  return out;
}

}  // namespace valleyforge
