#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <type_traits>
#include <vector>

namespace valleyforge::detail {

inline unsigned default_workers() noexcept {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into at most `workers` contiguous ranges, runs
/// `work(lo, hi)` on each, and returns the results in range order.
template <class Work>
auto parallel_chunks(std::size_t n, unsigned workers, Work&& work)
    -> std::vector<std::invoke_result_t<Work&, std::size_t, std::size_t>> {
  using Result = std::invoke_result_t<Work&, std::size_t, std::size_t>;
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<Result> out;
  out.reserve(parts);
  if (parts == 1) {
    out.push_back(work(0, n));
    return out;
  }
  std::vector<std::future<Result>> pending;
  pending.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t lo = n * p / parts;
    const std::size_t hi = n * (p + 1) / parts;
    pending.push_back(std::async(std::launch::async, [&work, lo, hi] { return work(lo, hi); }));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace valleyforge::detail
