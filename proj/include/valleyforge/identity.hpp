#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "valleyforge/bigint.hpp"
#include "valleyforge/dyck_path.hpp"
#include "valleyforge/error.hpp"

namespace valleyforge {

struct IdentityFailure {
  int n;
  BigInt lhs;
  BigInt rhs;
};

struct IdentityReport {
  int h = 0;
  std::optional<int> k;  // empty for the plain Catalan recurrence
  std::pair<int, int> n_range{0, -1};  // inclusive
  std::vector<IdentityFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

inline nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["h"] = r.h;
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
  j["n_range"] = {r.n_range.first, r.n_range.second};
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back({{"n", f.n}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}});
  j["passed"] = r.passed();
  return j;
}

/// Σ_{j=0}^{⌊(h+1)/2⌋} D_{n-j} (-1)^{C(h+1,2)-j} C(h+1-j, j), with D_m = 0 for
/// m < 0. `D[m]` must be available for every m <= n.
inline BigInt lhs_coefficient_relation(int h, int k, int n, std::span<const BigCount> D) {
  if (n < 0 || n >= h || h >= k)
    throw error(errc::domain_violation, "relation needs 0 <= n < h < k; got n=" +
                                            std::to_string(n) + ", h=" + std::to_string(h) +
                                            ", k=" + std::to_string(k));
  if (D.size() <= static_cast<std::size_t>(n))
    throw error(errc::domain_violation, "need D_0..D_" + std::to_string(n));
  const auto e = static_cast<std::int64_t>(binomial(h + 1, 2) % 2);
  BigInt sum = 0;
  for (int j = 0; j <= (h + 1) / 2 && j <= n; ++j)
    sum += sign_pow(e - j) * binomial(h + 1 - j, j) * D[static_cast<std::size_t>(n - j)];
  return sum;
}

/// Σ_{t=⌊n/h⌋}^{min(n, h-n+1)} (-1)^{⌊(h+1)/2⌋-t} C(h-n+1, t), for 0 <= n < h.
inline BigInt rhs_coefficient_relation(int h, int n) {
  if (n < 0 || n >= h)
    throw error(errc::domain_violation,
                "relation needs 0 <= n < h; got n=" + std::to_string(n) + ", h=" + std::to_string(h));
  const int lo = n / h;
  const int hi = std::min(n, h - n + 1);
  BigInt sum = 0;
  for (int t = lo; t <= hi; ++t) sum += sign_pow((h + 1) / 2 - t) * binomial(h - n + 1, t);
  return sum;
}

/// Checks lhs = rhs for every 0 <= n < h, drawing D_n from `D(n)`.
template <class Provider>
IdentityReport check_relation(int h, int k, Provider&& D) {
  if (h < 1 || h >= k)
    throw error(errc::domain_violation,
                "relation needs 1 <= h < k; got h=" + std::to_string(h) + ", k=" + std::to_string(k));
  std::vector<BigCount> values;
  values.reserve(static_cast<std::size_t>(h));
  for (int n = 0; n < h; ++n) values.push_back(D(static_cast<std::size_t>(n)));

  IdentityReport report{h, k, {0, h - 1}, {}};
  for (int n = 0; n < h; ++n) {
    BigInt lhs = lhs_coefficient_relation(h, k, n, values);
    BigInt rhs = rhs_coefficient_relation(h, n);
    if (lhs != rhs) report.failures.push_back({n, std::move(lhs), std::move(rhs)});
  }
  return report;
}

/// Window ⌈(h+1)/2⌉ <= n < h on which the Catalan recurrence holds.
inline std::pair<int, int> recurrence_window(int h) { return {(h + 2) / 2, h - 1}; }

struct RecurrenceValues {
  BigCount expected;   // C_n
  BigInt recurrence;   // Σ_{j>=1} (-1)^{j+1} C(h+1-j, j) C_{n-j}
};

/// C_n against Σ_{j=1}^{⌊(h+1)/2⌋} (-1)^{j+1} C(h+1-j, j) C_{n-j}.
inline RecurrenceValues catalan_recurrence_check(int h, int n) {
  const auto [lo, hi] = recurrence_window(h);
  if (n < lo || n > hi)
    throw error(errc::domain_violation, "n=" + std::to_string(n) + " outside the window " +
                                            std::to_string(lo) + ".." + std::to_string(hi) +
                                            " for h=" + std::to_string(h));
  RecurrenceValues v{catalan(static_cast<std::size_t>(n)), 0};
  for (int j = 1; j <= (h + 1) / 2; ++j)
    v.recurrence += sign_pow(j + 1) * binomial(h + 1 - j, j) * catalan(static_cast<std::size_t>(n - j));
  return v;
}

/// Runs catalan_recurrence_check over the whole window for h.
inline IdentityReport check_catalan_recurrence(int h) {
  const auto window = recurrence_window(h);
  IdentityReport report{h, std::nullopt, window, {}};
  for (int n = window.first; n <= window.second; ++n) {
    auto v = catalan_recurrence_check(h, n);
    if (v.expected != v.recurrence)
      report.failures.push_back({n, std::move(v.expected), std::move(v.recurrence)});
  }
  return report;
}

/// Σ_{t=0}^{m} (-1)^t C(m, t).
inline BigInt pascal_alternating_sum(int m) {
  if (m < 0) throw error(errc::domain_violation, "m must be >= 0");
  BigInt sum = 0;
  for (int t = 0; t <= m; ++t) sum += sign_pow(t) * binomial(m, t);
  return sum;
}

}  // namespace valleyforge
