#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valleyforge/bigint.hpp"
#include "valleyforge/error.hpp"

namespace valleyforge {

enum class Step : std::uint8_t { Down = 0, Up = 1 };

/// A Dyck path stored as a packed bit sequence (Up = 1, Down = 0), most
/// significant bit first within each 64-bit word.
///
/// Instances are immutable and always valid: balanced, and no prefix has more
/// Down than Up steps. The only ways to obtain one are `parse_path`, the
/// checked `from_steps`, and the structural operations in this library which
/// preserve validity by construction.
class DyckPath {
 public:
  DyckPath() = default;  // the empty path

  static DyckPath from_steps(std::span<const Step> steps);

  std::size_t length() const noexcept { return length_; }
  std::size_t semilength() const noexcept { return length_ / 2; }
  bool empty() const noexcept { return length_ == 0; }

  Step operator[](std::size_t i) const noexcept {
    return ((words_[i / 64] >> (63 - i % 64)) & 1u) ? Step::Up : Step::Down;
  }
  bool is_up(std::size_t i) const noexcept { return (*this)[i] == Step::Up; }

  std::vector<Step> steps() const {
    std::vector<Step> out(length_);
    for (std::size_t i = 0; i < length_; ++i) out[i] = (*this)[i];
    return out;
  }

  /// Canonical 'U'/'D' serialization.
  std::string word() const {
    std::string s(length_, 'D');
    for (std::size_t i = 0; i < length_; ++i)
      if (is_up(i)) s[i] = 'U';
    return s;
  }

  /// Path with the factor UD inserted before step `pos` (pos == length()
  /// appends). Always a valid Dyck path.
  DyckPath with_peak_at(std::size_t pos) const {
    DyckPath out;
    out.length_ = length_ + 2;
    out.words_.assign((out.length_ + 63) / 64, 0);
    for (std::size_t i = 0; i < pos; ++i)
      if (is_up(i)) out.set_up(i);
    out.set_up(pos);
    for (std::size_t i = pos; i < length_; ++i)
      if (is_up(i)) out.set_up(i + 2);
    return out;
  }

  /// Path with the two steps at [pos, pos + 2) removed. Caller guarantees
  /// they form a UD factor.
  DyckPath without_peak_at(std::size_t pos) const {
    DyckPath out;
    out.length_ = length_ - 2;
    out.words_.assign((out.length_ + 63) / 64, 0);
    for (std::size_t i = 0; i < pos; ++i)
      if (is_up(i)) out.set_up(i);
    for (std::size_t i = pos + 2; i < length_; ++i)
      if (is_up(i)) out.set_up(i - 2);
    return out;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

  /// Lexicographic order of the serialized words ('D' < 'U').
  friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) {
    const std::size_t common = std::min(a.length_, b.length_);
    const std::size_t full = common / 64;
    for (std::size_t w = 0; w < full; ++w)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    for (std::size_t i = full * 64; i < common; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return a.length_ <=> b.length_;
  }

 private:
  void set_up(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (63 - i % 64); }

  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

namespace detail {

inline void validate_steps(std::span<const Step> steps) {
  std::int64_t y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    y += steps[i] == Step::Up ? 1 : -1;
    if (y < 0)
      throw error(errc::negative_prefix,
                  "prefix of length " + std::to_string(i + 1) + " dips below the axis");
  }
  if (y != 0) throw error(errc::unbalanced_word, "final ordinate is " + std::to_string(y));
}

}  // namespace detail

inline DyckPath DyckPath::from_steps(std::span<const Step> steps) {
  detail::validate_steps(steps);
  DyckPath p;
  p.length_ = steps.size();
  p.words_.assign((p.length_ + 63) / 64, 0);
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::Up) p.set_up(i);
  return p;
}

/// Parses a 'U'/'D' word.
///
/// A dip below the axis is reported before an imbalance, so "UDDU" is a
/// NegativePrefix even though its totals also agree.
inline DyckPath parse_path(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default:
        throw error(errc::bad_symbol, "symbol '" + std::string(1, word[i]) + "' at index " +
                                          std::to_string(i));
    }
  }
  return DyckPath::from_steps(steps);
}

/// The pair (h, k): height at most h, no k-1 consecutive valleys at height h-1.
struct ClassParams {
  int h = 1;
  int k = 2;

  ClassParams() = default;
  ClassParams(int height, int valley_bound) : h(height), k(valley_bound) {
    if (h < 1) throw error(errc::unsupported_params, "h must be >= 1, got " + std::to_string(h));
    if (k < 2) throw error(errc::unsupported_params, "k must be >= 2, got " + std::to_string(k));
  }

  /// Parameters for which the generation and series routes are defined.
  bool eco_supported() const noexcept { return (k == 2 && h >= 3) || (k >= 3 && h >= 4); }

  void require_eco_supported() const {
    if (!eco_supported())
      throw error(errc::unsupported_params, "(h=" + std::to_string(h) + ", k=" +
                                                std::to_string(k) +
                                                ") needs k = 2, h >= 3 or k >= 3, h >= 4");
  }

  friend bool operator==(const ClassParams&, const ClassParams&) = default;
};

inline std::size_t height(const DyckPath& path) {
  std::int64_t y = 0, top = 0;
  for (std::size_t i = 0; i < path.length(); ++i) {
    y += path.is_up(i) ? 1 : -1;
    top = std::max(top, y);
  }
  return static_cast<std::size_t>(top);
}

/// Longest run (DU)^m, literally adjacent in the word, whose D steps all end
/// at ordinate y.
inline std::size_t max_valley_run_at_height(const DyckPath& path, std::size_t y) {
  std::size_t best = 0, run = 0;
  std::int64_t ord = 0;
  const auto target = static_cast<std::int64_t>(y);
  // A valley at index i is D at i ending on `target`, followed by U at i+1.
  // The next valley of the same run can only start at i+2.
  std::size_t next_in_run = 0;
  for (std::size_t i = 0; i < path.length(); ++i) {
    ord += path.is_up(i) ? 1 : -1;
    const bool valley = !path.is_up(i) && ord == target && i + 1 < path.length() &&
                        path.is_up(i + 1);
    if (!valley) continue;
    run = (run > 0 && i == next_in_run) ? run + 1 : 1;
    next_in_run = i + 2;
    best = std::max(best, run);
  }
  return best;
}

inline bool is_in_class(const DyckPath& path, const ClassParams& params) {
  return height(path) <= static_cast<std::size_t>(params.h) &&
         max_valley_run_at_height(path, static_cast<std::size_t>(params.h - 1)) <=
             static_cast<std::size_t>(params.k - 2);
}

/// C_n = C(2n, n) / (n + 1), by the running product C_{i} = C_{i-1}·2(2i-1)/(i+1).
inline BigCount catalan(std::size_t n) {
  BigCount c = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    c *= 2 * (2 * i - 1);
    c /= i + 1;
  }
  return c;
}

}  // namespace valleyforge
