#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "valleyforge/bigint.hpp"
#include "valleyforge/detail/parallel.hpp"
#include "valleyforge/dyck_path.hpp"
#include "valleyforge/error.hpp"

namespace valleyforge {

/// Succession-rule label. `Num(l)` is (l) with 1 <= l <= h; `Hdx(j)` is
/// (h_j), 0 <= j <= k-3, the state of a path U^h (DU)^j D^2 P'.
class EcoLabel {
 public:
  enum class Kind { Num, Hdx };

  static constexpr EcoLabel num(int l) noexcept { return EcoLabel(Kind::Num, l); }
  static constexpr EcoLabel hdx(int j) noexcept { return EcoLabel(Kind::Hdx, j); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr int index() const noexcept { return index_; }
  constexpr bool is_num() const noexcept { return kind_ == Kind::Num; }

  /// Number of children the labelled path has under the ECO operator.
  constexpr int child_count(const ClassParams& params) const noexcept {
    return is_num() ? index_ : params.h;
  }

  /// "(3)" or "(h_0)".
  std::string to_string() const {
    return is_num() ? "(" + std::to_string(index_) + ")" : "(h_" + std::to_string(index_) + ")";
  }

  friend constexpr auto operator<=>(const EcoLabel&, const EcoLabel&) = default;

 private:
  constexpr EcoLabel(Kind kind, int index) noexcept : kind_(kind), index_(index) {}

  Kind kind_;
  int index_;
};

using LabelVector = std::map<EcoLabel, BigCount>;

inline BigCount total(const LabelVector& counts) {
  BigCount sum = 0;
  for (const auto& [label, c] : counts) sum += c;
  return sum;
}

namespace detail {

/// Shape of the path's initial up-run, as used by the ECO operator.
struct Prefix {
  std::size_t run = 0;      // t, length of the maximal initial up-run
  std::size_t valleys = 0;  // ℓ, only meaningful when run == h
};

inline Prefix read_prefix(const DyckPath& path, const ClassParams& params) {
  Prefix p;
  while (p.run < path.length() && path.is_up(p.run)) ++p.run;
  if (p.run != static_cast<std::size_t>(params.h)) return p;
  // U^h then (DU)^ℓ then DD.
  std::size_t i = p.run;
  while (i + 1 < path.length() && !path.is_up(i) && path.is_up(i + 1)) {
    ++p.valleys;
    i += 2;
  }
  return p;
}

inline void require_member(const DyckPath& path, const ClassParams& params) {
  params.require_eco_supported();
  if (!is_in_class(path, params))
    throw error(errc::not_in_class, "'" + path.word() + "' is not in D^(" +
                                        std::to_string(params.h) + "," +
                                        std::to_string(params.k) + ")");
}

inline EcoLabel label_from_prefix(const Prefix& p, const ClassParams& params) {
  const auto h = static_cast<std::size_t>(params.h);
  if (p.run < h) return EcoLabel::num(static_cast<int>(p.run) + 1);
  // ℓ == k-2 saturates the valley budget at height h-1. For k = 2 this is
  // ℓ == 0, which reproduces Ω_{h,2}: (h) ⇝ (2)…(h-1)(h)(h-1).
  if (p.valleys + 2 == static_cast<std::size_t>(params.k)) return EcoLabel::num(params.h - 1);
  return EcoLabel::hdx(static_cast<int>(p.valleys));
}

}  // namespace detail

inline EcoLabel label_of(const DyckPath& path, const ClassParams& params) {
  detail::require_member(path, params);
  return detail::label_from_prefix(detail::read_prefix(path, params), params);
}

/// Applies the ECO operator: UD is inserted at each active site of the
/// initial up-run, in increasing order of the site's ordinate.
///
/// With t the length of the initial up-run, the active sites are ordinates
/// 0..t when t < h, 0..h-1 for a path labelled (h_j), and 0..h-2 when the
/// path already carries k-2 valleys at height h-1.
inline std::vector<DyckPath> children(const DyckPath& path, const ClassParams& params) {
  detail::require_member(path, params);
  const auto label = detail::label_from_prefix(detail::read_prefix(path, params), params);
  const auto sites = static_cast<std::size_t>(label.child_count(params));
  std::vector<DyckPath> out;
  out.reserve(sites);
  // The site at ordinate j on the initial up-run sits before step j.
  for (std::size_t j = 0; j < sites; ++j) out.push_back(path.with_peak_at(j));
  return out;
}

/// Removes the leftmost peak: the reverse of the ECO operator.
inline DyckPath invert_first_peak(const DyckPath& path) {
  if (path.empty()) throw error(errc::empty_path, "the empty path has no peak");
  std::size_t i = 0;
  while (!(path.is_up(i) && !path.is_up(i + 1))) ++i;
  return path.without_peak_at(i);
}

namespace detail {

inline std::vector<DyckPath> next_level(const std::vector<DyckPath>& level,
                                        const ClassParams& params, unsigned workers) {
  auto chunks = parallel_chunks(level.size(), workers, [&](std::size_t lo, std::size_t hi) {
    std::vector<DyckPath> part;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto label = label_from_prefix(read_prefix(level[i], params), params);
      const auto sites = static_cast<std::size_t>(label.child_count(params));
      for (std::size_t j = 0; j < sites; ++j) part.push_back(level[i].with_peak_at(j));
    }
    return part;
  });
  std::vector<DyckPath> out;
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

/// Calls `visit(n, level)` for every semilength 0..n_max, where `level` is
/// D_n^{(h,k)} in generation order (not sorted).
template <class Visitor>
void for_each_level(const ClassParams& params, std::size_t n_max, Visitor&& visit,
                    unsigned workers = 1) {
  params.require_eco_supported();
  std::vector<DyckPath> level{DyckPath{}};
  for (std::size_t n = 0;; ++n) {
    visit(n, std::as_const(level));
    if (n == n_max) break;
    level = detail::next_level(level, params, workers);
  }
}

/// All of D_n^{(h,k)}, each exactly once, sorted by serialized word.
inline std::vector<DyckPath> generate(const ClassParams& params, std::size_t n,
                                      unsigned workers = 1) {
  std::vector<DyckPath> result;
  for_each_level(
      params, n,
      [&](std::size_t m, const std::vector<DyckPath>& level) {
        if (m == n) result = level;
      },
      workers);
  std::sort(result.begin(), result.end());
  return result;
}

namespace detail {

/// One application of the production map of Ω_{h,k} (Ω_{h,2} when k = 2).
inline LabelVector produce(const LabelVector& counts, const ClassParams& params) {
  const int h = params.h;
  const int k = params.k;
  LabelVector next;
  auto add = [&](EcoLabel l, const BigCount& c) { next[l] += c; };
  for (const auto& [label, c] : counts) {
    if (c == 0) continue;
    if (label == EcoLabel::num(1)) {
      add(EcoLabel::num(2), c);
      continue;
    }
    // Every label other than (1) yields (2)(3)…(h-1) at least up to its own
    // value; the tail differs.
    const int l = label.is_num() ? label.index() : h;
    for (int m = 2; m <= std::min(l, h - 1); ++m) add(EcoLabel::num(m), c);
    if (label.is_num() && l < h) {
      add(EcoLabel::num(l + 1), c);
      continue;
    }
    const int valleys_after = label.is_num() ? 0 : label.index() + 1;
    add(EcoLabel::num(h), c);
    if (valleys_after == k - 2)
      add(EcoLabel::num(h - 1), c);
    else
      add(EcoLabel::hdx(valleys_after), c);
  }
  return next;
}

}  // namespace detail

/// Label multiplicities after n productions from the axiom (1).
inline LabelVector rule_counts(const ClassParams& params, std::size_t n) {
  params.require_eco_supported();
  LabelVector counts{{EcoLabel::num(1), 1}};
  for (std::size_t i = 0; i < n; ++i) counts = detail::produce(counts, params);
  return counts;
}

/// Totals of rule_counts for every n in 0..n_max.
inline std::vector<BigCount> rule_totals(const ClassParams& params, std::size_t n_max) {
  params.require_eco_supported();
  std::vector<BigCount> out;
  LabelVector counts{{EcoLabel::num(1), 1}};
  for (std::size_t n = 0;; ++n) {
    out.push_back(total(counts));
    if (n == n_max) break;
    counts = detail::produce(counts, params);
  }
  return out;
}

}  // namespace valleyforge
