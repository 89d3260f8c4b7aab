#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "valleyforge/bigint.hpp"
#include "valleyforge/dyck_path.hpp"
#include "valleyforge/error.hpp"

namespace valleyforge {

class TruncatedSeries;

/// Dense polynomial in x with integer coefficients, constant term first.
/// Normalized: no trailing zeros; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial({c}); }

  /// c·x^e
  static IntPolynomial monomial(const BigInt& c, std::size_t e) {
    std::vector<BigInt> v(e + 1);
    v[e] = c;
    return IntPolynomial(std::move(v));
  }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) {
    for (auto& c : a.coeffs_) c *= s;
    a.normalize();
    return a;
  }

  /// Multiplication by x^e.
  IntPolynomial shifted(std::size_t e) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(e, BigInt(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, ascending powers: "1 - 4x + 3x^2 + x^4 - x^5".
  std::string to_string() const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Power series in x known exactly through x^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, BigInt(0)) {}

  TruncatedSeries(const IntPolynomial& p, std::size_t order) : TruncatedSeries(order) {
    for (std::size_t i = 0; i <= order; ++i) coeffs_[i] = p[i];
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::size_t i) { return coeffs_.at(i); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend TruncatedSeries operator*(const IntPolynomial& p, const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    const auto& pc = p.coeffs();
    for (std::size_t i = 0; i < pc.size() && i <= s.order(); ++i) {
      if (pc[i] == 0) continue;
      for (std::size_t j = 0; i + j <= s.order(); ++j) r.coeffs_[i + j] += pc[i] * s.coeffs_[j];
    }
    return r;
  }

  /// Exact quotient num/den as a series. The constant term of `den` must be
  /// ±1 so that every coefficient stays integral.
  static TruncatedSeries divide(const IntPolynomial& num, const IntPolynomial& den,
                                std::size_t order) {
    const BigInt lead = den[0];
    if (lead != 1 && lead != -1)
      throw std::domain_error("series division needs a denominator with constant term ±1");
    TruncatedSeries q(order);
    const auto& dc = den.coeffs();
    for (std::size_t n = 0; n <= order; ++n) {
      BigInt acc = num[n];
      for (std::size_t j = 1; j < dc.size() && j <= n; ++j) acc -= dc[j] * q.coeffs_[n - j];
      q.coeffs_[n] = acc * lead;  // lead is its own inverse
    }
    return q;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) throw std::logic_error("truncated series orders differ");
  }

  std::vector<BigInt> coeffs_;
};

inline std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// JSON wire format: array of decimal strings, constant term first.

inline nlohmann::json to_json_coeffs(const std::vector<BigInt>& coeffs) {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(c.str());
  return arr;
}

inline nlohmann::json to_json(const IntPolynomial& p) { return to_json_coeffs(p.coeffs()); }
inline nlohmann::json to_json(const TruncatedSeries& s) { return to_json_coeffs(s.coeffs()); }

inline std::vector<BigInt> coeffs_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of decimal strings");
  std::vector<BigInt> v;
  v.reserve(j.size());
  for (const auto& e : j) v.emplace_back(e.get<std::string>());
  return v;
}

inline IntPolynomial polynomial_from_json(const nlohmann::json& j) {
  return IntPolynomial(coeffs_from_json(j));
}

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
  auto v = coeffs_from_json(j);
  if (v.empty()) throw std::invalid_argument("a truncated series has at least one coefficient");
  TruncatedSeries s(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = std::move(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// The generating-function system for D^{(h,k)}.
// ---------------------------------------------------------------------------

/// The denominator family evaluated by its general closed formula, for any
/// h >= 1. Agrees with `build_S` for h != 2.
inline IntPolynomial build_S_general(int h, int k) {
  const auto e = binomial(h + 1, 2);
  const std::int64_t parity = static_cast<std::int64_t>(e % 2);
  IntPolynomial s;
  for (int j = 0; j <= (h + 1) / 2; ++j)
    s += IntPolynomial::monomial(sign_pow(parity - j) * binomial(h - j + 1, j), j);
  for (int j = 1; j <= h / 2; ++j)
    s += IntPolynomial::monomial(sign_pow(parity - j + 1) * binomial(h - j - 1, j - 1),
                                 static_cast<std::size_t>(k + j));
  return s;
}

/// S^{(h,k)}(x). h = 1, 2, 3 use the tabulated base cases; h >= 4 the general
/// formula. The h = 2 base case 2x - x^k - 1 differs from the general formula
/// (which would give 2x - 1 - x^{k+1}); the base case is the one for which
/// the closed-form F_i solve the system.
inline IntPolynomial build_S(int h, int k) {
  if (h < 1 || k < 2)
    throw error(errc::domain_violation,
                "S is defined for h >= 1, k >= 2; got h=" + std::to_string(h) +
                    ", k=" + std::to_string(k));
  const auto ku = static_cast<std::size_t>(k);
  switch (h) {
    case 1: return IntPolynomial{-1, 1};
    case 2: return IntPolynomial{-1, 2} - IntPolynomial::monomial(1, ku);
    case 3: return IntPolynomial{1, -3, 1} + IntPolynomial::monomial(1, ku + 1);
    default: return build_S_general(h, k);
  }
}

/// A·F = b with A an h×h matrix of polynomials (row-major) and b = (1, 0, …, 0).
struct PolySystem {
  std::vector<std::vector<IntPolynomial>> matrix;
  std::vector<IntPolynomial> rhs;

  std::size_t size() const noexcept { return rhs.size(); }
};

namespace detail {

/// 1 + x + … + x^{k-3}, the polynomial form of (1 - x^{k-2}) / (1 - x).
inline IntPolynomial geometric_head(int k) {
  IntPolynomial g;
  for (int j = 0; j <= k - 3; ++j) g += IntPolynomial::monomial(1, static_cast<std::size_t>(j));
  return g;
}

}  // namespace detail

/// Assembles the reduced system in F_1..F_h.
///
/// Row layout (1-based, h >= 4):
///   1:        F_1 = 1
///   2..h-3:   x F_{i-1} - F_i + F_{i+1} = 0
///   h-2:      x F_{h-3} - F_{h-2} + F_{h-1} - x^{k-1} F_h = 0
///   h-1:      x F_{h-2} - F_{h-1} + (1 + x^{k-1}) F_h = 0
///   h:        x F_{h-1} + (-1 + x + x^2 (1 + … + x^{k-3})) F_h = 0
///
/// For h = 3 (only with k = 2) row h-2 would coincide with row 1, so row 2 is
/// the unreduced equation for F_2 instead:
///   x F_1 + (x - 1) F_2 + (x + x^2 g + x^{k-1}) F_3 = 0.
inline PolySystem build_system(const ClassParams& params) {
  params.require_eco_supported();
  const int h = params.h;
  const auto k1 = static_cast<std::size_t>(params.k - 1);
  const auto hu = static_cast<std::size_t>(h);
  const IntPolynomial x{0, 1};
  const IntPolynomial one{1};
  const IntPolynomial g = detail::geometric_head(params.k);

  PolySystem sys;
  sys.matrix.assign(hu, std::vector<IntPolynomial>(hu));
  sys.rhs.assign(hu, IntPolynomial{});
  auto at = [&](int row, int col) -> IntPolynomial& {
    return sys.matrix[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
  };

  at(1, 1) = one;
  sys.rhs[0] = one;

  if (h == 3) {
    at(2, 1) = x;
    at(2, 2) = x - one;
    at(2, 3) = x + x.shifted(1) * g + IntPolynomial::monomial(1, k1);
  } else {
    for (int i = 2; i <= h - 3; ++i) {
      at(i, i - 1) = x;
      at(i, i) = -one;
      at(i, i + 1) = one;
    }
    at(h - 2, h - 3) = x;
    at(h - 2, h - 2) = -one;
    at(h - 2, h - 1) = one;
    at(h - 2, h) = -IntPolynomial::monomial(1, k1);
  }
  at(h - 1, h - 2) = x;
  at(h - 1, h - 1) = -one;
  at(h - 1, h) = one + IntPolynomial::monomial(1, k1);
  at(h, h - 1) = x;
  at(h, h) = -one + x + IntPolynomial::monomial(1, 2) * g;
  return sys;
}

/// Power-series solution F_1..F_h of A·F = b through x^order.
///
/// Writing A = A_0 + A_+ with A_0 the constant part, the coefficient vector of
/// x^n solves A_0·F^(n) = b^(n) - Σ_{m>=1} A_m·F^(n-m) by back-substitution;
/// A_0 is upper triangular with diagonal ±1.
inline std::vector<TruncatedSeries> solve_system(const PolySystem& sys, std::size_t order) {
  const std::size_t h = sys.size();
  for (std::size_t r = 0; r < h; ++r) {
    const BigInt d = sys.matrix[r][r][0];
    if (d != 1 && d != -1) throw std::domain_error("constant part of A must have diagonal ±1");
    for (std::size_t c = 0; c < r; ++c)
      if (sys.matrix[r][c][0] != 0)
        throw std::domain_error("constant part of A must be upper triangular");
  }

  std::vector<TruncatedSeries> F(h, TruncatedSeries(order));
  for (std::size_t n = 0; n <= order; ++n) {
    std::vector<BigInt> residual(h);
    for (std::size_t r = 0; r < h; ++r) {
      BigInt acc = sys.rhs[r][n];
      for (std::size_t c = 0; c < h; ++c) {
        const auto& a = sys.matrix[r][c].coeffs();
        for (std::size_t m = 1; m < a.size() && m <= n; ++m) acc -= a[m] * F[c][n - m];
      }
      residual[r] = std::move(acc);
    }
    for (std::size_t r = h; r-- > 0;) {
      BigInt acc = residual[r];
      for (std::size_t c = r + 1; c < h; ++c) acc -= sys.matrix[r][c][0] * F[c][n];
      F[r][n] = acc * sys.matrix[r][r][0];
    }
  }
  return F;
}

inline std::vector<TruncatedSeries> solve_series(const ClassParams& params, std::size_t order) {
  return solve_system(build_system(params), order);
}

/// A·F - b, row by row, as truncated series.
inline std::vector<TruncatedSeries> system_residual(const PolySystem& sys,
                                                    const std::vector<TruncatedSeries>& F) {
  const std::size_t order = F.front().order();
  std::vector<TruncatedSeries> out;
  for (std::size_t r = 0; r < sys.size(); ++r) {
    TruncatedSeries row(order);
    for (std::size_t c = 0; c < sys.size(); ++c) row += sys.matrix[r][c] * F[c];
    row -= TruncatedSeries(sys.rhs[r], order);
    out.push_back(std::move(row));
  }
  return out;
}

/// Sign of the closed-form F_i: (-1)^{C((h mod 2) + i + 3, 2)}.
inline int closed_form_sign(int h, int i) {
  return sign_pow(static_cast<std::int64_t>(binomial(h % 2 + i + 3, 2) % 2));
}

/// Expansion of ±x^{i-1} S^{(h+1-i,k)}(x) / S^{(h,k)}(x).
inline TruncatedSeries closed_form_F(const ClassParams& params, int i, std::size_t order) {
  params.require_eco_supported();
  if (i < 1 || i > params.h)
    throw error(errc::domain_violation, "component index " + std::to_string(i) +
                                            " outside 1.." + std::to_string(params.h));
  const IntPolynomial num =
      BigInt(closed_form_sign(params.h, i)) *
      build_S(params.h + 1 - i, params.k).shifted(static_cast<std::size_t>(i - 1));
  return TruncatedSeries::divide(num, build_S(params.h, params.k), order);
}

/// x + x^2 + … + x^{k-2}: the polynomial form of (x^{k-1} - x)/(x - 1).
inline IntPolynomial tail_prefactor(int k) { return detail::geometric_head(k).shifted(1); }

/// T_j = x^{j+1} F_h, the series of paths labelled (h_j).
inline TruncatedSeries t_series(const std::vector<TruncatedSeries>& F, int j) {
  return IntPolynomial::monomial(1, static_cast<std::size_t>(j + 1)) * F.back();
}

/// f(x) = Σ F_i + (x + … + x^{k-2}) F_h; coefficient n is |D_n^{(h,k)}|.
inline TruncatedSeries f_from_components(const std::vector<TruncatedSeries>& F, int k) {
  TruncatedSeries f(F.front().order());
  for (const auto& Fi : F) f += Fi;
  f += tail_prefactor(k) * F.back();
  return f;
}

inline TruncatedSeries f_series(const ClassParams& params, std::size_t order) {
  return f_from_components(solve_series(params, order), params.k);
}

}  // namespace valleyforge
