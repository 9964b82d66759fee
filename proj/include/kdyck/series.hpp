#pragma once

// Truncated bivariate formal series with exact rational coefficients,
// the carrier for every generating-function computation in this library.
// z marks path length, w marks the turn index.
//
// A SeriesZW holds coefficients of z^n w^s with z_shift <= n <= z_order
// and 0 <= s <= w_order, in canonical sparse form (zeros are never
// stored). The orders are exactness guarantees: every coefficient inside
// the rectangle equals the coefficient of the represented series, and
// arithmetic propagates the guarantees. A product, for instance, is
// exact only up to min over the factors of (own order + other's
// valuation), separately in z and in w. A bounded amount of Laurent
// support (negative z-exponents, floor z_shift) is allowed; it is needed
// only around u^(-k).
//
// Series that are exact at every order in a direction (polynomials, or
// pure-z series in the w direction) carry the sentinel order
// `unbounded_order` there.

#include "kdyck/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace kdyck {

inline constexpr int unbounded_order = 1 << 20;

class SeriesZW {
 public:
  using Key = std::pair<int, int>;  // (z-exponent, w-exponent)
  using TermMap = std::map<Key, Rat>;

  SeriesZW(int k, int z_order, int w_order, int z_shift = 0)
      : k_(k), z_order_(z_order), w_order_(w_order), z_shift_(std::min(z_shift, 0)) {
    if (k < 1) throw std::invalid_argument("SeriesZW: k must be >= 1");
    if (z_order < z_shift_) throw std::invalid_argument("SeriesZW: z_order below z_shift");
    if (w_order < 0) throw std::invalid_argument("SeriesZW: w_order must be >= 0");
  }

  static SeriesZW monomial(int k, int z_order, int w_order, const Rat& c, int n = 0, int s = 0) {
    SeriesZW out(k, z_order, w_order, std::min(n, 0));
    out.add_term(n, s, c);
    return out;
  }

  int k() const { return k_; }
  int z_order() const { return z_order_; }
  int w_order() const { return w_order_; }
  int z_shift() const { return z_shift_; }
  const TermMap& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of z^n w^s. Asking beyond the exactness rectangle is a
  // caller error.
  Rat coeff(int n, int s) const {
    if (n > z_order_ || s > w_order_ || s < 0)
      throw std::out_of_range("SeriesZW::coeff: z^" + std::to_string(n) + " w^" +
                              std::to_string(s) + " is outside the exact rectangle");
    const auto it = coeffs_.find(Key{n, s});
    return it == coeffs_.end() ? Rat(0) : it->second;
  }

  // Coefficient that must be an integer (counting series).
  Int int_coeff(int n, int s) const {
    const Rat c = coeff(n, s);
    if (denominator(c) != 1)
      throw internal_error("SeriesZW::int_coeff: coefficient of z^" + std::to_string(n) +
                           " w^" + std::to_string(s) + " is not an integer");
    return numerator(c);
  }

  // Least stored z-exponent; z_order()+1 when no term is stored (the
  // true valuation can only be larger). Same convention for w.
  int z_valuation() const {
    return coeffs_.empty() ? sat_add(z_order_, 1) : coeffs_.begin()->first.first;
  }

  int w_valuation() const {
    if (coeffs_.empty()) return sat_add(w_order_, 1);
    int v = coeffs_.begin()->first.second;
    for (const auto& [key, c] : coeffs_) v = std::min(v, key.second);
    return v;
  }

  SeriesZW operator+(const SeriesZW& rhs) const {
    require_same_k(rhs);
    SeriesZW out(k_, std::min(z_order_, rhs.z_order_), std::min(w_order_, rhs.w_order_),
                 std::min(z_shift_, rhs.z_shift_));
    for (const auto& [key, c] : coeffs_) out.add_term(key.first, key.second, c);
    for (const auto& [key, c] : rhs.coeffs_) out.add_term(key.first, key.second, c);
    return out;
  }

  SeriesZW operator-(const SeriesZW& rhs) const {
    require_same_k(rhs);
    SeriesZW out(k_, std::min(z_order_, rhs.z_order_), std::min(w_order_, rhs.w_order_),
                 std::min(z_shift_, rhs.z_shift_));
    for (const auto& [key, c] : coeffs_) out.add_term(key.first, key.second, c);
    for (const auto& [key, c] : rhs.coeffs_) out.add_term(key.first, key.second, -c);
    return out;
  }

  // Exact in each variable up to min over the factors of (own order +
  // other's valuation).
  SeriesZW operator*(const SeriesZW& rhs) const {
    require_same_k(rhs);
    const int zo = std::min(sat_add(z_order_, rhs.z_valuation()),
                            sat_add(rhs.z_order_, z_valuation()));
    const int wo = std::min(sat_add(w_order_, rhs.w_valuation()),
                            sat_add(rhs.w_order_, w_valuation()));
    SeriesZW out(k_, zo, wo, z_shift_ + rhs.z_shift_);
    for (const auto& [ka, ca] : coeffs_) {
      if (ka.first > zo) continue;
      for (const auto& [kb, cb] : rhs.coeffs_) {
        const int n = ka.first + kb.first;
        const int s = ka.second + kb.second;
        if (n > zo || s > wo) continue;
        out.add_term(n, s, ca * cb);
      }
    }
    return out;
  }

  SeriesZW scaled(const Rat& factor) const {
    SeriesZW out(k_, z_order_, w_order_, z_shift_);
    if (factor == 0) return out;
    for (const auto& [key, c] : coeffs_) out.add_term(key.first, key.second, c * factor);
    return out;
  }

  // Multiplication by z^dz w^dw; dz and dw may be negative, but the
  // w-support must stay nonnegative.
  SeriesZW shifted(int dz, int dw) const {
    SeriesZW out(k_, sat_add(z_order_, dz), sat_add(w_order_, dw), z_shift_ + dz);
    for (const auto& [key, c] : coeffs_) {
      if (key.second + dw < 0)
        throw internal_error("SeriesZW::shifted: term would get a negative w-exponent");
      out.add_term(key.first + dz, key.second + dw, c);
    }
    return out;
  }

  SeriesZW pow(int e) const {
    if (e < 0) throw std::invalid_argument("SeriesZW::pow: exponent must be >= 0");
    if (e == 0) return monomial(k_, z_order_, w_order_, Rat(1));
    SeriesZW out = *this;
    for (int i = 1; i < e; ++i) out = out * *this;
    return out;
  }

  // Restriction to the smaller rectangle; refuses to pretend exactness
  // the series does not have.
  SeriesZW truncated(int zo, int wo) const {
    if (zo > z_order_ || wo > w_order_)
      throw internal_error("SeriesZW::truncated: requested orders (" + std::to_string(zo) +
                           ", " + std::to_string(wo) + ") exceed the exact (" +
                           std::to_string(z_order_) + ", " + std::to_string(w_order_) + ")");
    SeriesZW out(k_, zo, wo, z_shift_);
    for (const auto& [key, c] : coeffs_) out.add_term(key.first, key.second, c);
    return out;
  }

  SeriesZW truncated_z(int zo) const { return truncated(zo, w_order_); }

  // Multiplicative inverse of a unit series (nonzero constant term, no
  // negative exponents), by Newton iteration X <- X + X(1 - BX); the
  // residual valuation doubles each round, so the loop ends as soon as
  // the residual vanishes on the whole rectangle.
  SeriesZW reciprocal() const {
    if (z_valuation() < 0)
      throw internal_error("SeriesZW::reciprocal: series has negative z-exponents");
    const auto it = coeffs_.find(Key{0, 0});
    if (it == coeffs_.end())
      throw internal_error("SeriesZW::reciprocal: constant term is zero");
    if (max_z_exponent() > 0 && z_order_ > max_newton_order)
      throw internal_error("SeriesZW::reciprocal: z truncation order too large");
    if (max_w_exponent() > 0 && w_order_ > max_newton_order)
      throw internal_error("SeriesZW::reciprocal: w truncation order too large");
    SeriesZW x = monomial(k_, z_order_, w_order_, Rat(1) / it->second);
    const SeriesZW one = monomial(k_, z_order_, w_order_, Rat(1));
    for (int round = 0; round < 64; ++round) {
      const SeriesZW residual = one - *this * x;
      if (residual.is_zero()) return x;
      x = x + x * residual;
    }
    throw internal_error("SeriesZW::reciprocal: no convergence");
  }

  // Division by a series whose least term is a corner monomial c z^a w^b
  // (a the least z-exponent, b the least w-exponent, attained together):
  // factor the corner out, invert the remaining unit, undo the shift.
  SeriesZW divided_by(const SeriesZW& divisor) const {
    require_same_k(divisor);
    if (divisor.is_zero()) throw internal_error("SeriesZW::divided_by: zero divisor");
    const int a = divisor.z_valuation();
    const int b = divisor.w_valuation();
    if (divisor.coeffs_.find(Key{a, b}) == divisor.coeffs_.end())
      throw internal_error("SeriesZW::divided_by: divisor has no corner monomial");
    const SeriesZW unit = divisor.shifted(-a, -b);
    return (*this * unit.reciprocal()).shifted(-a, -b);
  }

  // Checks the series is an honest power series with integer
  // coefficients and drops the Laurent allowance.
  SeriesZW as_integer_power_series() const {
    for (const auto& [key, c] : coeffs_) {
      if (key.first < 0)
        throw internal_error("series has a surviving negative exponent z^" +
                             std::to_string(key.first));
      if (denominator(c) != 1)
        throw internal_error("series has a non-integer coefficient at z^" +
                             std::to_string(key.first) + " w^" + std::to_string(key.second));
    }
    SeriesZW out = *this;
    out.z_shift_ = 0;
    return out;
  }

 private:
  static constexpr int max_newton_order = 100000;

  static int sat_add(int order, int delta) {
    const long long v = static_cast<long long>(order) + delta;
    return static_cast<int>(std::min<long long>(v, unbounded_order));
  }

  int max_z_exponent() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.first;
  }

  int max_w_exponent() const {
    int v = 0;
    for (const auto& [key, c] : coeffs_) v = std::max(v, key.second);
    return v;
  }

  void require_same_k(const SeriesZW& rhs) const {
    if (k_ != rhs.k_)
      throw std::invalid_argument("SeriesZW: mixing series with k=" + std::to_string(k_) +
                                  " and k=" + std::to_string(rhs.k_));
  }

  void add_term(int n, int s, const Rat& c) {
    if (c == 0) return;
    if (n > z_order_ || s > w_order_) return;
    if (n < z_shift_)
      throw internal_error("SeriesZW: term z^" + std::to_string(n) + " below z_shift " +
                           std::to_string(z_shift_));
    if (s < 0) throw internal_error("SeriesZW: negative w-exponent");
    const auto [it, inserted] = coeffs_.try_emplace(Key{n, s}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  int k_;
  int z_order_;
  int w_order_;
  int z_shift_;
  TermMap coeffs_;
};

struct CoeffMismatch {
  int n = 0;
  int s = 0;
  Rat lhs;
  Rat rhs;
};

// First differing coefficient over the intersection of the two exact
// rectangles, or nullopt when the series agree there.
inline std::optional<CoeffMismatch> first_mismatch(const SeriesZW& a, const SeriesZW& b) {
  const int zo = std::min(a.z_order(), b.z_order());
  const int wo = std::min(a.w_order(), b.w_order());
  for (const auto& [key, c] : a.terms()) {
    if (key.first > zo || key.second > wo) continue;
    const Rat other = b.coeff(key.first, key.second);
    if (other != c) return CoeffMismatch{key.first, key.second, c, other};
  }
  for (const auto& [key, c] : b.terms()) {
    if (key.first > zo || key.second > wo) continue;
    const Rat other = a.coeff(key.first, key.second);
    if (other != c) return CoeffMismatch{key.first, key.second, other, c};
  }
  return std::nullopt;
}

inline bool agrees_with(const SeriesZW& a, const SeriesZW& b) {
  return !first_mismatch(a, b).has_value();
}

}  // namespace kdyck
