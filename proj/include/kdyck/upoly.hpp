#pragma once

// Polynomials in the catalytic variable u with SeriesZW coefficients,
// the carrier for the slice recurrence. u marks the level a partial
// path ends on. All coefficient series of one polynomial share the same
// (k, z_order, w_order); the accessors keep that invariant.

#include "kdyck/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdyck {

class UPolySeries {
 public:
  UPolySeries(int k, int z_order, int w_order, int u_order)
      : k_(k), z_order_(z_order), w_order_(w_order) {
    if (u_order < 0) throw std::invalid_argument("UPolySeries: u_order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(u_order) + 1, SeriesZW(k, z_order, w_order));
  }

  // The constant polynomial 1.
  static UPolySeries one(int k, int z_order, int w_order, int u_order) {
    UPolySeries out(k, z_order, w_order, u_order);
    out.coeffs_[0] = SeriesZW::monomial(k, z_order, w_order, Rat(1));
    return out;
  }

  int k() const { return k_; }
  int z_order() const { return z_order_; }
  int w_order() const { return w_order_; }
  int u_order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const SeriesZW& coeff(int j) const {
    check_degree(j);
    return coeffs_[static_cast<std::size_t>(j)];
  }

  void set_coeff(int j, const SeriesZW& series) {
    check_degree(j);
    coeffs_[static_cast<std::size_t>(j)] = series.truncated(z_order_, w_order_);
  }

  void accumulate(int j, const SeriesZW& series) {
    check_degree(j);
    SeriesZW& slot = coeffs_[static_cast<std::size_t>(j)];
    slot = (slot + series).truncated(z_order_, w_order_);
  }

  UPolySeries operator+(const UPolySeries& rhs) const {
    require_same_shape(rhs);
    UPolySeries out(k_, z_order_, w_order_, u_order());
    for (int j = 0; j <= u_order(); ++j)
      out.coeffs_[static_cast<std::size_t>(j)] =
          (coeff(j) + rhs.coeff(j)).truncated(z_order_, w_order_);
    return out;
  }

  UPolySeries operator-(const UPolySeries& rhs) const {
    require_same_shape(rhs);
    UPolySeries out(k_, z_order_, w_order_, u_order());
    for (int j = 0; j <= u_order(); ++j)
      out.coeffs_[static_cast<std::size_t>(j)] =
          (coeff(j) - rhs.coeff(j)).truncated(z_order_, w_order_);
    return out;
  }

  // Product, with u-degrees beyond u_order dropped. The callers that
  // rely on low u-degrees being exact must size u_order so nothing
  // relevant spills over.
  UPolySeries operator*(const UPolySeries& rhs) const {
    require_same_shape(rhs);
    UPolySeries out(k_, z_order_, w_order_, u_order());
    for (int i = 0; i <= u_order(); ++i) {
      if (coeff(i).is_zero()) continue;
      for (int j = 0; i + j <= u_order() && j <= rhs.u_order(); ++j) {
        if (rhs.coeff(j).is_zero()) continue;
        out.accumulate(i + j, coeff(i) * rhs.coeff(j));
      }
    }
    return out;
  }

  // Substitution u := z.
  SeriesZW eval_at_z() const {
    SeriesZW total(k_, z_order_, w_order_);
    for (int j = 0; j <= u_order(); ++j) {
      if (coeff(j).is_zero()) continue;
      total = total + coeff(j).shifted(j, 0).truncated(z_order_, w_order_);
    }
    return total;
  }

 private:
  void check_degree(int j) const {
    if (j < 0 || j > u_order())
      throw std::out_of_range("UPolySeries: u-degree " + std::to_string(j) +
                              " out of range 0.." + std::to_string(u_order()));
  }

  void require_same_shape(const UPolySeries& rhs) const {
    if (k_ != rhs.k_ || z_order_ != rhs.z_order_ || w_order_ != rhs.w_order_)
      throw std::invalid_argument("UPolySeries: mixing polynomials with different parameters");
  }

  int k_;
  int z_order_;
  int w_order_;
  std::vector<SeriesZW> coeffs_;
};

// One slice of the transfer recurrence: an up-step from level j to j+k
// followed by a maximal down-run of any length i <= j+k, i.e.
// u^j -> z w * (z^i u^(j+k-i) summed over 0 <= i <= j+k),
// applied to every term. Output u-degrees beyond f's u_order are
// dropped.
inline UPolySeries slice_step(const UPolySeries& f) {
  const int k = f.k();
  UPolySeries out(k, f.z_order(), f.w_order(), f.u_order());
  for (int j = 0; j <= f.u_order(); ++j) {
    const SeriesZW& cj = f.coeff(j);
    if (cj.is_zero()) continue;
    for (int i = 0; i <= j + k; ++i) {
      const int d = j + k - i;
      if (d > f.u_order()) continue;
      out.accumulate(d, cj.shifted(1 + i, 1));
    }
  }
  return out;
}

}  // namespace kdyck
