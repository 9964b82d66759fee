#pragma once

// Kernel-equation solutions and the generating functions of cumulative
// turn statistics.
//
// The level generating function of k-Dyck path prefixes satisfies the
// kernel equation u = z + z w u^(k+1). Its power-series solution ubar
// (and uhat, the w = 1 specialization) is obtained by fixed-point
// iteration; the turn generating functions are rational combinations of
// ubar, uhat and uhat^(-k). Every builder computes with padded internal
// truncation orders so that the returned series is exact on the
// requested rectangle; the final truncation would throw if the padding
// were ever insufficient.

#include "kdyck/series.hpp"
#include "kdyck/upoly.hpp"

#include <stdexcept>

namespace kdyck {

// Power-series solution of u = z + z w u^(k+1) (with_w) or of
// u = z + z u^(k+1) (uhat). The solution is the unique series
// z + O(z^(k+2)); each fixed-point round stabilizes one more z-block of
// width k+1, so ceil(z_order/(k+1)) + 1 rounds suffice.
inline SeriesZW solve_kernel(int k, bool with_w, int z_order, int w_order) {
  if (k < 1) throw std::invalid_argument("solve_kernel: k must be >= 1");
  if (z_order < 1) throw std::invalid_argument("solve_kernel: z_order must be >= 1");
  if (w_order < 0) throw std::invalid_argument("solve_kernel: w_order must be >= 0");
  const int wo = with_w ? w_order : unbounded_order;
  const SeriesZW z = SeriesZW::monomial(k, z_order, wo, Rat(1), 1, 0);
  SeriesZW u = z;
  const int rounds = (z_order + k) / (k + 1) + 1;
  for (int r = 0; r < rounds; ++r) u = z + u.pow(k + 1).shifted(1, with_w ? 1 : 0);
  return u;
}

// Laurent expansion of uhat^(-k): leading term z^(-k), then
// -(k/(lambda+1)) C((k+1)lambda, lambda) z^((k+1)lambda+1) for
// lambda >= 0. Exact through z^z_order.
inline SeriesZW uhat_neg_k(int k, int z_order) {
  if (k < 1) throw std::invalid_argument("uhat_neg_k: k must be >= 1");
  if (z_order < -k) throw std::invalid_argument("uhat_neg_k: z_order must be >= -k");
  const int padded = z_order + k + 1;
  const SeriesZW uhat = solve_kernel(k, false, padded, 0);
  const SeriesZW one = SeriesZW::monomial(k, padded, unbounded_order, Rat(1));
  return one.divided_by(uhat.pow(k)).truncated_z(z_order);
}

// Partial sum F_0 + F_1 + ... + F_{num_slices} of the slice recurrence
// F_0 = 1, F_{m+1} = slice_step(F_m). F_m is homogeneous of degree m in
// w and has u-degree at most mk, so with u_order = k*num_slices + 1 no
// u-truncation occurs and the sum is exact through w^num_slices.
inline UPolySeries slice_sum(int k, int num_slices, int z_order) {
  if (num_slices < 0) throw std::invalid_argument("slice_sum: num_slices must be >= 0");
  const int u_order = k * num_slices + 1;
  UPolySeries total = UPolySeries::one(k, z_order, num_slices, u_order);
  UPolySeries fm = total;
  for (int m = 1; m <= num_slices; ++m) {
    fm = slice_step(fm);
    total = total + fm;
  }
  return total;
}

// Substitution u := z into the slice partial sum. The kernel method
// identifies this with (ubar - z) / (w z^(k+2)).
inline SeriesZW eval_F_at_z(int k, int z_order, int w_order) {
  return slice_sum(k, w_order, z_order).eval_at_z();
}

namespace detail {

inline SeriesZW one_minus_w(int k, int z_order, int w_order) {
  return SeriesZW::monomial(k, z_order, w_order, Rat(1)) -
         SeriesZW::monomial(k, z_order, w_order, Rat(1), 0, 1);
}

// Shared building blocks of the three turn generating functions, at
// padded orders.
struct KernelParts {
  int D;
  int S;
  SeriesZW ubar;
  SeriesZW uhat;
  SeriesZW ubar_minus_z_over_uhat_k;  // (ubar - z) / uhat^k, valuation 2

  KernelParts(int k, int z_order, int w_order)
      : D(z_order + k + 4),
        S(w_order + 2),
        ubar(solve_kernel(k, true, D, S)),
        uhat(solve_kernel(k, false, D, 0)),
        ubar_minus_z_over_uhat_k(
            (ubar - SeriesZW::monomial(k, D, S, Rat(1), 1, 0)).divided_by(uhat.pow(k))) {
    if (z_order < 1) throw std::invalid_argument("turn generating functions need z_order >= 1");
    if (w_order < 0) throw std::invalid_argument("turn generating functions need w_order >= 0");
  }
};

}  // namespace detail

// Generating function of cumulative s-th min-turn levels: the
// coefficient of z^((k+1)N) w^s is the sum of the s-th min-turn level
// over all k-Dyck paths with N up-steps. Built as
//   k w uhat / (z (1-w)^2)
//   + (ubar - z) / (z^2 (1-w)^2 uhat^k)
//   - (k+1) w ubar / (z (1-w)^2).
inline SeriesZW min_gf(int k, int z_order, int w_order) {
  const detail::KernelParts p(k, z_order, w_order);
  const SeriesZW inv_w2 = detail::one_minus_w(k, p.D, p.S).pow(2).reciprocal();
  const SeriesZW up_part = (p.uhat.scaled(Rat(k)) * inv_w2).shifted(-1, 1);
  const SeriesZW mid_part = (p.ubar_minus_z_over_uhat_k * inv_w2).shifted(-2, 0);
  const SeriesZW bar_part = (p.ubar.scaled(Rat(k + 1)) * inv_w2).shifted(-1, 1);
  return (up_part + mid_part - bar_part).as_integer_power_series().truncated(z_order, w_order);
}

// Generating function of cumulative s-th max-turn levels:
//   k w uhat / (z (1-w)^2) - k w ubar / (z (1-w)^2)
//   + w (ubar - z) / (z^2 (1-w)^2 uhat^k) - w^2 ubar / (z (1-w)^2).
inline SeriesZW max_gf(int k, int z_order, int w_order) {
  const detail::KernelParts p(k, z_order, w_order);
  const SeriesZW inv_w2 = detail::one_minus_w(k, p.D, p.S).pow(2).reciprocal();
  const SeriesZW up_part = (p.uhat.scaled(Rat(k)) * inv_w2).shifted(-1, 1);
  const SeriesZW bar_part = (p.ubar.scaled(Rat(k)) * inv_w2).shifted(-1, 1);
  const SeriesZW mid_part = (p.ubar_minus_z_over_uhat_k * inv_w2).shifted(-2, 1);
  const SeriesZW w2_part = (p.ubar * inv_w2).shifted(-1, 2);
  return (up_part - bar_part + mid_part - w2_part)
      .as_integer_power_series()
      .truncated(z_order, w_order);
}

// Generating function of cumulative s-th oscillation lengths:
//   w ubar / (z (1-w)) - (ubar - z) / (z^2 (1-w) uhat^k).
// Coefficientwise it equals max_gf - min_gf.
inline SeriesZW osc_gf(int k, int z_order, int w_order) {
  const detail::KernelParts p(k, z_order, w_order);
  const SeriesZW inv_w1 = detail::one_minus_w(k, p.D, p.S).reciprocal();
  const SeriesZW bar_part = (p.ubar * inv_w1).shifted(-1, 1);
  const SeriesZW mid_part = (p.ubar_minus_z_over_uhat_k * inv_w1).shifted(-2, 0);
  return (bar_part - mid_part).as_integer_power_series().truncated(z_order, w_order);
}

// Pure-z generating function whose z^L coefficient counts length-L
// nonnegative walks from level h to the axis whose first step is an
// up-step: (uhat - z) uhat^h / z.
inline SeriesZW min_right_part(int k, int h, int z_order) {
  if (h < 0) throw std::invalid_argument("min_right_part: h must be >= 0");
  const int padded = z_order + h + 3;
  const SeriesZW uhat = solve_kernel(k, false, padded, 0);
  const SeriesZW z = SeriesZW::monomial(k, padded, unbounded_order, Rat(1), 1, 0);
  return ((uhat - z) * uhat.pow(h)).shifted(-1, 0).truncated_z(z_order);
}

// Pure-z generating function whose z^L coefficient counts length-L
// nonnegative walks from level h to the axis with no constraint on the
// first step: uhat^(h+1) / z.
inline SeriesZW max_right_part(int k, int h, int z_order) {
  if (h < 0) throw std::invalid_argument("max_right_part: h must be >= 0");
  const int padded = z_order + h + 3;
  const SeriesZW uhat = solve_kernel(k, false, padded, 0);
  return uhat.pow(h + 1).shifted(-1, 0).truncated_z(z_order);
}

}  // namespace kdyck
