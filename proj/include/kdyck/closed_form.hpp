#pragma once

// Closed-form evaluators for turn statistics of k-Dyck paths.
//
// A k-Dyck path takes up-steps (1, k) and down-steps (1, -1), starts and
// ends on the x-axis and never goes below it. A path with N up-steps has
// length (k+1)N. The s-th max-turn level is the height at the top of the
// s-th up-step; the s-th min-turn level is the height after the maximal
// down-run that follows it; their difference is the s-th oscillation
// length. The functions here evaluate the binomial-sum formulas for the
// cumulative statistics over all paths of a given size, exactly.

#include "kdyck/numeric.hpp"

#include <stdexcept>
#include <string>

namespace kdyck {

// A (k, N, s) query: paths with up-step (1, k) and N up-steps,
// statistic of the s-th turn. Turn queries require 1 <= s <= N.
struct StatRequest {
  int k = 1;
  int N = 0;
  int s = 1;
};

inline void validate_path_class(int k, long long N) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
}

inline void validate(const StatRequest& req) {
  validate_path_class(req.k, req.N);
  if (req.s < 1 || req.s > req.N)
    throw std::invalid_argument("turn index s=" + std::to_string(req.s) +
                                " out of range 1.." + std::to_string(req.N));
}

// Number of k-Dyck paths with N up-steps: C((k+1)N, N) / (kN+1).
inline Int fuss_catalan(int k, long long N) {
  validate_path_class(k, N);
  return exact_div(binomial((k + 1) * N, N), Int(k * N + 1));
}

// k/(lambda+1) * C((k+1)lambda, lambda), the coefficient family of the
// principal branch of u^(-k); see uhat_neg_k in genfun.hpp.
inline Int down_coeff(int k, long long lambda) {
  validate_path_class(k, lambda);
  return exact_div(Int(k) * binomial((k + 1) * lambda, lambda), Int(lambda + 1));
}

// Cumulative s-th min-turn level over all k-Dyck paths with N up-steps.
inline Int min_sum(const StatRequest& req) {
  validate(req);
  Int total = Int(req.s) * req.k * fuss_catalan(req.k, req.N);
  for (int i = 1; i <= req.s; ++i)
    total -= Int(req.s + 1 - i) * fuss_catalan(req.k, i) * down_coeff(req.k, req.N - i);
  return total;
}

// Cumulative s-th max-turn level over all k-Dyck paths with N up-steps.
inline Int max_sum(const StatRequest& req) {
  validate(req);
  Int total = Int(req.s) * req.k * fuss_catalan(req.k, req.N);
  for (int i = 1; i < req.s; ++i)
    total -= Int(req.s - i) * fuss_catalan(req.k, i) * down_coeff(req.k, req.N - i);
  return total;
}

// Cumulative s-th oscillation length; equals max_sum - min_sum.
inline Int osc_sum(const StatRequest& req) {
  validate(req);
  Int total = 0;
  for (int i = 1; i <= req.s; ++i)
    total += fuss_catalan(req.k, i) * down_coeff(req.k, req.N - i);
  return total;
}

inline Rat avg_min(const StatRequest& req) {
  return Rat(min_sum(req), fuss_catalan(req.k, req.N));
}

inline Rat avg_max(const StatRequest& req) {
  return Rat(max_sum(req), fuss_catalan(req.k, req.N));
}

inline Rat avg_osc(const StatRequest& req) {
  return Rat(osc_sum(req), fuss_catalan(req.k, req.N));
}

}  // namespace kdyck
