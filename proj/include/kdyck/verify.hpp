#pragma once

// Cross-verification: every identity the three computation routes
// (closed forms, series coefficients, exhaustive enumeration) must
// satisfy, packaged as named checks so the CLI `verify` command and the
// acceptance suite share one implementation. Each check returns a
// pass/fail result with either a scope summary or the first
// counterexample.

#include "kdyck/closed_form.hpp"
#include "kdyck/genfun.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/series.hpp"
#include "kdyck/upoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdyck {

// A computation was refused because it would enumerate more paths than
// the configured budget allows.
class resource_bound_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_within_bound(int k, int N, const Int& bound) {
  const Int count = fuss_catalan(k, N);
  if (count > bound)
    throw resource_bound_error("enumeration of k=" + std::to_string(k) +
                               " N=" + std::to_string(N) + " needs " + count.str() +
                               " paths, over the budget of " + bound.str() +
                               " (raise KDYCK_ORACLE_BOUND to override)");
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SweepCell {
  int k = 1;
  int n_max = 0;
};

inline std::string describe(const std::vector<SweepCell>& cells) {
  std::string out;
  for (const SweepCell& cell : cells) {
    if (!out.empty()) out += ", ";
    out += "k=" + std::to_string(cell.k) + " N<=" + std::to_string(cell.n_max);
  }
  return out;
}

namespace detail {

inline std::string show(const CoeffMismatch& m) {
  return "z^" + std::to_string(m.n) + " w^" + std::to_string(m.s) + ": " +
         numerator(m.lhs).str() +
         (denominator(m.lhs) == 1 ? "" : "/" + denominator(m.lhs).str()) + " vs " +
         numerator(m.rhs).str() +
         (denominator(m.rhs) == 1 ? "" : "/" + denominator(m.rhs).str());
}

}  // namespace detail

// ubar and uhat reproduce themselves under u -> z + z w u^(k+1).
inline CheckResult check_kernel_fixed_point(int k_max, int z_order, int w_order) {
  CheckResult result{"kernel-fixed-point", true, ""};
  for (int k = 1; k <= k_max; ++k) {
    for (const bool with_w : {true, false}) {
      const SeriesZW u = solve_kernel(k, with_w, z_order, w_order);
      const SeriesZW z = SeriesZW::monomial(k, u.z_order(), u.w_order(), Rat(1), 1, 0);
      const SeriesZW image = z + u.pow(k + 1).shifted(1, with_w ? 1 : 0);
      if (const auto m = first_mismatch(u, image)) {
        result.passed = false;
        result.detail = "k=" + std::to_string(k) + (with_w ? " ubar " : " uhat ") +
                        detail::show(*m);
        return result;
      }
    }
  }
  result.detail = "k<=" + std::to_string(k_max) + ", z^" + std::to_string(z_order) + ", w^" +
                  std::to_string(w_order) + ": u = z + z w u^(k+1) holds for ubar and uhat";
  return result;
}

// Support shape: ubar only carries z^((k+1)N+1) w^N, uhat only
// z^((k+1)m+1), and uhat^(-k) only z^(-k) and z^((k+1)m+1).
inline CheckResult check_kernel_support(int k_max, int z_order, int w_order) {
  CheckResult result{"kernel-support", true, ""};
  for (int k = 1; k <= k_max; ++k) {
    const SeriesZW ubar = solve_kernel(k, true, z_order, w_order);
    for (const auto& [key, c] : ubar.terms()) {
      if (key.first != (k + 1) * key.second + 1) {
        result.passed = false;
        result.detail = "k=" + std::to_string(k) + " ubar has stray term z^" +
                        std::to_string(key.first) + " w^" + std::to_string(key.second);
        return result;
      }
    }
    const SeriesZW uhat = solve_kernel(k, false, z_order, 0);
    for (const auto& [key, c] : uhat.terms()) {
      if (key.second != 0 || (key.first - 1) % (k + 1) != 0) {
        result.passed = false;
        result.detail = "k=" + std::to_string(k) + " uhat has stray term z^" +
                        std::to_string(key.first) + " w^" + std::to_string(key.second);
        return result;
      }
    }
    const SeriesZW lau = uhat_neg_k(k, z_order);
    for (const auto& [key, c] : lau.terms()) {
      if (key.first != -k && (key.first - 1) % (k + 1) != 0) {
        result.passed = false;
        result.detail = "k=" + std::to_string(k) + " uhat^(-k) has stray term z^" +
                        std::to_string(key.first);
        return result;
      }
    }
  }
  result.detail = "k<=" + std::to_string(k_max) +
                  ": supports lie on the expected exponent lattices";
  return result;
}

// Series coefficients against the explicit binomial formulas:
// [z^((k+1)N+1) w^N] ubar = fuss_catalan(k, N),
// [z^((k+1)m+1)] uhat = C((k+1)m+1, m) / ((k+1)m+1)  (= fuss_catalan),
// uhat^(-k) = z^(-k) - sum of down_coeff(k, m) z^((k+1)m+1).
inline CheckResult check_series_coefficients(int k_max, int z_order) {
  CheckResult result{"series-coefficients", true, ""};
  const auto fail = [&](const std::string& what) {
    result.passed = false;
    result.detail = what;
    return result;
  };
  for (int k = 1; k <= k_max; ++k) {
    const int n_max = (z_order - 1) / (k + 1);
    const SeriesZW ubar = solve_kernel(k, true, z_order, n_max);
    for (int n = 0; n <= n_max; ++n) {
      if (ubar.int_coeff((k + 1) * n + 1, n) != fuss_catalan(k, n))
        return fail("k=" + std::to_string(k) + " ubar coefficient at N=" + std::to_string(n));
    }
    // The two closed forms of the coefficient family agree well beyond
    // the retained series orders.
    for (int m = 0; m <= z_order; ++m) {
      const Int direct = exact_div(binomial((k + 1) * m + 1, m), Int((k + 1) * m + 1));
      if (direct != fuss_catalan(k, m))
        return fail("k=" + std::to_string(k) + " coefficient formulas disagree at m=" +
                    std::to_string(m));
    }
    const SeriesZW uhat = solve_kernel(k, false, z_order, 0);
    for (int m = 0; m <= n_max; ++m) {
      if (uhat.int_coeff((k + 1) * m + 1, 0) != fuss_catalan(k, m))
        return fail("k=" + std::to_string(k) + " uhat coefficient at m=" + std::to_string(m));
    }
    const SeriesZW lau = uhat_neg_k(k, z_order);
    if (lau.int_coeff(-k, 0) != 1)
      return fail("k=" + std::to_string(k) + " uhat^(-k) leading coefficient");
    for (int m = 0; (k + 1) * m + 1 <= z_order; ++m) {
      if (lau.int_coeff((k + 1) * m + 1, 0) != -down_coeff(k, m))
        return fail("k=" + std::to_string(k) + " uhat^(-k) coefficient at m=" +
                    std::to_string(m));
    }
  }
  result.detail = "k<=" + std::to_string(k_max) + ", z^" + std::to_string(z_order) +
                  ": ubar, uhat, uhat^(-k) match their binomial expansions";
  return result;
}

// Multiplicative form of the kernel method: with F the slice partial
// sum through w^w_order, (u - z - z w u^(k+1)) F = u - ubar on every
// w-degree <= w_order.
inline CheckResult check_slice_identity(int k_max, int w_order, int z_order) {
  CheckResult result{"slice-kernel-identity", true, ""};
  for (int k = 1; k <= k_max; ++k) {
    const UPolySeries f = slice_sum(k, w_order, z_order);
    const int u_order = f.u_order();
    UPolySeries kernel(k, z_order, w_order, u_order);
    kernel.set_coeff(1, SeriesZW::monomial(k, z_order, w_order, Rat(1)));
    kernel.accumulate(0, SeriesZW::monomial(k, z_order, w_order, Rat(-1), 1, 0));
    kernel.accumulate(k + 1, SeriesZW::monomial(k, z_order, w_order, Rat(-1), 1, 1));
    const UPolySeries lhs = kernel * f;
    UPolySeries rhs(k, z_order, w_order, u_order);
    rhs.set_coeff(1, SeriesZW::monomial(k, z_order, w_order, Rat(1)));
    rhs.accumulate(0, solve_kernel(k, true, z_order, w_order).scaled(Rat(-1)));
    for (int j = 0; j <= u_order; ++j) {
      if (const auto m = first_mismatch(lhs.coeff(j), rhs.coeff(j))) {
        result.passed = false;
        result.detail = "k=" + std::to_string(k) + " u^" + std::to_string(j) + " " +
                        detail::show(*m);
        return result;
      }
    }
  }
  result.detail = "k<=" + std::to_string(k_max) + ", w^" + std::to_string(w_order) + ", u^" +
                  std::to_string(k_max * w_order + 1) + ", z^" + std::to_string(z_order) +
                  ": (u - z - z w u^(k+1)) F = u - ubar";
  return result;
}

// The substitution u := z into the slice partial sum equals
// (ubar - z) / (w z^(k+2)).
inline CheckResult check_f_at_z(int k_max, int z_order, int w_order) {
  CheckResult result{"slice-sum-at-z", true, ""};
  for (int k = 1; k <= k_max; ++k) {
    const SeriesZW lhs = eval_F_at_z(k, z_order, w_order);
    const int pad = z_order + k + 3;
    const SeriesZW ubar = solve_kernel(k, true, pad, w_order + 1);
    const SeriesZW z = SeriesZW::monomial(k, pad, w_order + 1, Rat(1), 1, 0);
    const SeriesZW wz = SeriesZW::monomial(k, pad, w_order + 1, Rat(1), k + 2, 1);
    const SeriesZW rhs = (ubar - z).divided_by(wz).truncated(z_order, w_order);
    if (const auto m = first_mismatch(lhs, rhs)) {
      result.passed = false;
      result.detail = "k=" + std::to_string(k) + " " + detail::show(*m);
      return result;
    }
  }
  result.detail = "k<=" + std::to_string(k_max) + ", z^" + std::to_string(z_order) + ", w^" +
                  std::to_string(w_order) + ": slice sum at u=z equals (ubar-z)/(w z^(k+2))";
  return result;
}

// Closed forms, generating-function coefficients and exhaustive
// enumeration agree on every (k, N, s) cell of the sweep, for all three
// statistics; path counts agree with fuss_catalan.
inline CheckResult check_triple_agreement(const std::vector<SweepCell>& cells,
                                          const Int& oracle_bound) {
  CheckResult result{"triple-agreement", true, ""};
  long long points = 0;
  for (const SweepCell& cell : cells) {
    const int k = cell.k;
    // N = 0 needs no generating functions (an empty path has no turns);
    // only the count check below applies.
    std::optional<SeriesZW> gf_min, gf_max, gf_osc;
    if (cell.n_max >= 1) {
      gf_min = min_gf(k, (k + 1) * cell.n_max, cell.n_max);
      gf_max = max_gf(k, (k + 1) * cell.n_max, cell.n_max);
      gf_osc = osc_gf(k, (k + 1) * cell.n_max, cell.n_max);
    }
    for (int n = 0; n <= cell.n_max; ++n) {
      require_within_bound(k, n, oracle_bound);
      const TurnSums sums = oracle_turn_sums(k, n);
      if (sums.path_count != fuss_catalan(k, n)) {
        result.passed = false;
        result.detail = "k=" + std::to_string(k) + " N=" + std::to_string(n) +
                        ": enumeration found " + sums.path_count.str() +
                        " paths, closed form says " + fuss_catalan(k, n).str();
        return result;
      }
      for (int s = 1; s <= n; ++s) {
        const StatRequest req{k, n, s};
        const struct {
          const char* kind;
          Int closed;
          Int series;
          Int oracle;
        } rows[] = {
            {"min", min_sum(req), gf_min->int_coeff((k + 1) * n, s), sums.min_sums[s - 1]},
            {"max", max_sum(req), gf_max->int_coeff((k + 1) * n, s), sums.max_sums[s - 1]},
            {"osc", osc_sum(req), gf_osc->int_coeff((k + 1) * n, s), sums.osc_sums[s - 1]},
        };
        for (const auto& row : rows) {
          ++points;
          if (row.closed != row.series || row.closed != row.oracle) {
            result.passed = false;
            result.detail = std::string(row.kind) + " k=" + std::to_string(k) + " N=" +
                            std::to_string(n) + " s=" + std::to_string(s) + ": closed=" +
                            row.closed.str() + " series=" + row.series.str() + " oracle=" +
                            row.oracle.str();
            return result;
          }
        }
      }
    }
  }
  result.detail = describe(cells) + ", all s, all kinds (" + std::to_string(points) +
                  " comparisons): closed = series = enumeration";
  return result;
}

// suffix_count agrees with the coefficients of the right-part
// generating functions (uhat - z) uhat^h / z and uhat^(h+1) / z.
inline CheckResult check_right_parts(int k_max, int h_max, int l_max) {
  CheckResult result{"right-parts", true, ""};
  for (int k = 1; k <= k_max; ++k) {
    for (int h = 0; h <= h_max; ++h) {
      const SeriesZW first_up = min_right_part(k, h, l_max);
      const SeriesZW free_start = max_right_part(k, h, l_max);
      for (int l = 0; l <= l_max; ++l) {
        const Int by_series_up = first_up.int_coeff(l, 0);
        const Int by_walk_up = suffix_count(k, h, l, true);
        const Int by_series_free = free_start.int_coeff(l, 0);
        const Int by_walk_free = suffix_count(k, h, l, false);
        if (by_series_up != by_walk_up || by_series_free != by_walk_free) {
          result.passed = false;
          result.detail = "k=" + std::to_string(k) + " h=" + std::to_string(h) + " L=" +
                          std::to_string(l) + ": series (" + by_series_up.str() + ", " +
                          by_series_free.str() + ") vs walk (" + by_walk_up.str() + ", " +
                          by_walk_free.str() + ")";
          return result;
        }
      }
    }
  }
  result.detail = "k<=" + std::to_string(k_max) + ", h<=" + std::to_string(h_max) + ", L<=" +
                  std::to_string(l_max) + ": right-part coefficients match the walk counts";
  return result;
}

// Per-path structural invariants of the turn profile on a sweep:
// max-turn s = min-turn (s-1) + k, min <= max, final min-turn 0, and
// nonnegativity.
inline CheckResult check_turn_profile_invariants(const std::vector<SweepCell>& cells,
                                                 const Int& oracle_bound) {
  CheckResult result{"turn-profile-invariants", true, ""};
  std::optional<std::string> failure;
  for (const SweepCell& cell : cells) {
    for (int n = 0; n <= cell.n_max && !failure; ++n) {
      require_within_bound(cell.k, n, oracle_bound);
      enumerate_paths(cell.k, n, [&](const DyckPath& p) {
        if (failure) return;
        const auto bad = [&](const std::string& what) {
          failure = "k=" + std::to_string(cell.k) + " path " + p.to_string() + ": " + what;
        };
        if (!p.is_valid()) return bad("enumerated path fails is_valid");
        const TurnProfile prof = turn_profile(p);
        if (prof.max_levels.size() != static_cast<std::size_t>(n) ||
            prof.min_levels.size() != static_cast<std::size_t>(n))
          return bad("profile size is not the number of up-steps");
        for (int s = 0; s < n; ++s) {
          const int prev_min = s == 0 ? 0 : prof.min_levels[s - 1];
          if (prof.max_levels[s] != prev_min + cell.k)
            return bad("max-turn " + std::to_string(s + 1) +
                       " does not sit k above the previous min-turn");
          if (prof.min_levels[s] > prof.max_levels[s] || prof.min_levels[s] < 0)
            return bad("min-turn " + std::to_string(s + 1) + " out of range");
        }
        if (n > 0 && prof.min_levels[static_cast<std::size_t>(n) - 1] != 0)
          return bad("last min-turn is not on the axis");
      });
    }
  }
  if (failure) {
    result.passed = false;
    result.detail = *failure;
    return result;
  }
  result.detail = describe(cells) + ": turn profiles satisfy the structural invariants";
  return result;
}

// Boundary identities of the closed forms: the first max-turn is always
// at level k, the last min-turn at level 0, and cumulative values stay
// between 0 and kN * (number of paths).
inline CheckResult check_boundary_identities(const std::vector<SweepCell>& cells) {
  CheckResult result{"boundary-identities", true, ""};
  const auto fail = [&](int k, int n, const std::string& what) {
    result.passed = false;
    result.detail = "k=" + std::to_string(k) + " N=" + std::to_string(n) + ": " + what;
    return result;
  };
  for (const SweepCell& cell : cells) {
    const int k = cell.k;
    for (int n = 1; n <= cell.n_max; ++n) {
      const Int count = fuss_catalan(k, n);
      if (max_sum(StatRequest{k, n, 1}) != Int(k) * count)
        return fail(k, n, "first max-turn sum is not k * count");
      if (min_sum(StatRequest{k, n, n}) != 0)
        return fail(k, n, "last min-turn sum is not 0");
      for (int s = 1; s <= n; ++s) {
        const StatRequest req{k, n, s};
        const Int mn = min_sum(req);
        const Int mx = max_sum(req);
        if (mx - mn != osc_sum(req))
          return fail(k, n, "osc_sum differs from max_sum - min_sum at s=" + std::to_string(s));
        // Per path the s-th max-turn level lies in [k, kN] and is at
        // least the s-th min-turn level, with at least one path
        // descending after its s-th up-step, so the cumulative sums
        // obey 0 <= min < max and k*count <= max <= kN*count.
        if (mn < 0 || mn >= mx || mx < Int(k) * count || mx > Int(k) * n * count)
          return fail(k, n, "cumulative sums out of range at s=" + std::to_string(s));
      }
    }
  }
  result.detail = describe(cells) + ": boundary and ordering identities of the closed forms";
  return result;
}

struct VerifyOptions {
  int k_max = 3;
  int n_max = 6;
  int z_order = 30;
  int w_order = 6;
  int h_max = 5;
  int l_max = 20;
  Int oracle_bound = Int(10000000);
};

inline std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
  if (opt.k_max < 1) throw std::invalid_argument("verify: k_max must be >= 1");
  if (opt.n_max < 0) throw std::invalid_argument("verify: n_max must be >= 0");
  if (opt.z_order < opt.k_max + 2)
    throw std::invalid_argument("verify: z_order must be at least k_max + 2");
  if (opt.w_order < 1) throw std::invalid_argument("verify: w_order must be >= 1");
  std::vector<SweepCell> cells;
  for (int k = 1; k <= opt.k_max; ++k) cells.push_back(SweepCell{k, opt.n_max});
  std::vector<CheckResult> results;
  results.push_back(check_kernel_fixed_point(opt.k_max, opt.z_order, opt.w_order));
  results.push_back(check_kernel_support(opt.k_max, opt.z_order, opt.w_order));
  results.push_back(check_series_coefficients(opt.k_max, opt.z_order));
  results.push_back(check_slice_identity(opt.k_max, opt.w_order, opt.z_order));
  results.push_back(check_f_at_z(opt.k_max, std::min(opt.z_order, 20), opt.w_order));
  results.push_back(check_right_parts(std::min(opt.k_max, 2), opt.h_max, opt.l_max));
  results.push_back(check_triple_agreement(cells, opt.oracle_bound));
  results.push_back(check_turn_profile_invariants(cells, opt.oracle_bound));
  results.push_back(check_boundary_identities(cells));
  return results;
}

}  // namespace kdyck
