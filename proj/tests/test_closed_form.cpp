#include "kdyck/closed_form.hpp"

#include "kdyck/paths.hpp"

#include <catch2/catch_amalgamated.hpp>

using kdyck::Int;
using kdyck::Rat;
using kdyck::StatRequest;

TEST_CASE("fuss_catalan counts k-Dyck paths") {
  CHECK(kdyck::fuss_catalan(1, 0) == 1);
  CHECK(kdyck::fuss_catalan(1, 1) == 1);
  CHECK(kdyck::fuss_catalan(1, 4) == 14);
  CHECK(kdyck::fuss_catalan(2, 2) == 3);
  CHECK(kdyck::fuss_catalan(2, 3) == 12);
  CHECK(kdyck::fuss_catalan(1, 8) == 1430);
  CHECK(kdyck::fuss_catalan(2, 8) == 43263);
  CHECK(kdyck::fuss_catalan(3, 6) == 7084);
  CHECK(kdyck::fuss_catalan(4, 6) == 23751);
}

TEST_CASE("fuss_catalan equals the enumeration count") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 5; ++n) {
      Int visited = 0;
      kdyck::enumerate_paths(k, n, [&](const kdyck::DyckPath&) { ++visited; });
      CAPTURE(k, n);
      CHECK(visited == kdyck::fuss_catalan(k, n));
    }
}

TEST_CASE("down_coeff values") {
  CHECK(kdyck::down_coeff(1, 0) == 1);
  CHECK(kdyck::down_coeff(1, 2) == 2);
  CHECK(kdyck::down_coeff(1, 3) == 5);
  CHECK(kdyck::down_coeff(2, 1) == 3);
  CHECK(kdyck::down_coeff(2, 2) == 10);
  CHECK(kdyck::down_coeff(3, 1) == 6);
}

TEST_CASE("cumulative turn sums, small frozen cases") {
  CHECK(kdyck::min_sum(StatRequest{1, 2, 1}) == 1);
  CHECK(kdyck::min_sum(StatRequest{2, 2, 1}) == 3);
  CHECK(kdyck::min_sum(StatRequest{1, 2, 2}) == 0);
  CHECK(kdyck::max_sum(StatRequest{1, 2, 1}) == 2);
  CHECK(kdyck::max_sum(StatRequest{2, 2, 2}) == 9);
  CHECK(kdyck::max_sum(StatRequest{1, 3, 2}) == 8);
  CHECK(kdyck::osc_sum(StatRequest{1, 2, 1}) == 1);
  CHECK(kdyck::osc_sum(StatRequest{2, 2, 1}) == 3);
}

TEST_CASE("averages are exact rationals in lowest terms") {
  CHECK(kdyck::avg_min(StatRequest{2, 2, 1}) == 1);
  CHECK(kdyck::avg_max(StatRequest{1, 2, 1}) == 1);
  CHECK(kdyck::avg_max(StatRequest{1, 4, 2}) == Rat(23, 14));
  // The five paths with k=1, N=3 have first-oscillation lengths
  // 0, 0, 0, 1, 1, so the average is 2/5.
  CHECK(kdyck::avg_osc(StatRequest{1, 3, 1}) == Rat(2, 5));
}

TEST_CASE("oscillation is the difference of max and min") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 7; ++n)
      for (int s = 1; s <= n; ++s) {
        const StatRequest req{k, n, s};
        CAPTURE(k, n, s);
        CHECK(kdyck::osc_sum(req) == kdyck::max_sum(req) - kdyck::min_sum(req));
      }
}

TEST_CASE("boundary identities") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(k, n);
      // Every path's first up-step tops out at level k.
      CHECK(kdyck::max_sum(StatRequest{k, n, 1}) == Int(k) * kdyck::fuss_catalan(k, n));
      // Every path's last down-run ends on the axis.
      CHECK(kdyck::min_sum(StatRequest{k, n, n}) == 0);
    }
}

TEST_CASE("closed forms agree with exhaustive enumeration") {
  for (int k = 1; k <= 2; ++k)
    for (int n = 1; n <= 5; ++n) {
      const kdyck::TurnSums sums = kdyck::oracle_turn_sums(k, n);
      for (int s = 1; s <= n; ++s) {
        const StatRequest req{k, n, s};
        CAPTURE(k, n, s);
        CHECK(kdyck::min_sum(req) == sums.min_sums[s - 1]);
        CHECK(kdyck::max_sum(req) == sums.max_sums[s - 1]);
        CHECK(kdyck::osc_sum(req) == sums.osc_sums[s - 1]);
      }
    }
}

TEST_CASE("invalid requests are rejected") {
  CHECK_THROWS_AS(kdyck::fuss_catalan(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::fuss_catalan(1, -1), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::min_sum(StatRequest{1, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::max_sum(StatRequest{1, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::osc_sum(StatRequest{1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::down_coeff(-1, 2), std::invalid_argument);
}
