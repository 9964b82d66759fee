#include "kdyck/paths.hpp"

#include "kdyck/genfun.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

using kdyck::DyckPath;
using kdyck::Int;
using kdyck::Step;
using kdyck::TurnKind;

namespace {

std::vector<std::string> list_paths(int k, int n) {
  std::vector<std::string> out;
  kdyck::enumerate_paths(k, n, [&](const DyckPath& p) { out.push_back(p.to_string()); });
  return out;
}

DyckPath parse_path(int k, const std::string& text) {
  DyckPath p;
  p.k = k;
  for (char c : text) p.steps.push_back(c == 'U' ? Step::Up : Step::Down);
  return p;
}

}  // namespace

TEST_CASE("enumeration produces exactly the valid paths, in order") {
  CHECK(list_paths(1, 0) == std::vector<std::string>{""});
  CHECK(list_paths(1, 2) == std::vector<std::string>{"UUDD", "UDUD"});
  CHECK(list_paths(2, 2) == std::vector<std::string>{"UUDDDD", "UDUDDD", "UDDUDD"});
  CHECK(list_paths(1, 3) ==
        std::vector<std::string>{"UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"});
}

TEST_CASE("enumerated paths are valid and unique") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 4; ++n) {
      std::vector<std::string> seen = list_paths(k, n);
      for (const std::string& text : seen) {
        CAPTURE(k, n, text);
        CHECK(parse_path(k, text).is_valid());
        CHECK(text.size() == static_cast<std::size_t>((k + 1) * n));
      }
      std::vector<std::string> sorted = seen;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      CHECK(sorted.size() == seen.size());
    }
}

TEST_CASE("turn profiles of hand-checked paths") {
  const kdyck::TurnProfile a = kdyck::turn_profile(parse_path(1, "UUDD"));
  CHECK(a.max_levels == std::vector<int>{1, 2});
  CHECK(a.min_levels == std::vector<int>{1, 0});

  const kdyck::TurnProfile b = kdyck::turn_profile(parse_path(2, "UDDUDD"));
  CHECK(b.max_levels == std::vector<int>{2, 2});
  CHECK(b.min_levels == std::vector<int>{0, 0});

  const kdyck::TurnProfile c = kdyck::turn_profile(parse_path(2, "UUDDDD"));
  CHECK(c.max_levels == std::vector<int>{2, 4});
  CHECK(c.min_levels == std::vector<int>{2, 0});

  const kdyck::TurnProfile empty = kdyck::turn_profile(parse_path(1, ""));
  CHECK(empty.max_levels.empty());
  CHECK(empty.min_levels.empty());
}

TEST_CASE("turn_profile rejects malformed input") {
  CHECK_THROWS_AS(kdyck::turn_profile(parse_path(1, "DU")), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::turn_profile(parse_path(1, "UDD")), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::turn_profile(parse_path(1, "UU")), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::turn_profile(parse_path(2, "UDUDD")), std::invalid_argument);
}

TEST_CASE("profile invariants hold on every enumerated path") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 4; ++n)
      kdyck::enumerate_paths(k, n, [&](const DyckPath& p) {
        const kdyck::TurnProfile prof = kdyck::turn_profile(p);
        CAPTURE(k, n, p.to_string());
        REQUIRE(prof.max_levels.size() == static_cast<std::size_t>(n));
        REQUIRE(prof.min_levels.size() == static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
          const int prev_min = s == 0 ? 0 : prof.min_levels[s - 1];
          CHECK(prof.max_levels[s] == prev_min + k);
          CHECK(prof.min_levels[s] >= 0);
          CHECK(prof.min_levels[s] <= prof.max_levels[s]);
        }
        if (n > 0) CHECK(prof.min_levels[n - 1] == 0);
      });
}

TEST_CASE("oracle_sum and oracle_turn_sums agree") {
  for (int k = 1; k <= 2; ++k)
    for (int n = 1; n <= 4; ++n) {
      const kdyck::TurnSums sums = kdyck::oracle_turn_sums(k, n);
      CHECK(sums.path_count == kdyck::fuss_catalan(k, n));
      for (int s = 1; s <= n; ++s) {
        CAPTURE(k, n, s);
        CHECK(kdyck::oracle_sum(k, n, s, TurnKind::Min) == sums.min_sums[s - 1]);
        CHECK(kdyck::oracle_sum(k, n, s, TurnKind::Max) == sums.max_sums[s - 1]);
        CHECK(kdyck::oracle_sum(k, n, s, TurnKind::Osc) == sums.osc_sums[s - 1]);
      }
    }
}

TEST_CASE("oracle_sum frozen values") {
  CHECK(kdyck::oracle_sum(1, 2, 1, TurnKind::Min) == 1);
  CHECK(kdyck::oracle_sum(1, 2, 1, TurnKind::Max) == 2);
  CHECK(kdyck::oracle_sum(2, 2, 2, TurnKind::Max) == 9);
  CHECK(kdyck::oracle_sum(2, 2, 1, TurnKind::Osc) == 3);
  CHECK(kdyck::oracle_sum(1, 3, 1, TurnKind::Osc) == 2);
}

TEST_CASE("suffix_count small frozen values") {
  // From level 1 with k=1, length 3, first step up: only UDD.
  CHECK(kdyck::suffix_count(1, 1, 3, true) == 1);
  // From level 1 with k=2, length 4, first step up: only UDDD.
  CHECK(kdyck::suffix_count(2, 1, 4, true) == 1);
  // Length 0 is only the empty walk from the axis, and it has no first
  // step to force.
  CHECK(kdyck::suffix_count(1, 0, 0, false) == 1);
  CHECK(kdyck::suffix_count(1, 0, 0, true) == 0);
  CHECK(kdyck::suffix_count(1, 1, 0, false) == 0);
  // From the axis, length (k+1)N walks are whole k-Dyck paths.
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(k, n);
      CHECK(kdyck::suffix_count(k, 0, (k + 1) * n, false) == kdyck::fuss_catalan(k, n));
    }
  // Lengths that cannot end on the axis count zero.
  CHECK(kdyck::suffix_count(1, 0, 3, false) == 0);
  CHECK(kdyck::suffix_count(2, 1, 3, false) == 0);
}

TEST_CASE("suffix_count agrees with the right-part series") {
  for (int k = 1; k <= 2; ++k)
    for (int h = 0; h <= 4; ++h) {
      const kdyck::SeriesZW first_up = kdyck::min_right_part(k, h, 14);
      const kdyck::SeriesZW free_start = kdyck::max_right_part(k, h, 14);
      for (int l = 0; l <= 14; ++l) {
        CAPTURE(k, h, l);
        CHECK(first_up.int_coeff(l, 0) == kdyck::suffix_count(k, h, l, true));
        CHECK(free_start.int_coeff(l, 0) == kdyck::suffix_count(k, h, l, false));
      }
    }
}

TEST_CASE("suffix_count rejects bad arguments") {
  CHECK_THROWS_AS(kdyck::suffix_count(0, 1, 3, false), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::suffix_count(1, -1, 3, false), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::suffix_count(1, 1, -1, false), std::invalid_argument);
}
