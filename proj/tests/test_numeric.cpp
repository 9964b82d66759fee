#include "kdyck/numeric.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using kdyck::Int;
using kdyck::Rat;

namespace {

// Independent oracle: Pascal's triangle by pure addition.
std::vector<std::vector<Int>> pascal_triangle(int rows) {
  std::vector<std::vector<Int>> tri(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    tri[n].assign(n + 1, Int(1));
    for (int r = 1; r < n; ++r) tri[n][r] = tri[n - 1][r - 1] + tri[n - 1][r];
  }
  return tri;
}

}  // namespace

TEST_CASE("binomial matches Pascal's triangle") {
  const auto tri = pascal_triangle(60);
  for (int n = 0; n <= 60; ++n)
    for (int r = 0; r <= n; ++r) {
      CAPTURE(n, r);
      CHECK(kdyck::binomial(n, r) == tri[n][r]);
    }
}

TEST_CASE("binomial outside the triangle is zero") {
  CHECK(kdyck::binomial(5, -1) == 0);
  CHECK(kdyck::binomial(5, 6) == 0);
  CHECK(kdyck::binomial(0, 0) == 1);
  CHECK_THROWS_AS(kdyck::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial handles large arguments exactly") {
  // C(60, 30), frozen from the Pascal-triangle oracle.
  CHECK(kdyck::binomial(60, 30) == Int("118264581564861424"));
  CHECK(kdyck::binomial(200, 100) ==
        kdyck::binomial(199, 99) + kdyck::binomial(199, 100));
}

TEST_CASE("exact_div divides exactly or throws") {
  CHECK(kdyck::exact_div(Int(42), Int(7)) == 6);
  CHECK(kdyck::exact_div(Int(-42), Int(7)) == -6);
  CHECK(kdyck::exact_div(Int(0), Int(5)) == 0);
  CHECK_THROWS_AS(kdyck::exact_div(Int(43), Int(7)), kdyck::internal_error);
  CHECK_THROWS_AS(kdyck::exact_div(Int(1), Int(0)), kdyck::internal_error);
}

TEST_CASE("rationals normalize to lowest terms") {
  const Rat r(Int(6), Int(4));
  CHECK(numerator(r) == 3);
  CHECK(denominator(r) == 2);
  CHECK(Rat(Int(0), Int(7)) == 0);
}
