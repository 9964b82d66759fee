#include "kdyck/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using kdyck::Int;
using kdyck::Rat;
using kdyck::ReportRow;
using kdyck::TurnKind;

TEST_CASE("rational_string renders lowest terms") {
  CHECK(kdyck::rational_string(Rat(3)) == "3");
  CHECK(kdyck::rational_string(Rat(6, 4)) == "3/2");
  CHECK(kdyck::rational_string(Rat(-2, 6)) == "-1/3");
  CHECK(kdyck::rational_string(Rat(0)) == "0");
}

TEST_CASE("decimal_string rounds to 12 significant digits") {
  CHECK(kdyck::decimal_string(Rat(0)) == "0");
  CHECK(kdyck::decimal_string(Rat(1)) == "1.00000000000");
  CHECK(kdyck::decimal_string(Rat(2, 5)) == "0.400000000000");
  CHECK(kdyck::decimal_string(Rat(1, 3)) == "0.333333333333");
  CHECK(kdyck::decimal_string(Rat(2, 3)) == "0.666666666667");
  CHECK(kdyck::decimal_string(Rat(23, 14)) == "1.64285714286");
  CHECK(kdyck::decimal_string(Rat(-23, 14)) == "-1.64285714286");
  CHECK(kdyck::decimal_string(Rat(1, 1000)) == "0.00100000000000");
  CHECK(kdyck::decimal_string(Rat(Int(123456789012345))) == "123456789012000");
  // Rounding that carries across a power of ten.
  CHECK(kdyck::decimal_string(Rat(Int("9999999999995"), Int("10000000000000"))) ==
        "1.00000000000");
  CHECK(kdyck::decimal_string(Rat(1, 7), 3) == "0.143");
  CHECK(kdyck::decimal_string(Rat(999, 1), 2) == "1000");
}

TEST_CASE("csv_field quotes only when needed") {
  CHECK(kdyck::csv_field("plain") == "plain");
  CHECK(kdyck::csv_field("a,b") == "\"a,b\"");
  CHECK(kdyck::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(kdyck::csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("write_csv emits the fixed header and LF rows") {
  const std::vector<ReportRow> rows = {
      kdyck::make_row(2, 2, 1, TurnKind::Min, Int(3), Int(3)),
      kdyck::make_row(1, 4, 2, TurnKind::Max, Int(23), Int(14)),
  };
  std::ostringstream out;
  kdyck::write_csv(out, rows);
  CHECK(out.str() ==
        "k,N,s,kind,sum,count,average_exact,average_decimal\n"
        "2,2,1,min,3,3,1,1.00000000000\n"
        "1,4,2,max,23,14,23/14,1.64285714286\n");
}

TEST_CASE("write_json emits ordered keys and string-valued integers") {
  const std::vector<ReportRow> rows = {
      kdyck::make_row(1, 3, 1, TurnKind::Osc, Int(2), Int(5)),
  };
  std::ostringstream out;
  kdyck::write_json(out, rows);
  const std::string text = out.str();
  CHECK(text.back() == '\n');

  const nlohmann::json parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const nlohmann::json& row = parsed[0];
  CHECK(row["k"] == 1);
  CHECK(row["N"] == 3);
  CHECK(row["s"] == 1);
  CHECK(row["kind"] == "osc");
  CHECK(row["sum"] == "2");
  CHECK(row["count"] == "5");
  CHECK(row["average_exact"] == "2/5");
  CHECK(row["average_decimal"] == "0.400000000000");

  // Key order is part of the output contract.
  const std::size_t pk = text.find("\"k\"");
  const std::size_t pn = text.find("\"N\"");
  const std::size_t ps = text.find("\"s\"");
  const std::size_t pkind = text.find("\"kind\"");
  const std::size_t psum = text.find("\"sum\"");
  const std::size_t pcount = text.find("\"count\"");
  const std::size_t pexact = text.find("\"average_exact\"");
  const std::size_t pdec = text.find("\"average_decimal\"");
  CHECK(pk < pn);
  CHECK(pn < ps);
  CHECK(ps < pkind);
  CHECK(pkind < psum);
  CHECK(psum < pcount);
  CHECK(pcount < pexact);
  CHECK(pexact < pdec);
}

TEST_CASE("kind names round-trip") {
  CHECK(kdyck::kind_name(kdyck::kind_from_name("min")) == std::string("min"));
  CHECK(kdyck::kind_name(kdyck::kind_from_name("max")) == std::string("max"));
  CHECK(kdyck::kind_name(kdyck::kind_from_name("osc")) == std::string("osc"));
  CHECK_THROWS_AS(kdyck::kind_from_name("avg"), std::invalid_argument);
}

TEST_CASE("make_row rejects a nonpositive count") {
  CHECK_THROWS_AS(kdyck::make_row(1, 1, 1, TurnKind::Min, Int(0), Int(0)),
                  kdyck::internal_error);
}
