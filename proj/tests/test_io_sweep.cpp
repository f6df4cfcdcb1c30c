#include <cstdlib>
#include <sstream>
#include <string>

#include "doctest.h"
#include "logcap/errors.hpp"
#include "logcap/exact.hpp"
#include "logcap/io.hpp"
#include "logcap/random_sets.hpp"
#include "logcap/sweep.hpp"
#include "logcap/verify.hpp"

using namespace logcap;
using doctest::Approx;

TEST_CASE("inline set parsing") {
  const auto e = parse_inline_set(" -1 : -0.5 , 0.5:1 ");
  REQUIRE(e.size() == 2);
  CHECK(e[0] == Interval{-1.0, -0.5});
  CHECK(e[1] == Interval{0.5, 1.0});
  CHECK(parse_inline_set("1e-1:2.5E0").upper() == 2.5);
  CHECK_THROWS_AS(parse_inline_set(""), ParseError);
  CHECK_THROWS_AS(parse_inline_set("1:2,"), ParseError);
  CHECK_THROWS_AS(parse_inline_set("1-2"), ParseError);
  CHECK_THROWS_AS(parse_inline_set("a:b"), ParseError);
  CHECK_THROWS_AS(parse_inline_set("1:2x"), ParseError);
  CHECK_THROWS_AS(parse_inline_set("2:1"), ValidationError);
}

TEST_CASE("json set parsing") {
  const auto e = parse_json_set(R"({"intervals": [[0.5, 1], [-1, -0.5]]})");
  CHECK(e == parse_inline_set("-1:-0.5,0.5:1"));
  CHECK_THROWS_AS(parse_json_set("{"), ParseError);
  CHECK_THROWS_AS(parse_json_set(R"({"sets": []})"), ParseError);
  CHECK_THROWS_AS(parse_json_set(R"({"intervals": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_json_set(R"({"intervals": [["a", 1]]})"), ParseError);
}

TEST_CASE("set text round trips exactly") {
  SetSampler rng(8);
  for (int i = 0; i < 30; ++i) {
    const auto e = rng.unit_set(rng.integer(1, 5)).affine(rng.uniform(0.1, 10), rng.uniform(-3, 3));
    CHECK(parse_inline_set(to_inline(e)) == e);
    CHECK(parse_json_set(to_json(e)) == e);
  }
}

TEST_CASE("number formatting") {
  CHECK(format_roundtrip(0.1) == "0.1");
  CHECK(format_roundtrip(0.4330127018922193) == "0.4330127018922193");
  CHECK(format_17g(0.1) == "0.10000000000000001");
  SetSampler rng(9);
  for (int i = 0; i < 100; ++i) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.integer(-20, 20));
    CHECK(std::strtod(format_roundtrip(v).c_str(), nullptr) == v);
    CHECK(std::strtod(format_17g(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("sweep grids and families") {
  const Grid g = parse_grid("-0.5:0.5:11");
  CHECK(g.count == 11);
  CHECK(g.at(0) == -0.5);
  CHECK(g.at(10) == 0.5);
  CHECK(g.at(5) == Approx(0.0));
  CHECK_THROWS_AS(parse_grid("0:1"), ParseError);
  CHECK_THROWS_AS(parse_grid("0:1:x"), ParseError);
  CHECK(parse_sweep_family("spreading_gap") == SweepFamily::spreading_gap);
  CHECK(to_string(SweepFamily::moving_two_gaps) == "moving_two_gaps");
  CHECK_THROWS_AS(parse_sweep_family("nope"), ParseError);

  SweepSpec moving;
  CHECK(moving.set_at(-0.2) == IntervalUnion::from_pairs({{-1.0, -0.2}, {0.2, 1.0}}));
  SweepSpec spreading{SweepFamily::spreading_gap, 0.1, {0.1, 0.5, 5}};
  CHECK(spreading.set_at(0.2) == IntervalUnion::from_pairs({{-1.0, 0.0}, {0.2, 1.0}}));
  SweepSpec twogaps{SweepFamily::moving_two_gaps, 0.1, {0.2, 0.8, 4}};
  const auto e3 = twogaps.set_at(0.5);
  REQUIRE(e3.size() == 3);
  CHECK(e3[1].lo == Approx(-0.45));
  CHECK(e3[1].hi == Approx(0.45));

  SweepSpec bad{SweepFamily::moving_gap, 0.4, {-0.95, 0.7, 5}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  SweepSpec single{SweepFamily::moving_gap, 0.4, {0.0, 0.1, 1}};
  CHECK_THROWS_AS(single.validate(), DomainError);
}

TEST_CASE("sweep table and csv") {
  SweepSpec spec{SweepFamily::moving_gap, 0.4, {-0.8, 0.2, 6}};
  const SweepTable t = run_sweep(spec);
  CHECK(t.columns[0] == "parameter");
  CHECK(t.columns[1] == "exact");
  CHECK(t.columns.size() == t.kinds.size());
  REQUIRE(t.rows.size() == 6);
  for (const auto& row : t.rows) {
    CHECK(row.size() == t.columns.size());
    CHECK(row[1] == Approx(capacity(spec.set_at(row[0])).value).epsilon(1e-15));
    for (std::size_t c = 2; c < row.size(); ++c) {
      if (t.kinds[c] == "lower") CHECK(row[c] <= row[1] + 1e-9);
      else CHECK(row[c] >= row[1] - 1e-9);
    }
  }
  CHECK_THROWS(t.column("missing"));

  std::ostringstream a, b;
  write_csv(a, t);
  write_csv(b, run_sweep(spec));
  CHECK(a.str() == b.str());
  const std::string csv = a.str();
  CHECK(csv.rfind("parameter,exact,", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("verify is deterministic") {
  const VerifyReport a = run_verify(kDefaultVerifySeed, 20);
  const VerifyReport b = run_verify(kDefaultVerifySeed, 20);
  CHECK(a.ok());
  CHECK(a.text() == b.text());
  REQUIRE(a.suites.size() == 4);
  for (const auto& s : a.suites) CHECK(s.total == 20);
  CHECK(a.text().find("result: PASS") != std::string::npos);
  CHECK(run_verify(12345, 20).ok());
  CHECK_THROWS_AS(run_verify(1, -1), DomainError);
}
