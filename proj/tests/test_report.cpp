#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "boost_entropy/report.hpp"

using namespace boost_entropy::report;

TEST_CASE("format_number") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-2.5e-300) == "-2.5e-300");
  CHECK(format_number(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("csv layout") {
  const Table t{{"index", "x", "status"}, {{0LL, 0.5, std::string("ok")}}};
  CHECK(to_csv(t) == "index,x,status\n0,0.5,ok\n");
  CHECK(t.column("x") == 1);
  CHECK(t.number(0, "x") == 0.5);
  CHECK_THROWS_AS(t.column("y"), std::out_of_range);
}

TEST_CASE("csv round trip is byte-identical") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> mant(-10.0, 10.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  std::uniform_int_distribution<int> kind(0, 9);
  const std::vector<std::string> words = {"ok", "domain_error: beta out of range",
                                          "convergence_error: budget"};
  for (int trial = 0; trial < 50; ++trial) {
    Table t;
    const int cols = 1 + trial % 6;
    for (int c = 0; c < cols; ++c) t.columns.push_back("c" + std::to_string(c));
    for (int r = 0; r < 20; ++r) {
      std::vector<Cell> row;
      for (int c = 0; c < cols; ++c) {
        switch (kind(rng)) {
          case 0:
            row.emplace_back(static_cast<long long>(rng() % 1000));
            break;
          case 1:
            row.emplace_back(std::nan(""));
            break;
          case 2:
            row.emplace_back(words[rng() % words.size()]);
            break;
          case 3:
            row.emplace_back(std::numeric_limits<double>::denorm_min());
            break;
          default:
            row.emplace_back(mant(rng) * std::pow(10.0, expo(rng)));
        }
      }
      t.rows.push_back(std::move(row));
    }
    const std::string once = to_csv(t);
    const std::string twice = to_csv(parse_csv(once));
    CHECK(once == twice);
  }
}

TEST_CASE("parse_csv recovers typed cells") {
  const Table t = parse_csv("a,b,c\n3,2.5,nan\n-1,1e-20,ok\n");
  CHECK(std::get<long long>(t.rows[0][0]) == 3);
  CHECK(std::get<double>(t.rows[0][1]) == 2.5);
  CHECK(std::isnan(std::get<double>(t.rows[0][2])));
  CHECK(std::get<std::string>(t.rows[1][2]) == "ok");
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), std::invalid_argument);
}

TEST_CASE("json structure") {
  const Table t{{"beta", "entropy", "status"},
                {{0.1, 0.25, std::string("ok")}, {0.2, std::nan(""), std::string("domain_error: x")}}};
  const auto j = to_json(t, {{"c", 10.0}}, {{"version", "0.1.0"}, {"tolerance", 1e-8}});
  CHECK(j.at("params").at("c") == 10.0);
  CHECK(j.at("meta").at("tolerance") == 1e-8);
  REQUIRE(j.at("rows").is_array());
  REQUIRE(j.at("rows").size() == 2);
  CHECK(j.at("rows")[0].at("entropy") == 0.25);
  CHECK(j.at("rows")[0].at("status") == "ok");
  CHECK(j.at("rows")[1].at("entropy").is_null());
}

TEST_CASE("plot script") {
  const Table t{{"index", "c", "entropy", "status"}, {}};
  const std::string s = plot_script("out.csv", t, "c", "entropy", true);
  CHECK(s.find("set logscale x") != std::string::npos);
  CHECK(s.find("'out.csv' using 2:3") != std::string::npos);
  CHECK(plot_script("o.csv", t, "c", "entropy", false).find("logscale") == std::string::npos);
}
