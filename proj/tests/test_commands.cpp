#include <doctest.h>

#include <cmath>
#include <numbers>

#include "boost_entropy/commands.hpp"

using namespace boost_entropy;
using namespace boost_entropy::commands;
using report::Table;

namespace {

galilean::BoxModel unit_box(double c = 1.0) {
  galilean::BoxModel m;
  m.c = c;
  return m;
}

std::string status(const Table& t, std::size_t row) {
  return std::get<std::string>(t.rows[row][t.column("status")]);
}

}  // namespace

TEST_CASE("parsers") {
  CHECK(parse_unit("bits") == EntropyUnit::kBits);
  CHECK_THROWS_AS(parse_unit("hartleys"), DomainError);
  CHECK(parse_regime("compare") == Regime::kCompare);
  CHECK(regime_name(Regime::kGalilean) == "galilean");
  CHECK_THROWS_AS(parse_regime("quantum"), DomainError);
  CHECK(in_unit(std::numbers::ln2, EntropyUnit::kBits) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("relativistic command") {
  SUBCASE("rest frame") {
    const Table t = cmd_relativistic(0.1, 0.0, 1e-8);
    CHECK(t.number(0, "entropy_exact") == 0.0);
    CHECK(t.number(0, "nz_quadrature") == 1.0);
    CHECK(status(t, 0) == "ok");
  }
  SUBCASE("beta = 0.6: exact and leading entropy agree to next order") {
    const Table t = cmd_relativistic(0.1, 0.6, 1e-8);
    const double exact = t.number(0, "entropy_exact");
    const double leading = t.number(0, "entropy_leading");
    CHECK(t.number(0, "gamma") == doctest::Approx(1.25));
    CHECK(std::abs(exact - leading) / leading < 0.02);
    CHECK(t.number(0, "nz_quadrature") == doctest::Approx(0.9997256580739716).epsilon(1e-12));
  }
  SUBCASE("beta = 0.99 against the fourth-order series") {
    const Table t = cmd_relativistic(0.1, 0.99, 1e-8);
    CHECK(t.number(0, "gamma") == doctest::Approx(7.0888).epsilon(1e-4));
    CHECK(std::abs(t.number(0, "nz_quadrature") - t.number(0, "nz_series4")) <=
          10 * std::pow(0.1, 6));
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(cmd_relativistic(0.1, 1.2, 1e-8), DomainError);
    CHECK_THROWS_AS(cmd_relativistic(-0.1, 0.5, 1e-8), DomainError);
  }
}

TEST_CASE("galilean command") {
  CHECK(cmd_galilean(unit_box(), 0.0).number(0, "entropy") == 0.0);
  const Table pi = cmd_galilean(unit_box(), 2 * std::numbers::pi);
  CHECK(pi.number(0, "x") == doctest::Approx(std::numbers::pi));
  CHECK(pi.number(0, "entropy") == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
  const Table one = cmd_galilean(unit_box(), 2.0);
  CHECK(one.number(0, "abs_f") == doctest::Approx(0.8414709848078965).epsilon(1e-15));
  CHECK(one.number(0, "entropy") ==
        doctest::Approx(entropy_from_modulus(0.8414709848078965)).epsilon(1e-14));
  CHECK(one.number(0, "lambda_plus") + one.number(0, "lambda_minus") ==
        doctest::Approx(1.0).epsilon(1e-15));
  galilean::BoxModel bad = unit_box();
  bad.L = -1.0;
  CHECK_THROWS_AS(cmd_galilean(bad, 1.0), DomainError);
}

TEST_CASE("compare command") {
  const Table t = cmd_compare(unit_box(10.0), {0.0, 0.01}, 1e-8);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.number(0, "ratio") == 1.0);
  CHECK(t.number(1, "ratio") == doctest::Approx(1.0).epsilon(0.01));
  CHECK(t.number(1, "wtilde_equiv") == doctest::Approx(0.1 * std::sqrt(2.0 / 3.0)));
}

TEST_CASE("sweep grids and validation") {
  SweepSpec s;
  s.regime = Regime::kGalilean;
  s.parameter = "c";
  s.start = 10;
  s.stop = 1000;
  s.steps = 3;
  s.scale = GridScale::kLog;
  const auto g = s.grid();
  CHECK(g[0] == 10.0);
  CHECK(g[1] == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(g[2] == 1000.0);

  SweepSpec bad = s;
  bad.steps = 1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = s;
  bad.stop = bad.start;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = s;
  bad.start = -1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = s;
  bad.parameter = "wtilde";
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = s;
  bad.fixed["length"] = -2.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("galilean sweep over c decreases toward zero") {
  SweepSpec s;
  s.regime = Regime::kGalilean;
  s.parameter = "c";
  s.start = 10;
  s.stop = 1000;
  s.steps = 3;
  s.scale = GridScale::kLog;
  s.fixed = {{"v", 0.1}};
  const Table t = cmd_sweep(s);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.columns.front() == "index");
  CHECK(t.number(1, "entropy") < t.number(0, "entropy"));
  CHECK(t.number(2, "entropy") < t.number(1, "entropy"));
  CHECK(t.number(2, "entropy") < 1e-13);
}

TEST_CASE("relativistic sweep over beta is nondecreasing") {
  SweepSpec s;
  s.regime = Regime::kRelativistic;
  s.parameter = "beta";
  s.start = 0.0;
  s.stop = 0.9;
  s.steps = 10;
  s.fixed = {{"wtilde", 0.1}};
  const Table t = cmd_sweep(s);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.number(i, "entropy_exact") >= t.number(i - 1, "entropy_exact"));
  }
  CHECK(t.number(0, "entropy_exact") == 0.0);
}

TEST_CASE("compare sweep: ratio settles as beta decreases") {
  SweepSpec s;
  s.regime = Regime::kCompare;
  s.parameter = "beta";
  s.start = 0.05;
  s.stop = 0.001;
  s.steps = 5;
  s.scale = GridScale::kLog;
  const Table t = cmd_sweep(s);
  double previous_step = INFINITY;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.number(i, "ratio") == doctest::Approx(1.0).epsilon(0.01));
    const double step = std::abs(t.number(i, "ratio") - t.number(i - 1, "ratio"));
    CHECK(step < previous_step);
    previous_step = step;
  }
}

TEST_CASE("bits are nats / ln 2 on every row") {
  SweepSpec s;
  s.regime = Regime::kGalilean;
  s.parameter = "v";
  s.start = 0.5;
  s.stop = 40.0;
  s.steps = 7;
  const Table nats = cmd_sweep(s);
  s.unit = EntropyUnit::kBits;
  const Table bits = cmd_sweep(s);
  for (std::size_t i = 0; i < nats.rows.size(); ++i) {
    const double n = nats.number(i, "entropy");
    CHECK(std::abs(bits.number(i, "entropy") - n / std::numbers::ln2) <=
          1e-12 * n / std::numbers::ln2);
  }
  const Table rn = cmd_relativistic(0.1, 0.6, 1e-8, EntropyUnit::kNats);
  const Table rb = cmd_relativistic(0.1, 0.6, 1e-8, EntropyUnit::kBits);
  for (const char* col : {"entropy_exact", "entropy_leading"}) {
    CHECK(rb.number(0, col) == doctest::Approx(rn.number(0, col) / std::numbers::ln2).epsilon(1e-12));
  }
}

TEST_CASE("failing sweep points keep their rows") {
  SweepSpec s;
  s.regime = Regime::kRelativistic;
  s.parameter = "beta";
  s.start = 0.5;
  s.stop = 1.5;
  s.steps = 3;
  const Table t = cmd_sweep(s);
  REQUIRE(t.rows.size() == 3);
  CHECK(status(t, 0) == "ok");
  CHECK(status(t, 1).rfind("domain_error", 0) == 0);
  CHECK(status(t, 1).find(',') == std::string::npos);
  CHECK(std::isnan(t.number(2, "entropy_exact")));
  CHECK(std::get<long long>(t.rows[2][0]) == 2);
  CHECK(report::to_csv(report::parse_csv(report::to_csv(t))) == report::to_csv(t));
}
