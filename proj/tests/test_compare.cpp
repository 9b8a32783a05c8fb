#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "boost_entropy/compare.hpp"

using namespace boost_entropy;
using namespace boost_entropy::compare;

namespace {

galilean::BoxModel box(double eps, double L, double c) {
  galilean::BoxModel m;
  m.E0 = 0.0;
  m.E1 = eps;
  m.L = L;
  m.c = c;
  return m;
}

}  // namespace

TEST_CASE("degenerate levels cannot be matched") {
  CHECK_THROWS_AS(match_box_to_packet(box(0.0, 1.0, 1.0)), DegenerateMatchError);
  CHECK_THROWS_AS(entropy_comparison(box(0.0, 1.0, 1.0), {0.01}), DomainError);
}

TEST_CASE("matched width") {
  CHECK(match_box_to_packet(box(1.0, 1.0, 1.0)) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK(match_box_to_packet(box(1.0, 1.0, 1.0)) ==
        doctest::Approx(0.816496580927726).epsilon(1e-14));
  CHECK(match_box_to_packet(box(2.0, 3.0, 10.0)) ==
        doctest::Approx(0.6 * std::sqrt(2.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("identification round trip") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const auto m = box(u(rng), u(rng), u(rng));
    const double w = match_box_to_packet(m);
    const double eps = m.epsilon();
    const double lhs = eps * eps * m.L * m.L / (24 * m.c * m.c);
    CHECK(std::abs(w * w / 16 - lhs) <= 1e-14 * lhs);
  }
}

TEST_CASE("Compton wavelength form of the identification") {
  CHECK(compton_wavelength(1.0, 1.0) == doctest::Approx(2 * std::numbers::pi));
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    auto m = box(u(rng), u(rng), u(rng));
    m.m = u(rng);
    const double lambda = compton_wavelength(m.m, m.c);
    const double w = m.m * m.c * match_box_to_packet(m);
    const double eps = m.epsilon();
    const double lhs = (eps / m.c) * (eps / m.c) * m.L * m.L / 24;
    const double rhs = w * w * lambda * lambda / (64 * std::numbers::pi * std::numbers::pi);
    CHECK(rhs == doctest::Approx(lhs).epsilon(1e-13));
  }
}

TEST_CASE("comparison at beta = 0") {
  const auto match = entropy_comparison(box(1.0, 1.0, 1.0), {0.0});
  REQUIRE(match.rows.size() == 1);
  CHECK(match.rows[0].entropy_galilean == 0.0);
  CHECK(match.rows[0].entropy_relativistic == 0.0);
  CHECK(match.rows[0].ratio == 1.0);
}

TEST_CASE("comparison rejects |beta| > 0.1") {
  CHECK_THROWS_AS(entropy_comparison(box(1.0, 1.0, 1.0), {0.05, 0.2}), DomainError);
  CHECK_NOTHROW(entropy_comparison(box(1.0, 1.0, 1.0), {-0.1}));
}

TEST_CASE("unit box at beta = 0.01") {
  const auto match = entropy_comparison(box(1.0, 1.0, 1.0), {0.01});
  const auto& row = match.rows.front();
  CHECK(match.wtilde_equiv == doctest::Approx(std::sqrt(2.0 / 3.0)));
  // (1/24) beta^2, up to the x^4 term of sinc
  CHECK(row.one_minus_abs_f == doctest::Approx(1e-4 / 24).epsilon(1e-5));
  const double nz = relativistic::nz_prime_quadrature(
      relativistic::GaussianPacket(match.wtilde_equiv), boost_from_beta(0.01));
  CHECK(row.one_minus_nz == doctest::Approx(1.0 - nz).epsilon(1e-6));
  CHECK(row.ratio == doctest::Approx(row.entropy_relativistic / row.entropy_galilean));
  // At eps L / c = 1 the packet is wide and the w^4 terms are not small:
  // the two deficits differ by far more than 5%.
  CHECK(row.one_minus_nz / row.one_minus_abs_f < 0.7);
}

TEST_CASE("leading-order agreement improves as w^2") {
  // beta small enough that its own O(beta^2) corrections stay below w^2
  auto gap = [](double scale) {
    const auto match = entropy_comparison(box(scale, 1.0, 1.0), {0.001});
    const auto& row = match.rows.front();
    return std::abs(row.one_minus_nz / row.one_minus_abs_f - 1.0);
  };
  const double g1 = gap(0.1);
  const double g2 = gap(0.01);
  CHECK(g1 < 0.05);
  CHECK(g1 / g2 == doctest::Approx(100.0).epsilon(0.2));
}

TEST_CASE("box deficit against the small-beta series, deviation O(w^2)") {
  const auto m = box(0.1, 1.0, 1.0);
  const double w = match_box_to_packet(m);
  for (double beta : {1e-3, 1e-4}) {
    const auto row = entropy_comparison(m, {beta}).rows.front();
    const double series = relativistic::nz_prime_small_beta_deficit(
        relativistic::GaussianPacket(w), beta);
    CHECK(std::abs(row.one_minus_abs_f / series - 1.0) <= 1.5 * w * w);
  }
}

TEST_CASE("five-point sweep is monotone in both columns") {
  const auto m = box(1.0, 1.0, 10.0);
  const auto match = entropy_comparison(m, {0.01, 0.02, 0.03, 0.04, 0.05});
  for (std::size_t i = 1; i < match.rows.size(); ++i) {
    CHECK(match.rows[i].entropy_galilean > match.rows[i - 1].entropy_galilean);
    CHECK(match.rows[i].entropy_relativistic > match.rows[i - 1].entropy_relativistic);
  }
  for (const auto& row : match.rows) {
    CHECK(row.ratio == doctest::Approx(1.0).epsilon(0.01));
    CHECK(row.quad_error >= 0.0);
  }
}
