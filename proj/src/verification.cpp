#include "boost_entropy/verification.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "boost_entropy/compare.hpp"
#include "boost_entropy/core.hpp"
#include "boost_entropy/galilean.hpp"
#include "boost_entropy/oracles.hpp"
#include "boost_entropy/quad.hpp"
#include "boost_entropy/relativistic.hpp"

namespace boost_entropy::verification {

namespace {

using relativistic::GaussianPacket;

class Runner {
 public:
  void check(const std::string& name, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    detail.precision(6);
    CheckResult r{name, false, {}};
    try {
      r.passed = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
      r.passed = false;
    }
    r.detail = detail.str();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

double max_abs_error(double a, double b) { return std::abs(a - b); }

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Runner run;
  const double tol = options.tol;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  relativistic::DeviationKernel kernel = relativistic::g_minus_one;
  if (options.kernel_perturbation) {
    const double delta = *options.kernel_perturbation;
    kernel = [delta](const Vec3& r, const BoostParams& b) {
      return (1.0 + delta) * relativistic::g_minus_one(r, b);
    };
  }

  // core
  run.check("core/entropy-endpoints", [](std::ostream& os) {
    const double s0 = entropy_from_modulus(0.0);
    const double s1 = entropy_from_modulus(1.0);
    const double sh = entropy_from_modulus(0.5);
    os << "S(0)=" << s0 << " S(1)=" << s1 << " S(0.5)=" << sh;
    return max_abs_error(s0, std::numbers::ln2) < 1e-15 && s1 == 0.0 &&
           max_abs_error(sh, 0.5623351446188083) < 1e-14;
  });

  run.check("core/bloch-rotation-invariance", [&](std::ostream& os) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double len = unit(rng);
      const double ct = 2.0 * unit(rng) - 1.0;
      const double st = std::sqrt(1.0 - ct * ct);
      const double ph = 2.0 * std::numbers::pi * unit(rng);
      const BlochVector n(len * st * std::cos(ph), len * st * std::sin(ph),
                          len * ct);
      worst = std::max(worst, std::abs(entropy_from_bloch(n) -
                                       entropy_from_modulus(len)));
    }
    os << "max deviation " << worst;
    return worst <= 1e-12;
  });

  // quad
  run.check("quad/gaussian-normalization", [&](std::ostream& os) {
    quad::SphericalDomain d{6.0, [](const quad::SphericalPoint&) { return 1.0; },
                            0.5};
    const auto r = quad::integrate_spherical(d, tol);
    os << "value-1=" << r.value - 1.0 << " evals=" << r.evaluations;
    return r.converged && std::abs(r.value - 1.0) <= 10 * tol;
  });

  run.check("quad/odd-integrand", [&](std::ostream& os) {
    quad::SphericalDomain d{
        6.0, [](const quad::SphericalPoint& p) { return p.cartesian().z; }, 0.5};
    const auto r = quad::integrate_spherical(d, tol);
    os << "value=" << r.value;
    return r.converged && std::abs(r.value) <= 10 * tol;
  });

  run.check("quad/second-moment", [&](std::ostream& os) {
    const double w = 0.5;
    quad::SphericalDomain d{
        6.0, [](const quad::SphericalPoint& p) { return p.r * p.r; }, w};
    const auto r = quad::integrate_spherical(d, tol);
    const double exact = 1.5 * w * w;
    os << "rel err=" << (r.value - exact) / exact;
    return r.converged && std::abs(r.value - exact) <= 10 * tol * exact;
  });

  // relativistic
  run.check("relativistic/kernel-identities", [&](std::ostream& os) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Vec3 r{20 * unit(rng) - 10, 20 * unit(rng) - 10, 20 * unit(rng) - 10};
      const auto b = boost_from_beta(1.998 * unit(rng) - 0.999);
      worst = std::max(worst, std::abs(relativistic::g_of_r(r, boost_from_beta(0.0)) - 1.0));
      worst = std::max(worst, std::abs(relativistic::g_of_r(r, b) - 1.0 -
                                       relativistic::g_minus_one(r, b)));
    }
    os << "max deviation " << worst;
    return worst <= 1e-13;
  });

  run.check("relativistic/quadrature-vs-series", [&](std::ostream& os) {
    bool ok = true;
    double worst_ratio = 0.0;
    for (double w : {0.02, 0.05, 0.1}) {
      for (double gamma : {1.005, 1.25, 7.0888}) {
        const GaussianPacket packet(w);
        const auto boost = boost_from_gamma(gamma);
        const auto q = relativistic::nz_prime_quadrature_detailed(
            packet, boost, tol, quad::kDefaultBudget, kernel);
        const double diff = std::abs(
            q.deficit - relativistic::nz_prime_series_deficit(packet, boost, 4));
        const double bound = 10.0 * std::pow(w, 6);
        worst_ratio = std::max(worst_ratio, diff / bound);
        ok = ok && diff <= bound;
      }
    }
    os << "worst |quad - series4| / (10 w^6) = " << worst_ratio;
    return ok;
  });

  run.check("relativistic/small-beta-expansion", [&](std::ostream& os) {
    const GaussianPacket packet(0.1);
    const auto q = relativistic::nz_prime_quadrature_detailed(
        packet, boost_from_beta(0.01), tol, quad::kDefaultBudget, kernel);
    const double diff =
        std::abs(q.deficit - relativistic::nz_prime_small_beta_deficit(packet, 0.01));
    os << "|quad - double expansion| = " << diff;
    return diff <= 1e-9;
  });

  run.check("relativistic/leading-order-entropy", [](std::ostream& os) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double t_target = std::pow(10.0, -12.0 + 8.0 * i / 19.0);
      const double r = 1.0 - 2.0 * t_target;
      const double t = 0.5 * (1.0 - r);
      const double diff =
          std::abs(entropy_from_modulus(r) - t * (1.0 - std::log(t)));
      worst = std::max(worst, diff / (10 * t * t));
    }
    os << "worst |S - t(1-log t)| / (10 t^2) = " << worst;
    return worst <= 1.0;
  });

  run.check("relativistic/wigner-identity", [&](std::ostream& os) {
    double worst = 0.0;
    const auto id = boost_from_beta(0.0);
    for (int i = 0; i < 100; ++i) {
      const Vec3 p{6 * unit(rng) - 3, 6 * unit(rng) - 3, 6 * unit(rng) - 3};
      const auto f = relativistic::wigner_boost_amplitudes(p, id);
      worst = std::max({worst, std::abs(f.K * f.b1 - 1.0), std::abs(f.b2)});
    }
    os << "max |K b1 - 1|, |b2| = " << worst;
    return worst <= 1e-12;
  });

  run.check("relativistic/bloch-transversality", [&](std::ostream& os) {
    const GaussianPacket packet(0.1);
    const auto boost = boost_from_beta(0.6);
    const auto n = relativistic::bloch_from_amplitudes(
        relativistic::boosted_gaussian_spinor(packet, boost),
        relativistic::boosted_support_radius(packet, boost), 1e-9);
    const double nz = relativistic::nz_prime_quadrature(packet, boost, tol);
    os << "nx=" << n.nx() << " ny=" << n.ny() << " nz-nz'=" << n.nz() - nz;
    return std::abs(n.nx()) <= 1e-7 && std::abs(n.ny()) <= 1e-7 &&
           std::abs(n.nz() - nz) <= 1e-7;
  });

  // galilean
  run.check("galilean/position-space-overlap", [&](std::ostream& os) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      galilean::BoxModel m;
      m.m = 0.1 + 10 * unit(rng);
      m.E0 = 5 * unit(rng);
      m.E1 = m.E0 + 5 * unit(rng);
      m.L = 0.1 + 10 * unit(rng);
      m.c = 0.5 + 5 * unit(rng);
      const double v = 20 * unit(rng) - 10;
      worst = std::max(worst, std::abs(galilean::overlap_f(m, v) -
                                       oracles::position_space_overlap(m, v)));
    }
    os << "max |f - oracle| = " << worst;
    return worst <= 1e-10;
  });

  run.check("galilean/nonrelativistic-limit", [](std::ostream& os) {
    galilean::BoxModel m;
    double previous = INFINITY;
    bool ok = true;
    for (double c : {10.0, 100.0, 1000.0, 10000.0}) {
      m.c = c;
      const double s = galilean::galilean_entropy(m, 0.1);
      os << "S(c=" << c << ")=" << s << ' ';
      ok = ok && s < previous && s > 0.0;
      previous = s;
    }
    return ok;
  });

  run.check("galilean/density-matrix-invariants", [&](std::ostream& os) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      galilean::BoxModel m;
      m.m = 0.1 + 10 * unit(rng);
      m.E0 = 5 * unit(rng);
      m.E1 = m.E0 + 5 * unit(rng);
      m.L = 0.1 + 10 * unit(rng);
      m.c = 0.5 + 5 * unit(rng);
      const double v = 20 * unit(rng) - 10;
      const auto rho = galilean::reduced_density_matrix(m, v);
      const auto ev = rho.eigenvalues();
      worst = std::max({worst, std::abs(rho(0, 1) - std::conj(rho(1, 0))),
                        std::abs(rho.trace() - 1.0), std::max(0.0, -ev[1]),
                        std::abs(entropy_from_density_matrix(rho) -
                                 entropy_from_modulus(galilean::abs_f(m, v)))});
    }
    os << "max violation " << worst;
    return worst <= 1e-12;
  });

  run.check("galilean/boost-group-law", [&](std::ostream& os) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      galilean::BoxModel m;
      m.n = static_cast<long>(10 * unit(rng)) - 5;
      const double v1 = 4 * unit(rng) - 2;
      const double v2 = 4 * unit(rng) - 2;
      const auto twice = galilean::apply_boost(galilean::boosted_state(m, v1), v2);
      const auto once = galilean::boosted_state(m, v1 + v2);
      for (int j = 0; j < 2; ++j) {
        worst = std::max(worst, std::abs(twice.branches[j].momentum -
                                         once.branches[j].momentum));
      }
    }
    os << "max momentum mismatch " << worst;
    return worst <= 1e-13;
  });

  // compare
  run.check("compare/identification-round-trip", [](std::ostream& os) {
    galilean::BoxModel m;
    m.E1 = 0.7;
    m.L = 1.3;
    m.c = 2.1;
    const double w = compare::match_box_to_packet(m);
    const double lhs = m.epsilon() * m.epsilon() * m.L * m.L / (24 * m.c * m.c);
    os << "rel mismatch " << (w * w / 16 - lhs) / lhs;
    return std::abs(w * w / 16 - lhs) <= 1e-14 * lhs;
  });

  run.check("compare/leading-order-agreement", [&](std::ostream& os) {
    galilean::BoxModel m;
    m.c = 10.0;  // eps L / c = 0.1
    const auto match = compare::entropy_comparison(m, {0.005, 0.01, 0.02}, tol);
    double worst = 0.0;
    for (const auto& row : match.rows) {
      worst = std::max(worst, std::abs(row.one_minus_nz / row.one_minus_abs_f - 1.0));
    }
    os << "max relative gap " << worst;
    return worst <= 0.05;
  });

  return run.take();
}

}  // namespace boost_entropy::verification
