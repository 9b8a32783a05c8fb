#include "boost_entropy/relativistic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace boost_entropy::relativistic {

namespace {

void check_tolerance(double tol) {
  if (!(tol > 0.0 && tol < 1e-2)) {
    throw DomainError("tolerance must lie in (0, 1e-2)");
  }
}

double series_deficit(double wtilde, const BoostParams& boost, int order) {
  if (order != 2 && order != 4) {
    throw DomainError("series order must be 2 or 4");
  }
  const double g = boost.gamma();
  const double w2 = wtilde * wtilde;
  double deficit = boost.gamma_minus_one() / (g + 1.0) * w2 / 4.0;
  if (order == 4) {
    // 11g^3 + 9g^2 - 11g - 9 = (g - 1)(11g^2 + 20g + 9)
    const double numer =
        boost.gamma_minus_one() * (11.0 * g * g + 20.0 * g + 9.0);
    const double denom = (1.0 + g) * (1.0 + g) * (1.0 + g);
    deficit -= numer / denom * w2 * w2 / 32.0;
  }
  return deficit;
}

}  // namespace

GaussianPacket::GaussianPacket(double wtilde) : wtilde_(wtilde) {
  if (!(wtilde > 0.0) || !std::isfinite(wtilde)) {
    throw DomainError("packet width wtilde must be positive and finite");
  }
}

GaussianPacket GaussianPacket::from_physical(double w, double m, double c) {
  if (!(m > 0.0) || !(c > 0.0) || !std::isfinite(m) || !std::isfinite(c)) {
    throw DomainError("mass and speed of light must be positive");
  }
  GaussianPacket packet(w / (m * c));
  packet.w_ = w;
  packet.m_ = m;
  packet.c_ = c;
  return packet;
}

double GaussianPacket::amplitude(const Vec3& p) const noexcept {
  const double w2 = wtilde_ * wtilde_;
  return std::pow(std::numbers::pi * w2, -0.75) * std::exp(-p.norm2() / (2.0 * w2));
}

WignerFactors wigner_boost_amplitudes(const Vec3& p, const BoostParams& boost) {
  const double g = boost.gamma();
  const double b = boost.beta();
  const double ch = std::cosh(0.5 * boost.alpha());
  const double sh = std::sinh(0.5 * boost.alpha());

  WignerFactors out;
  out.p0 = std::sqrt(1.0 + p.norm2());
  out.q = {g * (p.x - b * out.p0), p.y, p.z};
  out.q0 = g * (out.p0 - b * p.x);
  out.b1 = Complex(ch * (out.p0 + 1.0) - sh * p.x, -sh * p.y);
  out.b2 = Complex(-sh * p.z, 0.0);
  out.K = std::sqrt(out.p0 / (out.q0 * (out.p0 + 1.0) * (out.q0 + 1.0)));
  return out;
}

SpinorAmplitudes gaussian_spinor(const GaussianPacket& packet) {
  return [packet](const Vec3& p) -> std::array<Complex, 2> {
    return {Complex(packet.amplitude(p), 0.0), Complex(0.0, 0.0)};
  };
}

SpinorAmplitudes boosted_gaussian_spinor(const GaussianPacket& packet,
                                         const BoostParams& boost) {
  return [packet, boost](const Vec3& q) -> std::array<Complex, 2> {
    const double g = boost.gamma();
    const double b = boost.beta();
    const double q0 = std::sqrt(1.0 + q.norm2());
    const Vec3 p{g * (q.x + b * q0), q.y, q.z};
    const WignerFactors f = wigner_boost_amplitudes(p, boost);
    const double scale = f.K * packet.amplitude(p);
    return {scale * f.b1, scale * f.b2};
  };
}

double g_of_r(const Vec3& r, const BoostParams& boost) {
  const double g = boost.gamma();
  const double b = boost.beta();
  const double s = std::sqrt(1.0 + r.norm2());
  const double numer = (g + 1.0 - g * b * r.x) * (1.0 + s) +
                       g * (r.x * r.x + r.y * r.y) + r.z * r.z;
  const double denom = (1.0 + s) * (1.0 + g * (s - b * r.x));
  return numer / denom;
}

double g_minus_one(const Vec3& r, const BoostParams& boost) {
  const double s = std::sqrt(1.0 + r.norm2());
  const double denom = (1.0 + s) * (1.0 + boost.gamma() * (s - boost.beta() * r.x));
  return -boost.gamma_minus_one() * r.z * r.z / denom;
}

double radial_cutoff(const GaussianPacket& packet) noexcept {
  return std::max(12.0 * packet.wtilde(), 3.0);
}

NzQuadrature nz_prime_quadrature_detailed(const GaussianPacket& packet,
                                          const BoostParams& boost, double tol,
                                          std::size_t budget,
                                          const DeviationKernel& kernel) {
  check_tolerance(tol);
  quad::SphericalDomain domain{
      radial_cutoff(packet),
      [&kernel, &boost](const quad::SphericalPoint& p) {
        return kernel(p.cartesian(), boost);
      },
      packet.wtilde()};
  // The deviation integral is small; hold it to tol relative, with an
  // absolute floor far below the resolution of n^z' itself.
  const quad::Tolerance rule{tol, tol * 1e-12};
  const quad::QuadResult r = quad::integrate_spherical(domain, rule, budget);
  if (!r.converged) {
    std::ostringstream os;
    os.precision(6);
    os << "n^z' quadrature did not converge within " << r.evaluations
       << " evaluations (error estimate " << r.error_estimate << ")";
    throw ConvergenceError(os.str(), 1.0 + r.value, r.error_estimate);
  }
  NzQuadrature out;
  out.deficit = -r.value;
  out.value = 1.0 + r.value;
  out.error_estimate = r.error_estimate;
  out.evaluations = r.evaluations;
  return out;
}

double nz_prime_quadrature(const GaussianPacket& packet,
                           const BoostParams& boost, double tol) {
  return nz_prime_quadrature_detailed(packet, boost, tol).value;
}

double nz_prime_series(const GaussianPacket& packet, const BoostParams& boost,
                       int order) {
  return 1.0 - series_deficit(packet.wtilde(), boost, order);
}

double nz_prime_series_deficit(const GaussianPacket& packet,
                               const BoostParams& boost, int order) {
  return series_deficit(packet.wtilde(), boost, order);
}

double nz_prime_small_beta_deficit(const GaussianPacket& packet, double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw DomainError("small-beta expansion requires |beta| < 1");
  }
  const double w2 = packet.wtilde() * packet.wtilde();
  return (w2 / 16.0 - 5.0 * w2 * w2 / 64.0) * beta * beta;
}

double nz_prime_small_beta(const GaussianPacket& packet, double beta) {
  return 1.0 - nz_prime_small_beta_deficit(packet, beta);
}

BlochMoments spinor_moments(const SpinorAmplitudes& psi, double support_radius,
                            double tol, std::size_t budget) {
  check_tolerance(tol);
  quad::VectorSphericalDomain<4> domain{
      support_radius,
      [&psi](const quad::SphericalPoint& p) {
        const auto a = psi(p.cartesian());
        const double n1 = std::norm(a[0]);
        const double n2 = std::norm(a[1]);
        const Complex cross = a[0] * std::conj(a[1]);
        // n^x - i n^y = 2 a1 a2*
        return std::array<double, 4>{n1 + n2, n1 - n2, 2.0 * cross.real(),
                                     -2.0 * cross.imag()};
      },
      0.0};
  const auto r = quad::integrate_spherical_components<4>(
      domain, quad::Tolerance{tol, tol}, budget);
  if (!r.converged) {
    throw ConvergenceError("Bloch-vector quadrature did not converge",
                           r.value[1], r.error_estimate);
  }
  return {r.value[0], r.value[2], r.value[3], r.value[1], r.error_estimate,
          r.evaluations};
}

BlochVector bloch_from_amplitudes(const SpinorAmplitudes& psi,
                                  double support_radius, double tol,
                                  std::size_t budget) {
  const BlochMoments m = spinor_moments(psi, support_radius, tol, budget);
  if (std::abs(m.norm - 1.0) > std::max(10.0 * tol, 1e-9)) {
    std::ostringstream os;
    os.precision(12);
    os << "spinor is not normalized on the support ball (norm " << m.norm << ")";
    throw DomainError(os.str());
  }
  return BlochVector(m.nx, m.ny, m.nz);
}

double boosted_support_radius(const GaussianPacket& packet,
                              const BoostParams& boost) noexcept {
  const double b = std::abs(boost.beta());
  return std::max(boost.gamma() * (b + 12.0 * packet.wtilde() * (1.0 + b)),
                  radial_cutoff(packet));
}

double peres_entropy_exact(const GaussianPacket& packet,
                           const BoostParams& boost, double tol) {
  return entropy_from_deficit(
      nz_prime_quadrature_detailed(packet, boost, tol).deficit);
}

double leading_order_t(const GaussianPacket& packet, const BoostParams& boost) {
  const double w2 = packet.wtilde() * packet.wtilde();
  return w2 / 8.0 * boost.gamma_minus_one() / (boost.gamma() + 1.0);
}

double peres_entropy_leading(const GaussianPacket& packet,
                             const BoostParams& boost) {
  const double t = leading_order_t(packet, boost);
  if (t <= 0.0) return 0.0;
  return t * (1.0 - std::log(t));
}

}  // namespace boost_entropy::relativistic
