#pragma once

// Spin entropy of a massive spin-1/2 Gaussian wavepacket seen from a frame
// boosted along x. All momenta are in units of mc.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>

#include "boost_entropy/core.hpp"
#include "boost_entropy/quad.hpp"

namespace boost_entropy::relativistic {

using Complex = std::complex<double>;

/// Gaussian momentum-space packet of dimensionless width w/(mc).
class GaussianPacket {
 public:
  /// Throws DomainError unless wtilde > 0 and finite.
  explicit GaussianPacket(double wtilde);
  /// Physical inputs: momentum width w, mass m, speed of light c.
  static GaussianPacket from_physical(double w, double m, double c);

  double wtilde() const noexcept { return wtilde_; }
  std::optional<double> width() const noexcept { return w_; }
  std::optional<double> mass() const noexcept { return m_; }
  std::optional<double> light_speed() const noexcept { return c_; }

  /// Spin-up amplitude (pi wtilde^2)^{-3/4} exp(-|p|^2 / (2 wtilde^2)).
  double amplitude(const Vec3& p) const noexcept;

 private:
  double wtilde_;
  std::optional<double> w_;
  std::optional<double> m_;
  std::optional<double> c_;
};

/// Momentum-space spinor (a1(p), a2(p)).
using SpinorAmplitudes = std::function<std::array<Complex, 2>(const Vec3&)>;

/// Wigner-rotation factors for a momentum p and an x-boost, with q = Lambda p.
struct WignerFactors {
  Complex b1;
  Complex b2;
  double K = 0.0;
  double p0 = 0.0;
  double q0 = 0.0;
  Vec3 q;
};

WignerFactors wigner_boost_amplitudes(const Vec3& p, const BoostParams& boost);

/// Transformed packet as a function of the boosted-frame momentum q:
/// psi'(q) = K a1(p) (b1, b2) with p = Lambda^{-1} q.
SpinorAmplitudes boosted_gaussian_spinor(const GaussianPacket& packet,
                                         const BoostParams& boost);

/// Plain spin-up Gaussian, psi(p) = (a1(p), 0).
SpinorAmplitudes gaussian_spinor(const GaussianPacket& packet);

/// Kernel G(r) of the transformed z-component, evaluated term by term.
double g_of_r(const Vec3& r, const BoostParams& boost);

/// G(r) - 1 in the cancellation-free form
/// (1 - gamma) z^2 / ((1 + s)(1 + gamma (s - beta x))), s = sqrt(1 + |r|^2).
double g_minus_one(const Vec3& r, const BoostParams& boost);

/// Kernel used by the quadrature route, returning G - 1. Replaceable so the
/// verification suite can inject a faulty kernel.
using DeviationKernel = std::function<double(const Vec3&, const BoostParams&)>;

struct NzQuadrature {
  double value = 1.0;      ///< n^z'
  double deficit = 0.0;    ///< 1 - n^z', computed directly
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Radial cutoff max(12 wtilde, 3) used for the packet integrals.
double radial_cutoff(const GaussianPacket& packet) noexcept;

inline constexpr double kDefaultTolerance = 1e-8;

/// n^z' as the Gaussian average of G over R^3. The integral of G - 1 is
/// computed (the weight is normalized), so the deficit keeps relative
/// precision tol. Throws DomainError unless 0 < tol < 1e-2 and
/// ConvergenceError if the budget is exhausted.
NzQuadrature nz_prime_quadrature_detailed(
    const GaussianPacket& packet, const BoostParams& boost,
    double tol = kDefaultTolerance, std::size_t budget = quad::kDefaultBudget,
    const DeviationKernel& kernel = g_minus_one);

double nz_prime_quadrature(const GaussianPacket& packet,
                           const BoostParams& boost,
                           double tol = kDefaultTolerance);

/// Partial sums of the small-width expansion of n^z', through wtilde^2 or
/// wtilde^4. Throws DomainError for other orders.
double nz_prime_series(const GaussianPacket& packet, const BoostParams& boost,
                       int order);
/// 1 - nz_prime_series, without the subtraction.
double nz_prime_series_deficit(const GaussianPacket& packet,
                               const BoostParams& boost, int order);

/// Double expansion 1 - (wtilde^2/16 - 5 wtilde^4/64) beta^2.
double nz_prime_small_beta(const GaussianPacket& packet, double beta);
double nz_prime_small_beta_deficit(const GaussianPacket& packet, double beta);

struct BlochMoments {
  double norm = 0.0;  ///< integral of |a1|^2 + |a2|^2
  double nx = 0.0;
  double ny = 0.0;
  double nz = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Raw moments of a spinor over the ball |p| <= support_radius; no
/// normalization check.
BlochMoments spinor_moments(const SpinorAmplitudes& psi, double support_radius,
                            double tol = kDefaultTolerance,
                            std::size_t budget = quad::kDefaultBudget);

/// Bloch vector of the spin state left after tracing out momentum. Throws
/// DomainError if psi is not normalized within max(tol, 1e-9) and
/// ConvergenceError on budget exhaustion.
BlochVector bloch_from_amplitudes(const SpinorAmplitudes& psi,
                                  double support_radius,
                                  double tol = kDefaultTolerance,
                                  std::size_t budget = quad::kDefaultBudget);

/// Support radius that holds the boosted packet: its centre sits at
/// |q| = gamma |beta| and it is stretched by gamma along x.
double boosted_support_radius(const GaussianPacket& packet,
                              const BoostParams& boost) noexcept;

/// Spin entropy in the boosted frame from the quadrature route.
double peres_entropy_exact(const GaussianPacket& packet,
                           const BoostParams& boost,
                           double tol = kDefaultTolerance);

/// Leading-order parameter t = (wtilde^2 / 8)(gamma - 1)/(gamma + 1).
double leading_order_t(const GaussianPacket& packet, const BoostParams& boost);

/// t (1 - log t); 0 at t = 0.
double peres_entropy_leading(const GaussianPacket& packet,
                             const BoostParams& boost);

}  // namespace boost_entropy::relativistic
