#pragma once

// Adaptive cubature over a ball in spherical coordinates.
//
// The domain (r, theta, phi) in [0, r_max] x [0, pi] x [0, 2 pi) is covered by
// boxes. Each box is integrated with a tensor-product 15-point Gauss-Kronrod
// rule; replacing the Kronrod weights by the embedded 7-point Gauss weights
// along one axis at a time gives a per-axis error estimate. The box with the
// largest estimate is bisected along its worst axis until the total estimate
// meets the tolerance or the evaluation budget runs out.
//
// The Jacobian r^2 sin(theta) is applied internally. When a Gaussian width w
// is given, the integrand is additionally weighted by the normalized density
// exp(-r^2/w^2) / (w^3 pi^{3/2}) and the radial variable is rescaled to r = w u.
//
// Results are deterministic: boxes are evaluated sequentially and summed with
// compensated summation in creation order.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>

#include "boost_entropy/core.hpp"

namespace boost_entropy::quad {

struct SphericalPoint {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  Vec3 cartesian() const noexcept;
};

template <class Value>
struct BasicSphericalDomain {
  double r_max = 0.0;
  std::function<Value(const SphericalPoint&)> integrand;
  /// > 0 enables the normalized Gaussian weight; 0 integrates against d^3r.
  double gaussian_width = 0.0;
};

using SphericalDomain = BasicSphericalDomain<double>;
using ComplexSphericalDomain = BasicSphericalDomain<std::complex<double>>;
template <std::size_t N>
using VectorSphericalDomain = BasicSphericalDomain<std::array<double, N>>;

template <class Value>
struct BasicQuadResult {
  Value value{};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using QuadResult = BasicQuadResult<double>;
using ComplexQuadResult = BasicQuadResult<std::complex<double>>;
template <std::size_t N>
using VectorQuadResult = BasicQuadResult<std::array<double, N>>;

/// Acceptance rule for the total error estimate `err` of a value `v`:
///   err <= max(relative * |v|, |v| <= absolute_below ? absolute : 0).
/// For vector values |v| is the largest component modulus.
struct Tolerance {
  double relative = 1e-8;
  double absolute = 0.0;
  double absolute_below = std::numeric_limits<double>::infinity();

  /// Relative when |v| > 1e-8, absolute (same number) otherwise.
  static Tolerance standard(double tol) noexcept { return {tol, tol, 1e-8}; }

  double allowed(double magnitude) const noexcept;
};

inline constexpr std::size_t kDefaultBudget = 20'000'000;

/// Evaluations consumed by one application of the box rule (15^3).
inline constexpr std::size_t kEvaluationsPerBox = 15 * 15 * 15;

/// Integrates with Tolerance::standard(tol).
/// Throws DomainError unless 1e-13 < tol < 1e-2, budget >= 1000 and r_max > 0.
/// The initial partition is always evaluated (one box, or two when a Gaussian
/// weight sits in a radial range wider than 12 w); the budget bounds every
/// refinement after that. Exhausting it yields converged == false with the best estimate.
QuadResult integrate_spherical(const SphericalDomain& domain, double tol,
                               std::size_t budget = kDefaultBudget);
ComplexQuadResult integrate_spherical(const ComplexSphericalDomain& domain,
                                      double tol,
                                      std::size_t budget = kDefaultBudget);

/// Same engine with an explicit acceptance rule (no range check on tol).
QuadResult integrate_spherical(const SphericalDomain& domain,
                               const Tolerance& tol,
                               std::size_t budget = kDefaultBudget);

/// Vector-valued integrand; all components share the subdivision. Instantiated
/// for N = 1..4.
template <std::size_t N>
VectorQuadResult<N> integrate_spherical_components(
    const VectorSphericalDomain<N>& domain, const Tolerance& tol,
    std::size_t budget = kDefaultBudget);

}  // namespace boost_entropy::quad
