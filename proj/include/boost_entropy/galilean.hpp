#pragma once

// Particle in a periodic one-dimensional box carrying an internal two-level
// energy degree of freedom. A Galilean boost shifts each energy branch by its
// own inertial mass M_j = m + E_j / c^2. Units with hbar = 1.

#include <array>
#include <complex>
#include <utility>

#include "boost_entropy/core.hpp"

namespace boost_entropy::galilean {

using Complex = std::complex<double>;

struct BoxModel {
  double m = 1.0;    ///< bare mass
  double E0 = 0.0;   ///< lower internal level
  double E1 = 1.0;   ///< upper internal level
  double L = 1.0;    ///< box length
  double c = 1.0;    ///< speed of light
  long n = 0;        ///< momentum mode index

  /// Throws DomainError unless m, L, c > 0 (finite) and E1 >= E0. E1 == E0
  /// is accepted as the degenerate, never-entangled case.
  void validate() const;

  double epsilon() const noexcept { return E1 - E0; }
  double momentum() const noexcept;  ///< p_n = 2 pi n / L
  double effective_mass(int level) const;
};

/// One term (1/sqrt 2) |E_j> (x) |p_n + M_j v_total>.
struct Branch {
  double energy = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
  Complex amplitude;
};

struct BoostedBoxState {
  std::array<Branch, 2> branches;

  bool separable() const noexcept {
    return branches[0].momentum == branches[1].momentum;
  }
};

/// Prepared state (E0 + E1)/sqrt 2 (x) |p_n>.
BoostedBoxState prepared_state(const BoxModel& model);

BoostedBoxState boosted_state(const BoxModel& model, double v);

/// Applies a further boost to an existing state; branch j moves by M_j v.
BoostedBoxState apply_boost(const BoostedBoxState& state, double v);

/// x = v L eps / (2 c^2).
double phase_argument(const BoxModel& model, double v);

/// sin(x)/x, with the Taylor polynomial for |x| < 1e-4.
double sinc(double x) noexcept;

/// f(v) = exp(i x) sin(x)/x.
Complex overlap_f(const BoxModel& model, double v);
double abs_f(const BoxModel& model, double v);
/// 1 - |f| without cancellation for small x.
double one_minus_abs_f(const BoxModel& model, double v);

/// 1 - (eps^2 L^2 / (24 c^2)) beta^2.
double abs_f_small_beta(const BoxModel& model, double beta);

/// Reduced internal-state matrix in the {E0, E1} basis.
QubitDensityMatrix reduced_density_matrix(const BoxModel& model, double v);

double galilean_entropy(const BoxModel& model, double v);

/// Eigenvalues (M0, M1) of the mass operator m I + H / c^2.
std::pair<double, double> mass_operator_eigenvalues(const BoxModel& model);

}  // namespace boost_entropy::galilean
