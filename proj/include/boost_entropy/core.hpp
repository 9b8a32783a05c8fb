#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace boost_entropy {

/// Raised when an input lies outside the domain of an operation
/// (superluminal boost, Bloch length beyond 1, non-positive width, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a density matrix violates hermiticity, unit trace or positivity.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an adaptive integration exhausts its evaluation budget.
/// Carries the best estimate reached so far and its error bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// Lengths of Bloch vectors or overlaps in (1, 1 + kModulusTolerance] are
// clamped to 1; anything larger is rejected.
inline constexpr double kModulusTolerance = 1e-9;
inline constexpr double kStateTolerance = 1e-12;

/// Kinematic triple (beta, gamma, alpha) of a boost along x.
/// Only obtainable through boost_from_beta, so the three are always consistent.
class BoostParams {
 public:
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  double alpha() const noexcept { return alpha_; }
  /// gamma - 1 without cancellation at small beta.
  double gamma_minus_one() const noexcept { return gamma_minus_one_; }

  friend BoostParams boost_from_beta(double beta);

 private:
  BoostParams(double beta, double gamma, double gamma_minus_one, double alpha)
      : beta_(beta),
        gamma_(gamma),
        gamma_minus_one_(gamma_minus_one),
        alpha_(alpha) {}

  double beta_;
  double gamma_;
  double gamma_minus_one_;
  double alpha_;
};

/// Throws DomainError for |beta| >= 1 or non-finite beta.
BoostParams boost_from_beta(double beta);

/// Boost with beta >= 0 and the given Lorentz factor. Throws DomainError for
/// gamma < 1.
BoostParams boost_from_gamma(double gamma);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm2() const noexcept { return x * x + y * y + z * z; }
  double norm() const noexcept;
};

/// Real Bloch vector with |n| <= 1.
class BlochVector {
 public:
  /// Throws DomainError if |n| > 1 + kModulusTolerance; rescales onto the unit
  /// sphere if |n| lies within the tolerance band above 1.
  BlochVector(double nx, double ny, double nz);

  double nx() const noexcept { return n_[0]; }
  double ny() const noexcept { return n_[1]; }
  double nz() const noexcept { return n_[2]; }
  double length() const noexcept { return length_; }

 private:
  std::array<double, 3> n_;
  double length_;
};

/// Hermitian, unit-trace, positive semidefinite 2x2 matrix.
class QubitDensityMatrix {
 public:
  using Complex = std::complex<double>;

  /// Entries in row-major order. Throws InvalidStateError on violation of
  /// any invariant beyond kStateTolerance.
  QubitDensityMatrix(Complex r00, Complex r01, Complex r10, Complex r11);

  Complex operator()(int row, int col) const;
  double trace() const noexcept;

  /// Eigenvalues in descending order, from the trace and determinant.
  std::array<double, 2> eigenvalues() const noexcept;

 private:
  std::array<Complex, 4> m_;
};

/// Binary von Neumann entropy (nats) of a qubit whose spectrum is (1 +- r)/2.
double entropy_from_modulus(double r);

/// Same entropy parameterised by the deficit d = 1 - r. Keeps full relative
/// precision when the state is nearly pure (d close to 0).
double entropy_from_deficit(double deficit);

double entropy_from_bloch(const BlochVector& n);

double entropy_from_density_matrix(const QubitDensityMatrix& rho);

inline double nats_to_bits(double nats) { return nats / 0.69314718055994530942; }

}  // namespace boost_entropy
