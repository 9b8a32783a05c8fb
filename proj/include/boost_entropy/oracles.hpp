#pragma once

// Independent reference computations used by the self-verification suite and
// the tests. None of these call into the code paths they are used to check.

#include <complex>
#include <utility>
#include <vector>

#include "boost_entropy/galilean.hpp"

namespace boost_entropy::oracles {

/// n-point Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// (1/L) * integral over [0, L] of exp(i (M1 - M0) v x) dx by composite
/// Gauss-Legendre quadrature in position space.
std::complex<double> position_space_overlap(const galilean::BoxModel& model,
                                            double v);

/// Eigenvalues of a Hermitian 2x2 matrix [[a, b], [conj b, d]] by solving the
/// characteristic quadratic with the numerically stable root pairing.
std::pair<double, double> hermitian_eigenvalues(double a, std::complex<double> b,
                                                double d);

/// Least-squares slope of log|y| against log|x|.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace boost_entropy::oracles
