#include "boost_entropy/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace boost_entropy {

namespace {

constexpr double kTinyEigenvalue = 1e-300;

double xlogx(double lambda) {
  return lambda < kTinyEigenvalue ? 0.0 : lambda * std::log(lambda);
}

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (got " << value << ")";
  return os.str();
}

}  // namespace

BoostParams boost_from_beta(double beta) {
  if (!std::isfinite(beta) || std::abs(beta) >= 1.0) {
    throw DomainError(describe("boost requires |beta| < 1", beta));
  }
  const double one_minus_b2 = (1.0 - beta) * (1.0 + beta);
  const double gamma = 1.0 / std::sqrt(one_minus_b2);
  // gamma - 1 = beta^2 gamma^2 / (gamma + 1)
  const double gamma_minus_one = beta * beta * gamma * gamma / (gamma + 1.0);
  return BoostParams(beta, gamma, gamma_minus_one, std::atanh(beta));
}

BoostParams boost_from_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma < 1.0) {
    throw DomainError(describe("Lorentz factor must be >= 1", gamma));
  }
  // beta = sqrt((gamma - 1)(gamma + 1)) / gamma
  return boost_from_beta(std::sqrt((gamma - 1.0) * (gamma + 1.0)) / gamma);
}

double Vec3::norm() const noexcept { return std::hypot(x, y, z); }

BlochVector::BlochVector(double nx, double ny, double nz) : n_{nx, ny, nz} {
  if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(nz)) {
    throw DomainError("Bloch vector components must be finite");
  }
  length_ = std::hypot(nx, ny, nz);
  if (length_ > 1.0 + kModulusTolerance) {
    throw DomainError(describe("Bloch vector longer than 1", length_));
  }
  if (length_ > 1.0) {
    for (auto& c : n_) c /= length_;
    length_ = 1.0;
  }
}

QubitDensityMatrix::QubitDensityMatrix(Complex r00, Complex r01, Complex r10,
                                       Complex r11)
    : m_{r00, r01, r10, r11} {
  for (const auto& c : m_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidStateError("density matrix entries must be finite");
    }
  }
  if (std::abs(r00.imag()) > kStateTolerance ||
      std::abs(r11.imag()) > kStateTolerance ||
      std::abs(r01 - std::conj(r10)) > kStateTolerance) {
    throw InvalidStateError("density matrix is not Hermitian");
  }
  if (std::abs(trace() - 1.0) > kStateTolerance) {
    throw InvalidStateError(describe("density matrix trace != 1", trace()));
  }
  const auto ev = eigenvalues();
  if (ev[1] < -kStateTolerance || ev[0] > 1.0 + kStateTolerance) {
    throw InvalidStateError(
        describe("density matrix is not positive semidefinite", ev[1]));
  }
}

QubitDensityMatrix::Complex QubitDensityMatrix::operator()(int row,
                                                           int col) const {
  return m_.at(static_cast<std::size_t>(2 * row + col));
}

double QubitDensityMatrix::trace() const noexcept {
  return m_[0].real() + m_[3].real();
}

std::array<double, 2> QubitDensityMatrix::eigenvalues() const noexcept {
  const double half_trace = 0.5 * trace();
  const double half_gap = 0.5 * (m_[0].real() - m_[3].real());
  // Hermitian part of the off-diagonal entry.
  const Complex off = 0.5 * (m_[1] + std::conj(m_[2]));
  const double radius = std::hypot(half_gap, std::abs(off));
  return {half_trace + radius, half_trace - radius};
}

double entropy_from_deficit(double deficit) {
  if (!std::isfinite(deficit) || deficit > 1.0 ||
      deficit < -kModulusTolerance) {
    throw DomainError(describe("deficit 1 - r must lie in [0, 1]", deficit));
  }
  deficit = std::max(deficit, 0.0);
  const double lower = 0.5 * deficit;
  if (lower < kTinyEigenvalue) return 0.0;
  // upper = 1 - lower; log(upper) via log1p keeps precision near pure states.
  const double upper = 1.0 - lower;
  return -xlogx(lower) - upper * std::log1p(-lower);
}

double entropy_from_modulus(double r) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0 + kModulusTolerance) {
    throw DomainError(describe("modulus must lie in [0, 1]", r));
  }
  return entropy_from_deficit(1.0 - std::min(r, 1.0));
}

double entropy_from_bloch(const BlochVector& n) {
  return entropy_from_modulus(n.length());
}

double entropy_from_density_matrix(const QubitDensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    s -= xlogx(std::clamp(lambda, 0.0, 1.0));
  }
  return s;
}

}  // namespace boost_entropy
