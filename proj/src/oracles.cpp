#include "boost_entropy/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boost_entropy::oracles {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

std::complex<double> position_space_overlap(const galilean::BoxModel& model,
                                            double v) {
  const double k =
      (model.effective_mass(1) - model.effective_mass(0)) * v;
  static const auto rule = gauss_legendre(20);
  // One panel per half oscillation, at least 8.
  const int panels =
      8 + static_cast<int>(std::ceil(std::abs(k) * model.L / std::numbers::pi));
  const double h = model.L / panels;
  double re = 0.0;
  double im = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < rule.first.size(); ++i) {
      const double x = mid + 0.5 * h * rule.first[i];
      const double w = 0.5 * h * rule.second[i];
      re += w * std::cos(k * x);
      im += w * std::sin(k * x);
    }
  }
  return {re / model.L, im / model.L};
}

std::pair<double, double> hermitian_eigenvalues(double a, std::complex<double> b,
                                                double d) {
  // lambda^2 - (a + d) lambda + (a d - |b|^2) = 0
  const double tr = a + d;
  const double det = a * d - std::norm(b);
  const double disc = std::sqrt(std::max(0.0, 0.25 * (a - d) * (a - d) + std::norm(b)));
  const double big = 0.5 * tr + (tr >= 0 ? disc : -disc);
  const double small = big != 0.0 ? det / big : 0.5 * tr - disc;
  return big >= small ? std::pair{big, small} : std::pair{small, big};
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs two or more matched points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(std::abs(x[i]));
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace boost_entropy::oracles
