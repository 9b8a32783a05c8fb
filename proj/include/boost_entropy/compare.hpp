#pragma once

// Leading-order identification between the boosted Gaussian packet and the
// boosted box model: eps^2 L^2 / (24 c^2) <-> wtilde^2 / 16.

#include <stdexcept>
#include <vector>

#include "boost_entropy/galilean.hpp"
#include "boost_entropy/relativistic.hpp"

namespace boost_entropy::compare {

class DegenerateMatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// wtilde = sqrt(2/3) eps L / c. Throws DegenerateMatchError when eps = 0.
double match_box_to_packet(const galilean::BoxModel& model);

/// lambda = 2 pi / (m c), hbar = 1.
double compton_wavelength(double m, double c);

struct RegimeRow {
  double beta = 0.0;
  double one_minus_abs_f = 0.0;  ///< box model
  double one_minus_nz = 0.0;     ///< packet, quadrature
  double entropy_galilean = 0.0;
  double entropy_relativistic = 0.0;
  /// entropy_relativistic / entropy_galilean; 1 by convention at beta = 0.
  double ratio = 1.0;
  double quad_error = 0.0;
};

struct RegimeMatch {
  double wtilde_equiv = 0.0;
  std::vector<RegimeRow> rows;
};

/// Largest |beta| accepted by entropy_comparison.
inline constexpr double kLeadingOrderBeta = 0.1;

/// Evaluates both entropies on the grid with the packet matched to the box
/// (galilean side at v = beta c). Throws DomainError for |beta| > 0.1.
RegimeMatch entropy_comparison(
    const galilean::BoxModel& model, const std::vector<double>& beta_grid,
    double tol = relativistic::kDefaultTolerance);

}  // namespace boost_entropy::compare
