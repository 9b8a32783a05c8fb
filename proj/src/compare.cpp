#include "boost_entropy/compare.hpp"

#include <cmath>
#include <numbers>

namespace boost_entropy::compare {

double match_box_to_packet(const galilean::BoxModel& model) {
  model.validate();
  if (model.epsilon() == 0.0) {
    throw DegenerateMatchError(
        "E1 == E0: neither regime entangles, nothing to match");
  }
  return std::sqrt(2.0 / 3.0) * model.epsilon() * model.L / model.c;
}

double compton_wavelength(double m, double c) {
  if (!(m > 0.0) || !(c > 0.0)) {
    throw DomainError("Compton wavelength needs m > 0 and c > 0");
  }
  return 2.0 * std::numbers::pi / (m * c);
}

RegimeMatch entropy_comparison(const galilean::BoxModel& model,
                               const std::vector<double>& beta_grid,
                               double tol) {
  RegimeMatch out;
  out.wtilde_equiv = match_box_to_packet(model);
  for (double beta : beta_grid) {
    if (!(std::abs(beta) <= kLeadingOrderBeta)) {
      throw DomainError("comparison grid must satisfy |beta| <= 0.1");
    }
  }
  const relativistic::GaussianPacket packet(out.wtilde_equiv);
  out.rows.reserve(beta_grid.size());
  for (double beta : beta_grid) {
    RegimeRow row;
    row.beta = beta;
    const double v = beta * model.c;
    row.one_minus_abs_f = galilean::one_minus_abs_f(model, v);
    row.entropy_galilean = galilean::galilean_entropy(model, v);
    const auto nz = relativistic::nz_prime_quadrature_detailed(
        packet, boost_from_beta(beta), tol);
    row.one_minus_nz = nz.deficit;
    row.quad_error = nz.error_estimate;
    row.entropy_relativistic = entropy_from_deficit(nz.deficit);
    if (row.entropy_galilean > 0.0) {
      row.ratio = row.entropy_relativistic / row.entropy_galilean;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace boost_entropy::compare
