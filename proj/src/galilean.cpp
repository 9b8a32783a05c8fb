#include "boost_entropy/galilean.hpp"

#include <cmath>
#include <numbers>

namespace boost_entropy::galilean {

namespace {

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

void check_velocity(double v) {
  if (!std::isfinite(v)) throw DomainError("boost velocity must be finite");
}

}  // namespace

void BoxModel::validate() const {
  if (!positive_finite(m)) throw DomainError("bare mass must be positive");
  if (!positive_finite(L)) throw DomainError("box length must be positive");
  if (!positive_finite(c)) throw DomainError("speed of light must be positive");
  if (!std::isfinite(E0) || !std::isfinite(E1) || E1 < E0) {
    throw DomainError("energy levels must satisfy E1 >= E0");
  }
}

double BoxModel::momentum() const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(n) / L;
}

double BoxModel::effective_mass(int level) const {
  if (level != 0 && level != 1) throw DomainError("energy level must be 0 or 1");
  return m + (level == 0 ? E0 : E1) / (c * c);
}

BoostedBoxState prepared_state(const BoxModel& model) {
  model.validate();
  const Complex amp(std::numbers::sqrt2 / 2.0, 0.0);
  const double p = model.momentum();
  return {{Branch{model.E0, model.effective_mass(0), p, amp},
           Branch{model.E1, model.effective_mass(1), p, amp}}};
}

BoostedBoxState apply_boost(const BoostedBoxState& state, double v) {
  check_velocity(v);
  BoostedBoxState out = state;
  for (auto& branch : out.branches) branch.momentum += branch.mass * v;
  return out;
}

BoostedBoxState boosted_state(const BoxModel& model, double v) {
  return apply_boost(prepared_state(model), v);
}

double phase_argument(const BoxModel& model, double v) {
  model.validate();
  check_velocity(v);
  return v * model.L * model.epsilon() / (2.0 * model.c * model.c);
}

double sinc(double x) noexcept {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

Complex overlap_f(const BoxModel& model, double v) {
  const double x = phase_argument(model, v);
  return std::polar(1.0, x) * sinc(x);
}

double abs_f(const BoxModel& model, double v) {
  return std::abs(sinc(phase_argument(model, v)));
}

double one_minus_abs_f(const BoxModel& model, double v) {
  const double x = phase_argument(model, v);
  if (std::abs(x) < 0.1) {
    // 1 - sin(x)/x = x^2/3! - x^4/5! + x^6/7! - x^8/9!
    const double x2 = x * x;
    return x2 * (1.0 / 6.0 -
                 x2 * (1.0 / 120.0 - x2 * (1.0 / 5040.0 - x2 / 362880.0)));
  }
  return 1.0 - std::abs(sinc(x));
}

double abs_f_small_beta(const BoxModel& model, double beta) {
  model.validate();
  const double el = model.epsilon() * model.L / model.c;
  return 1.0 - el * el / 24.0 * beta * beta;
}

QubitDensityMatrix reduced_density_matrix(const BoxModel& model, double v) {
  const Complex f = overlap_f(model, v);
  return QubitDensityMatrix(0.5, 0.5 * f, 0.5 * std::conj(f), 0.5);
}

double galilean_entropy(const BoxModel& model, double v) {
  return entropy_from_deficit(one_minus_abs_f(model, v));
}

std::pair<double, double> mass_operator_eigenvalues(const BoxModel& model) {
  model.validate();
  return {model.effective_mass(0), model.effective_mass(1)};
}

}  // namespace boost_entropy::galilean
