#include "boost_entropy/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boost_entropy/compare.hpp"
#include "boost_entropy/relativistic.hpp"

namespace boost_entropy::commands {

namespace {

using report::Cell;
using report::Table;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kRelativisticColumns = {
    "wtilde",          "beta",       "gamma",       "nz_quadrature",
    "nz_series2",      "nz_series4", "entropy_exact", "entropy_leading",
    "quad_error",      "evaluations", "status"};

const std::vector<std::string> kGalileanColumns = {
    "mass",  "e0",     "e1",          "length",       "c",       "v",
    "x",     "f_real", "f_imag",      "abs_f",        "lambda_plus",
    "lambda_minus",    "entropy",     "status"};

const std::vector<std::string> kCompareColumns = {
    "beta",
    "wtilde_equiv",
    "one_minus_abs_f",
    "one_minus_nz",
    "entropy_galilean",
    "entropy_relativistic",
    "ratio",
    "quad_error",
    "status"};

std::string status_text(const char* kind, const std::exception& e) {
  std::string s = std::string(kind) + ": " + e.what();
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::vector<Cell> relativistic_row(double wtilde, double beta, double tol,
                                   EntropyUnit unit) {
  const relativistic::GaussianPacket packet(wtilde);
  const BoostParams boost = boost_from_beta(beta);
  const auto nz = relativistic::nz_prime_quadrature_detailed(packet, boost, tol);
  return {wtilde,
          beta,
          boost.gamma(),
          nz.value,
          relativistic::nz_prime_series(packet, boost, 2),
          relativistic::nz_prime_series(packet, boost, 4),
          in_unit(entropy_from_deficit(nz.deficit), unit),
          in_unit(relativistic::peres_entropy_leading(packet, boost), unit),
          nz.error_estimate,
          static_cast<long long>(nz.evaluations),
          std::string("ok")};
}

std::vector<Cell> galilean_row(const galilean::BoxModel& model, double v,
                               EntropyUnit unit) {
  model.validate();
  const auto f = galilean::overlap_f(model, v);
  const double deficit = galilean::one_minus_abs_f(model, v);
  return {model.m,
          model.E0,
          model.E1,
          model.L,
          model.c,
          v,
          galilean::phase_argument(model, v),
          f.real(),
          f.imag(),
          galilean::abs_f(model, v),
          1.0 - 0.5 * deficit,
          0.5 * deficit,
          in_unit(galilean::galilean_entropy(model, v), unit),
          std::string("ok")};
}

std::vector<Cell> compare_row(const compare::RegimeMatch& match,
                              const compare::RegimeRow& row, EntropyUnit unit) {
  return {row.beta,
          match.wtilde_equiv,
          row.one_minus_abs_f,
          row.one_minus_nz,
          in_unit(row.entropy_galilean, unit),
          in_unit(row.entropy_relativistic, unit),
          row.ratio,
          row.quad_error,
          std::string("ok")};
}

std::vector<Cell> failed_row(std::size_t width, std::string status) {
  std::vector<Cell> row(width - 1, Cell{kNaN});
  row.emplace_back(std::move(status));
  return row;
}

double fixed_or(const std::map<std::string, double>& fixed,
                const std::string& key, double fallback) {
  const auto it = fixed.find(key);
  return it == fixed.end() ? fallback : it->second;
}

galilean::BoxModel model_from(const std::map<std::string, double>& p) {
  galilean::BoxModel model;
  model.m = fixed_or(p, "mass", 1.0);
  model.E0 = fixed_or(p, "e0", 0.0);
  model.E1 = fixed_or(p, "e1", 1.0);
  model.L = fixed_or(p, "length", 1.0);
  model.c = fixed_or(p, "c", 10.0);
  return model;
}

const std::vector<std::string>& sweepable(Regime regime) {
  static const std::vector<std::string> rel = {"wtilde", "beta"};
  static const std::vector<std::string> gal = {"mass", "e0", "e1",
                                               "length", "c", "v"};
  static const std::vector<std::string> cmp = {"beta", "mass", "e0",
                                               "e1", "length", "c"};
  switch (regime) {
    case Regime::kRelativistic:
      return rel;
    case Regime::kGalilean:
      return gal;
    case Regime::kCompare:
      break;
  }
  return cmp;
}

}  // namespace

EntropyUnit parse_unit(const std::string& name) {
  if (name == "nats") return EntropyUnit::kNats;
  if (name == "bits") return EntropyUnit::kBits;
  throw DomainError("unit must be nats or bits");
}

Regime parse_regime(const std::string& name) {
  if (name == "relativistic") return Regime::kRelativistic;
  if (name == "galilean") return Regime::kGalilean;
  if (name == "compare") return Regime::kCompare;
  throw DomainError("regime must be relativistic, galilean or compare");
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::kRelativistic:
      return "relativistic";
    case Regime::kGalilean:
      return "galilean";
    case Regime::kCompare:
      break;
  }
  return "compare";
}

double in_unit(double nats, EntropyUnit unit) {
  return unit == EntropyUnit::kBits ? nats_to_bits(nats) : nats;
}

Table cmd_relativistic(double wtilde, double beta, double tol,
                       EntropyUnit unit) {
  return {kRelativisticColumns, {relativistic_row(wtilde, beta, tol, unit)}};
}

Table cmd_galilean(const galilean::BoxModel& model, double v,
                   EntropyUnit unit) {
  return {kGalileanColumns, {galilean_row(model, v, unit)}};
}

Table cmd_compare(const galilean::BoxModel& model,
                  const std::vector<double>& beta_grid, double tol,
                  EntropyUnit unit) {
  const auto match = compare::entropy_comparison(model, beta_grid, tol);
  Table table{kCompareColumns, {}};
  for (const auto& row : match.rows) {
    table.rows.push_back(compare_row(match, row, unit));
  }
  return table;
}

void SweepSpec::validate() const {
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (!std::isfinite(start) || !std::isfinite(stop) || start == stop) {
    throw DomainError("sweep start and stop must be finite and distinct");
  }
  if (scale == GridScale::kLog && !(start * stop > 0.0)) {
    throw DomainError("log sweep endpoints must be nonzero with equal sign");
  }
  const auto& allowed = sweepable(regime);
  if (std::find(allowed.begin(), allowed.end(), parameter) == allowed.end()) {
    throw DomainError("parameter '" + parameter + "' cannot be swept in the " +
                      regime_name(regime) + " regime");
  }
  if (regime != Regime::kRelativistic) model_from(fixed).validate();
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> points(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double s = static_cast<double>(i) / (steps - 1);
    if (scale == GridScale::kLog) {
      const double sign = start < 0 ? -1.0 : 1.0;
      points[i] = sign * std::exp((1.0 - s) * std::log(std::abs(start)) +
                                  s * std::log(std::abs(stop)));
    } else {
      points[i] = (1.0 - s) * start + s * stop;
    }
  }
  points.front() = start;
  points.back() = stop;
  return points;
}

Table cmd_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto& base = spec.regime == Regime::kRelativistic ? kRelativisticColumns
                     : spec.regime == Regime::kGalilean   ? kGalileanColumns
                                                          : kCompareColumns;
  Table table;
  table.columns.push_back("index");
  table.columns.insert(table.columns.end(), base.begin(), base.end());

  const auto points = spec.grid();
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto params = spec.fixed;
    params[spec.parameter] = points[i];
    std::vector<Cell> row;
    try {
      switch (spec.regime) {
        case Regime::kRelativistic:
          row = relativistic_row(fixed_or(params, "wtilde", 0.1),
                                 fixed_or(params, "beta", 0.1), spec.tol,
                                 spec.unit);
          break;
        case Regime::kGalilean:
          row = galilean_row(model_from(params), fixed_or(params, "v", 1.0),
                             spec.unit);
          break;
        case Regime::kCompare: {
          const auto match = compare::entropy_comparison(
              model_from(params), {fixed_or(params, "beta", 0.01)}, spec.tol);
          row = compare_row(match, match.rows.front(), spec.unit);
          break;
        }
      }
    } catch (const ConvergenceError& e) {
      row = failed_row(base.size(), status_text("convergence_error", e));
    } catch (const DomainError& e) {
      row = failed_row(base.size(), status_text("domain_error", e));
    }
    row.insert(row.begin(), Cell{static_cast<long long>(i)});
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace boost_entropy::commands
