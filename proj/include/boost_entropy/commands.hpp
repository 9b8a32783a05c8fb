#pragma once

// Record builders behind the command-line subcommands. Each returns a Table
// whose column order is fixed; see README for the layouts.

#include <map>
#include <string>
#include <vector>

#include "boost_entropy/galilean.hpp"
#include "boost_entropy/report.hpp"

namespace boost_entropy::commands {

inline constexpr const char* kVersion = "0.1.0";

/// Process exit status of the CLI.
enum class ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kConvergence = 3,
  kIo = 4,
};

enum class EntropyUnit { kNats, kBits };
enum class Regime { kRelativistic, kGalilean, kCompare };
enum class OutputFormat { kCsv, kJson };
enum class GridScale { kLinear, kLog };

EntropyUnit parse_unit(const std::string& name);
Regime parse_regime(const std::string& name);
std::string regime_name(Regime regime);

/// Converts nats to the requested unit.
double in_unit(double nats, EntropyUnit unit);

report::Table cmd_relativistic(double wtilde, double beta, double tol,
                               EntropyUnit unit = EntropyUnit::kNats);

report::Table cmd_galilean(const galilean::BoxModel& model, double v,
                           EntropyUnit unit = EntropyUnit::kNats);

report::Table cmd_compare(const galilean::BoxModel& model,
                          const std::vector<double>& beta_grid, double tol,
                          EntropyUnit unit = EntropyUnit::kNats);

struct SweepSpec {
  Regime regime = Regime::kGalilean;
  std::string parameter;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  GridScale scale = GridScale::kLinear;
  /// Keys: wtilde, beta, mass, e0, e1, length, c, v.
  std::map<std::string, double> fixed;
  OutputFormat format = OutputFormat::kCsv;
  EntropyUnit unit = EntropyUnit::kNats;
  double tol = 1e-8;

  /// Throws DomainError on steps < 2, start == stop, a log grid crossing 0,
  /// or a parameter that does not belong to the regime.
  void validate() const;
  std::vector<double> grid() const;
};

/// One row per grid point, prefixed by an `index` column. A point that fails
/// (convergence or domain) keeps its row with nan values and a status message.
report::Table cmd_sweep(const SweepSpec& spec);

}  // namespace boost_entropy::commands
