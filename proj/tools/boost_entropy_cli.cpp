// boost-entropy: spin-entropy observer dependence under Lorentz and Galilean
// boosts.
//
// Exit status: 0 success, 1 verification failure, 2 usage error,
// 3 quadrature did not converge, 4 output could not be written.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "boost_entropy/commands.hpp"
#include "boost_entropy/core.hpp"
#include "boost_entropy/verification.hpp"

namespace be = boost_entropy;
using be::commands::ExitCode;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double tol = 1e-8;
  std::string unit = "nats";
  std::string format = "csv";
  std::string out;
};

struct ModelFlags {
  double mass = 1.0;
  double e0 = 0.0;
  double e1 = 1.0;
  double length = 1.0;
  double c = 10.0;

  be::galilean::BoxModel model() const {
    be::galilean::BoxModel m;
    m.m = mass;
    m.E0 = e0;
    m.E1 = e1;
    m.L = length;
    m.c = c;
    m.validate();
    return m;
  }

  nlohmann::json json() const {
    return {{"mass", mass}, {"e0", e0}, {"e1", e1}, {"length", length}, {"c", c}};
  }
};

void add_common(CLI::App* app, Common& common, bool with_tol) {
  if (with_tol) {
    app->add_option("--tol", common.tol, "Relative quadrature tolerance")
        ->envname("BOOST_ENTROPY_TOL")
        ->capture_default_str();
  }
  app->add_option("--unit", common.unit, "Entropy unit")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
  app->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_option("--out", common.out, "Output file (default: stdout)");
}

void add_model(CLI::App* app, ModelFlags& flags) {
  app->add_option("--mass", flags.mass, "Bare mass m")->capture_default_str();
  app->add_option("--e0", flags.e0, "Lower internal energy E0")->capture_default_str();
  app->add_option("--e1", flags.e1, "Upper internal energy E1")->capture_default_str();
  app->add_option("--length", flags.length, "Box length L")->capture_default_str();
  app->add_option("--c", flags.c, "Speed of light c")->capture_default_str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing " + path);
}

void emit(const Common& common, const be::report::Table& table,
          const std::string& command, nlohmann::json params) {
  if (common.format == "json") {
    const nlohmann::json meta = {{"command", command},
                                 {"tolerance", common.tol},
                                 {"unit", common.unit},
                                 {"version", be::commands::kVersion}};
    write_text(common.out,
               be::report::to_json(table, params, meta).dump(2) + "\n");
  } else {
    write_text(common.out, be::report::to_csv(table));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observer dependence of spin entropy under Lorentz and Galilean boosts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", be::commands::kVersion);

  Common common;
  ModelFlags model_flags;

  double wtilde = 0.1;
  double beta = 0.6;
  auto* rel = app.add_subcommand("relativistic", "Boosted Gaussian spin-1/2 packet");
  rel->add_option("--wtilde", wtilde, "Packet width w/(mc)")->capture_default_str();
  rel->add_option("--beta", beta, "Boost velocity v/c")->capture_default_str();
  add_common(rel, common, true);

  double v = 1.0;
  auto* gal = app.add_subcommand("galilean", "Boosted box state with internal energy");
  add_model(gal, model_flags);
  gal->add_option("--v", v, "Boost velocity")->capture_default_str();
  add_common(gal, common, false);

  std::vector<double> beta_grid = {0.005, 0.01, 0.02};
  auto* cmp = app.add_subcommand("compare", "Box model against its matched packet");
  add_model(cmp, model_flags);
  cmp->add_option("--beta", beta_grid, "Comma-separated beta values, |beta| <= 0.1")
      ->delimiter(',')
      ->capture_default_str();
  add_common(cmp, common, true);

  be::commands::SweepSpec sweep;
  std::string regime = "galilean";
  std::string scale = "linear";
  std::string plot_path;
  std::map<std::string, double> fixed;
  auto* sw = app.add_subcommand("sweep", "Tabulate one regime over a parameter grid");
  sw->add_option("--regime", regime, "relativistic | galilean | compare")
      ->check(CLI::IsMember({"relativistic", "galilean", "compare"}))
      ->capture_default_str();
  sw->add_option("--param", sweep.parameter, "Parameter to sweep")->required();
  sw->add_option("--start", sweep.start, "First grid value")->required();
  sw->add_option("--stop", sweep.stop, "Last grid value")->required();
  sw->add_option("--steps", sweep.steps, "Number of grid points (>= 2)")->required();
  sw->add_option("--scale", scale, "Grid spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  sw->add_option("--plot", plot_path, "Write a gnuplot script for the CSV output");
  for (const char* key : {"wtilde", "beta", "mass", "e0", "e1", "length", "c", "v"}) {
    sw->add_option_function<double>(
        std::string("--") + key,
        [&fixed, key](const double& value) { fixed[key] = value; },
        std::string("Fixed value of ") + key);
  }
  add_common(sw, common, true);

  be::verification::VerifyOptions verify_options;
  double perturbation = 0.0;
  auto* ver = app.add_subcommand("verify", "Run the self-verification suite");
  ver->add_option("--tol", verify_options.tol, "Quadrature tolerance for the checks")
      ->envname("BOOST_ENTROPY_TOL")
      ->capture_default_str();
  ver->add_option("--perturb-kernel", perturbation,
                  "Test hook: scale the G - 1 kernel by (1 + value)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  }

  try {
    const auto unit = be::commands::parse_unit(common.unit);
    if (*rel) {
      emit(common, be::commands::cmd_relativistic(wtilde, beta, common.tol, unit),
           "relativistic", {{"wtilde", wtilde}, {"beta", beta}});
    } else if (*gal) {
      auto params = model_flags.json();
      params["v"] = v;
      emit(common, be::commands::cmd_galilean(model_flags.model(), v, unit),
           "galilean", params);
    } else if (*cmp) {
      auto params = model_flags.json();
      params["beta"] = beta_grid;
      emit(common,
           be::commands::cmd_compare(model_flags.model(), beta_grid, common.tol, unit),
           "compare", params);
    } else if (*sw) {
      sweep.regime = be::commands::parse_regime(regime);
      sweep.scale = scale == "log" ? be::commands::GridScale::kLog
                                   : be::commands::GridScale::kLinear;
      sweep.fixed = fixed;
      sweep.unit = unit;
      sweep.tol = common.tol;
      sweep.format = common.format == "json" ? be::commands::OutputFormat::kJson
                                             : be::commands::OutputFormat::kCsv;
      const auto table = be::commands::cmd_sweep(sweep);
      nlohmann::json params = {{"regime", regime},
                               {"param", sweep.parameter},
                               {"start", sweep.start},
                               {"stop", sweep.stop},
                               {"steps", sweep.steps},
                               {"scale", scale},
                               {"fixed", fixed}};
      emit(common, table, "sweep", params);
      if (!plot_path.empty()) {
        if (common.out.empty() || common.format != "csv") {
          throw be::DomainError("--plot needs CSV output written with --out");
        }
        const std::string y = sweep.regime == be::commands::Regime::kRelativistic
                                  ? "entropy_exact"
                              : sweep.regime == be::commands::Regime::kGalilean
                                  ? "entropy"
                                  : "ratio";
        write_text(plot_path, be::report::plot_script(common.out, table, sweep.parameter,
                                                      y, scale == "log"));
      }
    } else if (*ver) {
      if (ver->count("--perturb-kernel") > 0) {
        verify_options.kernel_perturbation = perturbation;
      }
      const auto results = be::verification::run_verification(verify_options);
      std::size_t failed = 0;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail
                  << '\n';
        if (!r.passed) ++failed;
      }
      std::cout << results.size() - failed << "/" << results.size()
                << " checks passed\n";
      return static_cast<int>(failed == 0 ? ExitCode::kOk : ExitCode::kCheckFailed);
    }
  } catch (const be::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best estimate " << e.best_estimate()
              << ")\n";
    return static_cast<int>(ExitCode::kConvergence);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kIo);
  } catch (const std::logic_error& e) {
    // DomainError, InvalidStateError and argument errors
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  }
  return static_cast<int>(ExitCode::kOk);
}
