// Command-line front end: spectrum, potential, wavefunction, validate, limit.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "relosc/cli/commands.hpp"
#include "relosc/errors.hpp"

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kUsage = 2, kNumerical = 3 };

}  // namespace

int main(int argc, char** argv) {
  using relosc::cli::Options;
  Options opts;
  std::string format = "csv";
  bool no_timestamp = false;

  CLI::App app{"Relativistic Poschl-Teller / Rosen-Morse oscillator toolkit (natural units, hbar = c = 1)"};
  app.require_subcommand(1);

  auto add_model = [&](CLI::App* sub, bool need_lambda) {
    sub->add_option("--m", opts.m, "mass m > 0")->capture_default_str();
    sub->add_option("--omega", opts.omega, "frequency omega > 0")->capture_default_str();
    auto* lam = sub->add_option("--lambda", opts.lambda, "deformation lambda (<0 PT, 0 flat, >0 RM)");
    if (need_lambda) lam->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--no-timestamp", no_timestamp, "omit the generated_at metadata field");
  };

  auto* spectrum = app.add_subcommand("spectrum", "closed-form energy levels");
  add_model(spectrum, true);
  spectrum->add_option("--levels", opts.levels, "number of levels (RM default: all bound)");

  auto* potential = app.add_subcommand("potential", "V(xhat) and the conformal factor on a grid");
  add_model(potential, true);
  potential->add_option("--points", opts.points, "grid points (default 201)");
  potential->add_option("--xhat-max", opts.xhat_max, "grid half-width (RM/flat)");
  potential->add_option("--margin", opts.margin, "PT wall margin as a fraction of the half-width");

  auto* wave = app.add_subcommand("wavefunction", "sampled bound or scattering eigenfunction");
  add_model(wave, true);
  wave->add_option("--n", opts.n, "bound level n");
  wave->add_option("--energy", opts.energy, "scattering energy (>= threshold)");
  wave->add_flag("--scattering", opts.scattering, "sample a continuum state");
  wave->add_option("--parity", opts.parity, "scattering parity channel s")->check(CLI::Range(0, 1));
  wave->add_option("--points", opts.points, "grid points (default 201)");
  wave->add_option("--xhat-max", opts.xhat_max, "grid half-width (RM/flat)");
  wave->add_option("--margin", opts.margin, "PT wall margin as a fraction of the half-width");

  auto* validate = app.add_subcommand("validate", "closed form vs finite-difference oracle");
  add_model(validate, true);
  validate->add_option("--levels", opts.levels, "levels to compare (default 6; RM: all bound)");
  validate->add_option("--tolerance", opts.tolerance, "relative tolerance")->capture_default_str();
  validate->add_option("--points", opts.points, "coarse grid size N (fine grid is 2N-1)");

  auto* limit = app.add_subcommand("limit", "epsilon -> 0 convergence to the flat oscillator");
  add_model(limit, false);
  limit->add_option("--eps-list", opts.eps_list, "strictly decreasing epsilons")->delimiter(',');
  limit->add_option("--levels", opts.levels, "levels per epsilon (default 3)");
  limit->add_option("--branch", opts.branch, "pt, rm or both")->check(CLI::IsMember({"pt", "rm", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  opts.timestamp = !no_timestamp;

  try {
    relosc::cli::OutputRecord record;
    int status = kOk;
    if (*spectrum) {
      record = relosc::cli::cmd_spectrum(opts);
    } else if (*potential) {
      record = relosc::cli::cmd_potential(opts);
    } else if (*wave) {
      record = relosc::cli::cmd_wavefunction(opts);
    } else if (*validate) {
      auto outcome = relosc::cli::cmd_validate(opts);
      record = std::move(outcome.record);
      if (!outcome.passed) status = kValidationFailed;
    } else {
      record = relosc::cli::cmd_limit(opts);
    }
    if (format == "json") {
      relosc::cli::write_json(std::cout, record);
    } else {
      relosc::cli::write_csv(std::cout, record);
    }
    return status;
  } catch (const relosc::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
