#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "gsqg/experiments.hpp"

namespace {

const char* experiment_blurb(gsqg::ExperimentKind e) {
  using gsqg::ExperimentKind;
  switch (e) {
    case ExperimentKind::Resonance:
      return "kernel quadrature vs closed dispersion combination; paraproduct identity";
    case ExperimentKind::Conservation:
      return "mass drift on every dispersion branch";
    case ExperimentKind::NullScaling:
      return "amplitude order of the kernel-minus-bilinear remainder";
    case ExperimentKind::EnergyDrift:
      return "corrected-energy drift gain and budget along filtered flows";
    case ExperimentKind::Decay:
      return "pointwise-norm decay and vector-field norm growth";
    case ExperimentKind::Scattering:
      return "asymptotic profile extraction and log-phase slope";
    case ExperimentKind::ConvergenceStudy:
      return "stepper self-convergence order and exact linear propagation";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-spectral laboratory for fractional front dynamics"};
  app.require_subcommand(1);

  std::string run_path, check_path;
  CLI::App* run = app.add_subcommand("run", "run an experiment from a JSON config");
  run->add_option("config", run_path, "path to the config JSON")->required();
  CLI::App* check = app.add_subcommand("check", "validate a config without running it");
  check->add_option("config", check_path, "path to the config JSON")->required();
  CLI::App* list = app.add_subcommand("list-experiments", "list experiments and their checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      using gsqg::ExperimentKind;
      for (ExperimentKind e :
           {ExperimentKind::Resonance, ExperimentKind::Conservation, ExperimentKind::NullScaling,
            ExperimentKind::EnergyDrift, ExperimentKind::Decay, ExperimentKind::Scattering,
            ExperimentKind::ConvergenceStudy}) {
        std::string ids;
        for (int id : gsqg::criteria_of(e)) ids += (ids.empty() ? "" : ",") + std::to_string(id);
        std::printf("%-17s checks %-4s %s\n", gsqg::experiment_name(e), ids.c_str(),
                    experiment_blurb(e));
      }
      return 0;
    }
    if (check->parsed()) {
      gsqg::ExperimentConfig cfg = gsqg::load_config(check_path);
      std::printf("config OK: %s, alpha=%g, n=%d, L=%g\n", gsqg::experiment_name(cfg.experiment),
                  cfg.alpha, cfg.n_points, cfg.half_length);
      return 0;
    }
    gsqg::ExperimentConfig cfg = gsqg::load_config(run_path);
    gsqg::ExperimentReport rep = gsqg::run_experiment(cfg);
    std::string summary = gsqg::write_summary(cfg, rep);
    for (const auto& c : rep.criteria)
      std::printf("[%s] criterion %d %s: measured %.6g (tolerance %.6g) %s\n",
                  c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.measured, c.tolerance,
                  c.detail.c_str());
    std::printf("summary: %s\n", summary.c_str());
    return rep.pass() ? 0 : 1;
  } catch (const gsqg::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const gsqg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
