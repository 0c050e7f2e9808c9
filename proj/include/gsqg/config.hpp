#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsqg/data.hpp"
#include "gsqg/diagnostics.hpp"
#include "gsqg/errors.hpp"
#include "gsqg/field.hpp"

namespace gsqg {

enum class ExperimentKind {
  Resonance,
  Conservation,
  NullScaling,
  EnergyDrift,
  Decay,
  Scattering,
  ConvergenceStudy,
};

struct ExperimentConfig {
  double alpha = 0.5;
  int n_points = 1024;
  double half_length = 32.0 * M_PI;
  double dt = 0.01;
  double t_final = 1.0;
  double epsilon = 0.05;
  DatumSpec datum;
  ExperimentKind experiment = ExperimentKind::Conservation;
  std::uint64_t seed = 1;
  std::string output_dir = ".";
};

inline const char* experiment_name(ExperimentKind e) {
  switch (e) {
    case ExperimentKind::Resonance: return "Resonance";
    case ExperimentKind::Conservation: return "Conservation";
    case ExperimentKind::NullScaling: return "NullScaling";
    case ExperimentKind::EnergyDrift: return "EnergyDrift";
    case ExperimentKind::Decay: return "Decay";
    case ExperimentKind::Scattering: return "Scattering";
    case ExperimentKind::ConvergenceStudy: return "ConvergenceStudy";
  }
  return "?";
}

// each acceptance check is reachable from exactly one experiment
inline std::vector<int> criteria_of(ExperimentKind e) {
  switch (e) {
    case ExperimentKind::Resonance: return {1, 9};
    case ExperimentKind::Conservation: return {2};
    case ExperimentKind::NullScaling: return {3};
    case ExperimentKind::EnergyDrift: return {4, 5};
    case ExperimentKind::ConvergenceStudy: return {6};
    case ExperimentKind::Decay: return {7};
    case ExperimentKind::Scattering: return {8};
  }
  return {};
}

inline ExperimentKind experiment_from_name(const std::string& s) {
  for (ExperimentKind e :
       {ExperimentKind::Resonance, ExperimentKind::Conservation, ExperimentKind::NullScaling,
        ExperimentKind::EnergyDrift, ExperimentKind::Decay, ExperimentKind::Scattering,
        ExperimentKind::ConvergenceStudy})
    if (s == experiment_name(e)) return e;
  throw ConfigError("experiment: unknown name '" + s +
                    "' (expected Resonance, Conservation, NullScaling, EnergyDrift, Decay, "
                    "Scattering, or ConvergenceStudy)");
}

inline DatumKind datum_from_name(const std::string& s) {
  for (DatumKind k : {DatumKind::GaussianBump, DatumKind::ModulatedPacket, DatumKind::TwoMode})
    if (s == datum_name(k)) return k;
  throw ConfigError("datum: unknown name '" + s +
                    "' (expected GaussianBump, ModulatedPacket, or TwoMode)");
}

// flat key layout, unknown keys rejected so typos fail loudly
inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  ExperimentConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    try {
      if (k == "alpha") c.alpha = it->get<double>();
      else if (k == "n_points") c.n_points = it->get<int>();
      else if (k == "half_length") c.half_length = it->get<double>();
      else if (k == "dt") c.dt = it->get<double>();
      else if (k == "t_final") c.t_final = it->get<double>();
      else if (k == "epsilon") c.epsilon = it->get<double>();
      else if (k == "datum") c.datum.kind = datum_from_name(it->get<std::string>());
      else if (k == "datum_sigma") c.datum.sigma = it->get<double>();
      else if (k == "datum_x0") c.datum.x0 = it->get<double>();
      else if (k == "datum_carrier") c.datum.carrier = it->get<double>();
      else if (k == "datum_xi1") c.datum.xi1 = it->get<double>();
      else if (k == "datum_xi2") c.datum.xi2 = it->get<double>();
      else if (k == "experiment") c.experiment = experiment_from_name(it->get<std::string>());
      else if (k == "seed") c.seed = it->get<std::uint64_t>();
      else if (k == "output_dir") c.output_dir = it->get<std::string>();
      else throw ConfigError("unknown config key: " + k);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(k + ": " + e.what());
    }
  }
  return c;
}

namespace detail {
inline std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}
}  // namespace detail

inline void validate(const ExperimentConfig& c) {
  using detail::fmt;
  if (!(c.alpha >= 0.0 && c.alpha < 2.0))
    throw ConfigError(fmt("alpha must lie in [0,2), got %g", c.alpha));
  if (!(c.dt > 0.0)) throw ConfigError(fmt("dt must be positive, got %g", c.dt));
  if (!(c.t_final > 0.0)) throw ConfigError(fmt("t_final must be positive, got %g", c.t_final));
  if (!(c.epsilon > 0.0)) throw ConfigError(fmt("epsilon must be positive, got %g", c.epsilon));
  if (c.n_points <= 0 || (c.n_points & (c.n_points - 1)) != 0)
    throw ConfigError("n_points must be a positive power of two, got " +
                      std::to_string(c.n_points));
  if (!(c.half_length > 0.0))
    throw ConfigError(fmt("half_length must be positive, got %g", c.half_length));
  Grid g(c.n_points, c.half_length);
  if (!datum_fits(g, c.datum))
    throw ConfigError(fmt("datum at x0=%g with sigma=%g leaves the box; need |x0| + 6 sigma "
                          "within half_length %g",
                          c.datum.x0, c.datum.sigma, c.half_length));
  bool normal_form = c.experiment == ExperimentKind::NullScaling ||
                     c.experiment == ExperimentKind::EnergyDrift;
  if (normal_form) {
    Field phi0 = build_datum(g, c.datum, c.epsilon);
    double A = derivative(phi0).sup_abs();
    if (!(A < 0.5))
      throw ConfigError(fmt("epsilon %g drives sup|phi_x| to %.3g; normal-form experiments "
                            "need sup|phi_x| < 1/2",
                            c.epsilon, A));
  }
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  ExperimentConfig c = config_from_json(j);
  validate(c);
  return c;
}

}  // namespace gsqg
