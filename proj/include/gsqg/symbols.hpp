#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "gsqg/errors.hpp"

namespace gsqg {

// dispersion constant of the generic branch: c(alpha) = -2 sin(pi(2-alpha)/2) Gamma(1-alpha)
inline double c_of_alpha(double alpha) {
  if (std::fabs(alpha - 1.0) < 1e-3) throw UseLogBranch();
  if (!(alpha > 0.0) || !(alpha < 2.0))
    throw Error("c_of_alpha defined for alpha in (0,2), got " + std::to_string(alpha));
  return -2.0 * std::sin(M_PI * (2.0 - alpha) / 2.0) * std::tgamma(1.0 - alpha);
}

enum class Branch { Generic, LogSQG, Zero };

struct AlphaModel {
  double alpha = 0.5;
  Branch branch = Branch::Generic;

  static AlphaModel generic(double alpha) {
    if (alpha < 1e-3)
      throw Error("generic branch requires alpha >= 1e-3; use the zero branch");
    if (std::fabs(alpha - 1.0) < 1e-3) throw UseLogBranch();
    if (alpha >= 2.0) throw Error("alpha must lie in [0,2)");
    return AlphaModel{alpha, Branch::Generic};
  }

  static AlphaModel log_sqg() { return AlphaModel{1.0, Branch::LogSQG}; }
  static AlphaModel zero() { return AlphaModel{0.0, Branch::Zero}; }

  static AlphaModel select(double alpha) {
    if (alpha == 0.0) return zero();
    if (std::fabs(alpha - 1.0) < 1e-3) return log_sqg();
    return generic(alpha);
  }

  double c() const {
    switch (branch) {
      case Branch::Generic:
        return c_of_alpha(alpha);
      case Branch::Zero:
        return -0.5;
      case Branch::LogSQG:
        throw UseLogBranch();
    }
    return 0.0;
  }

  // kernel profile F(s): F(0) = F'(0) = 0
  double F(double s) const {
    if (branch == Branch::Zero) return std::log1p(s * s) / (2.0 * M_PI);
    return -std::expm1(-0.5 * alpha * std::log1p(s * s));
  }

  double F_second_at_zero() const {
    if (branch == Branch::Zero) return 1.0 / M_PI;
    return alpha;
  }

  std::string name() const {
    switch (branch) {
      case Branch::Generic:
        return "generic(alpha=" + std::to_string(alpha) + ")";
      case Branch::LogSQG:
        return "log-sqg";
      case Branch::Zero:
        return "zero";
    }
    return "?";
  }
};

// phase conventions: solutions of the linear flow look like exp(i(xi x - a(xi) t)),
// so the evolution multiplier is exp(-i a(xi) t) and the group velocity is a'(xi)
struct DispersionSymbols {
  AlphaModel model;

  explicit DispersionSymbols(const AlphaModel& m) : model(m) {}

  double a(double xi) const {
    if (xi == 0.0) return 0.0;
    switch (model.branch) {
      case Branch::Generic:
        return -model.c() * xi * std::pow(std::fabs(xi), model.alpha - 1.0);
      case Branch::LogSQG:
        return -2.0 * xi * std::log(std::fabs(xi));
      case Branch::Zero:
        return 0.5 * (xi > 0.0 ? 1.0 : -1.0);
    }
    return 0.0;
  }

  double a_prime(double xi) const {
    switch (model.branch) {
      case Branch::Generic:
        if (xi == 0.0 && model.alpha < 1.0)
          throw VelocityOutOfRange("group velocity diverges at xi = 0");
        return -model.c() * model.alpha * std::pow(std::fabs(xi), model.alpha - 1.0);
      case Branch::LogSQG:
        if (xi == 0.0) throw VelocityOutOfRange("group velocity diverges at xi = 0");
        return -2.0 * std::log(std::fabs(xi)) - 2.0;
      case Branch::Zero:
        return 0.0;
    }
    return 0.0;
  }

  double a_second(double xi) const {
    switch (model.branch) {
      case Branch::Generic:
        return -model.c() * model.alpha * (model.alpha - 1.0) *
               std::pow(std::fabs(xi), model.alpha - 2.0) * (xi > 0.0 ? 1.0 : -1.0);
      case Branch::LogSQG:
        return -2.0 / xi;
      case Branch::Zero:
        return 0.0;
    }
    return 0.0;
  }

  std::complex<double> linear_symbol(double xi) const { return {0.0, -a(xi)}; }

  std::complex<double> omega(double xi) const {
    // omega(xi) = c(alpha) i xi |xi|^(alpha-1) = -i a(xi)
    return linear_symbol(xi);
  }
};

// invert v = a'(xi) on the admissible half-line; the result is always negative
inline double xi_of_velocity(double v, const AlphaModel& model) {
  switch (model.branch) {
    case Branch::Generic: {
      double ca = model.c() * model.alpha;
      double w = -v / ca;
      if (!(w > 0.0)) {
        throw VelocityOutOfRange("admissible velocities satisfy sgn(v) = " +
                                 std::string(model.c() < 0.0 ? "+1" : "-1") + " for " +
                                 model.name());
      }
      return -std::pow(w, 1.0 / (model.alpha - 1.0));
    }
    case Branch::LogSQG:
      return -std::exp(-(v + 2.0) / 2.0);
    case Branch::Zero:
      throw VelocityOutOfRange("the dispersionless branch carries no wave packets");
  }
  return 0.0;
}

// packet phase Phi(v) = v xi_v - a(xi_v)
inline double packet_phase(double v, const AlphaModel& model) {
  DispersionSymbols ds(model);
  double xv = xi_of_velocity(v, model);
  return v * xv - ds.a(xv);
}

}  // namespace gsqg
