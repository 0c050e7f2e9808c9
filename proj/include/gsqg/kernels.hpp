#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "gsqg/errors.hpp"
#include "gsqg/quadrature.hpp"
#include "gsqg/symbols.hpp"

namespace gsqg {

// exact resonances Omega(xi, -xi) = 0 must survive the rounding of xi1 + xi2,
// so both evaluation routes snap a negligible sum frequency to zero
inline double resonance_sum_frequency(double xi1, double xi2) {
  double s = xi1 + xi2;
  if (std::fabs(s) <= 1e-9 * (1.0 + std::fabs(xi1) + std::fabs(xi2))) return 0.0;
  return s;
}

// resonance function Omega(xi1, xi2) = omega(xi1) + omega(xi2) - omega(xi1+xi2),
// divided by F''(0) so it matches the kernel-side integral below
inline cplx resonance_closed(double xi1, double xi2, const AlphaModel& model) {
  DispersionSymbols disp(model);
  cplx combo = disp.omega(xi1) + disp.omega(xi2) - disp.omega(resonance_sum_frequency(xi1, xi2));
  switch (model.branch) {
    case Branch::Generic:
    case Branch::LogSQG:
      return combo / model.alpha;
    case Branch::Zero:
      return combo * (2.0 * M_PI);
  }
  return combo;
}

// same object from the oscillatory integral
//   Omega = 2i int_0^inf y^{-1-alpha} [ sin((xi1+xi2)y) - sin(xi1 y) - sin(xi2 y) ] dy
// cross-checked at two quadrature resolutions
inline cplx resonance_kernel(double xi1, double xi2, const AlphaModel& model,
                             const QuadratureSpec& qs = QuadratureSpec::for_symbols()) {
  double p = 1.0 + model.alpha;
  std::vector<TrigTerm> terms = {
      {1.0, resonance_sum_frequency(xi1, xi2), true}, {-1.0, xi1, true}, {-1.0, xi2, true}};
  double base = osc_power_integral(p, terms, 0.0, qs);
  double fine = osc_power_integral(p, terms, 0.0, qs.refined());
  double scale = 1.0 + std::fabs(fine);
  if (std::fabs(base - fine) > 1e-8 * scale)
    throw QuadratureDiverged("resonance kernel failed refinement cross-check");
  return cplx(0.0, 2.0 * fine);
}

// cubic interaction coefficient
//   q(xi) = -8 F''(0) int_0^inf y^{-2-alpha} sin^4(xi y / 2) dy
// via sin^4(u) = 3/8 - cos(2u)/2 + cos(4u)/8; real, even, negative for xi != 0
inline double cubic_coefficient_q(double xi, const AlphaModel& model,
                                  const QuadratureSpec& qs = QuadratureSpec::for_symbols()) {
  if (xi == 0.0) return 0.0;
  double p = 2.0 + model.alpha;
  std::vector<TrigTerm> terms = {{-0.5, xi, false}, {0.125, 2.0 * xi, false}};
  double base = osc_power_integral(p, terms, 0.375, qs);
  double fine = osc_power_integral(p, terms, 0.375, qs.refined());
  double scale = 1.0 + std::fabs(fine);
  if (std::fabs(base - fine) > 1e-8 * scale)
    throw QuadratureDiverged("cubic coefficient failed refinement cross-check");
  return -8.0 * model.F_second_at_zero() * fine;
}

// closed form of the same coefficient, used as an independent check and for the
// scattering phase; the pole of Gamma(-1-alpha) at alpha = 1 cancels against
// the zero of (2^{1+alpha} - 4)
inline double cubic_coefficient_closed(double xi, const AlphaModel& model) {
  double ax = std::fabs(xi);
  if (ax == 0.0) return 0.0;
  switch (model.branch) {
    case Branch::Zero:
      return -ax;
    case Branch::LogSQG:
      return -2.0 * std::log(2.0) * xi * xi;
    case Branch::Generic: {
      double a = model.alpha;
      double pref = (std::pow(2.0, 1.0 + a) - 4.0) * (-std::tgamma(-1.0 - a)) *
                    std::cos(M_PI * (1.0 + a) / 2.0);
      return model.F_second_at_zero() * pref * std::pow(ax, 1.0 + a);
    }
  }
  return 0.0;
}

}  // namespace gsqg
