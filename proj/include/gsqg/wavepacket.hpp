#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gsqg/bump.hpp"
#include "gsqg/errors.hpp"
#include "gsqg/field.hpp"
#include "gsqg/kernels.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/symbols.hpp"

namespace gsqg {

inline bool velocity_admissible(double v, const AlphaModel& m) {
  switch (m.branch) {
    case Branch::Generic:
      return -v / (m.c() * m.alpha) > 0.0;
    case Branch::LogSQG:
      return true;
    case Branch::Zero:
      return false;
  }
  return false;
}

// dyadic velocity cell: frequencies I = -[lambda, 2 lambda], velocities J = a'(I)
struct VelocityPartition {
  AlphaModel model;
  double lambda = 1.0;
  double xi_lo = 0.0, xi_hi = 0.0;  // I endpoints, xi_lo < xi_hi < 0
  double v_lo = 0.0, v_hi = 0.0;    // J endpoints
  double v_ref = 0.0;               // group velocity at the geometric center of I

  // partition-of-unity profile in v; dyadic shells in xi_v telescope to 1
  double chi(double v) const {
    if (!velocity_admissible(v, model)) return 0.0;
    return lp_profile(xi_of_velocity(v, model), lambda, false);
  }

  double width_ratio() const { return (v_hi - v_lo) / std::pow(lambda, model.alpha - 1.0); }
};

inline VelocityPartition velocity_partition(const AlphaModel& m, double lambda) {
  if (m.branch == Branch::Zero)
    throw VelocityOutOfRange("the dispersionless branch carries no wave packets");
  if (!(lambda > 0.0)) throw Error("dyadic scale must be positive");
  DispersionSymbols ds(m);
  double va = ds.a_prime(-2.0 * lambda);
  double vb = ds.a_prime(-lambda);
  VelocityPartition p;
  p.model = m;
  p.lambda = lambda;
  p.xi_lo = -2.0 * lambda;
  p.xi_hi = -lambda;
  p.v_lo = std::min(va, vb);
  p.v_hi = std::max(va, vb);
  p.v_ref = ds.a_prime(-std::sqrt(2.0) * lambda);
  return p;
}

inline double packet_time_floor(const AlphaModel& m, double lambda) {
  return 4.0 * std::pow(lambda, -m.alpha);
}

inline bool packet_valid(const AlphaModel& m, double lambda, double t) {
  return t >= packet_time_floor(m, lambda);
}

// linear wave packet u^v = a''(xi_v)^{-1/2} chi(y) e^{i t Phi(x/t)},
// y = (x - x_origin - v t) / (t^{1/2} a''(xi_v)^{1/2}), int chi(y) dy = 1
inline Field build_packet(const Grid& g, const AlphaModel& m, double v, double t,
                          double x_origin = 0.0) {
  if (!(t > 0.0)) throw Error("wave packets need t > 0");
  DispersionSymbols ds(m);
  double xv = xi_of_velocity(v, m);
  double app = ds.a_second(xv);
  if (!(app > 0.0)) throw Error("packet curvature a''(xi_v) must be positive");
  double width = std::sqrt(t * app);
  double xc = x_origin + v * t;
  if (xc - width < -g.L || xc + width > g.L) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "packet support [%.3f, %.3f] leaves the box [%.3f, %.3f); enlarge L or reduce t",
                  xc - width, xc + width, -g.L, g.L);
    throw PacketDoesNotFit(msg);
  }
  double amp = 1.0 / std::sqrt(app);
  std::vector<cplx> out(g.n, cplx(0.0));
  for (int j = 0; j < g.n; ++j) {
    double chi = mollifier((g.x(j) - xc) / width);
    if (chi == 0.0) continue;
    double w = (g.x(j) - x_origin) / t;
    if (!velocity_admissible(w, m)) continue;
    out[j] = amp * chi * std::exp(cplx(0.0, t * packet_phase(w, m)));
  }
  return Field::from_values(g, std::move(out));
}

// projection onto the cell I_lambda: the sharp dyadic block (lambda, 2 lambda]
inline Field cell_projection(const Field& phi, double lambda) {
  return littlewood_paley(phi, 2.0 * lambda, true);
}

// asymptotic profile gamma^lambda(t,v) = <P_lambda phi, u^v>
inline cplx profile_gamma(const Field& phi, const AlphaModel& m, double lambda, double v, double t,
                          double x_origin = 0.0) {
  return inner_product(cell_projection(phi, lambda), build_packet(phi.grid(), m, v, t, x_origin));
}

struct PacketFrame {
  VelocityPartition part;
  double t = 0.0;
  bool valid = false;  // t >= 4 lambda^{-alpha}
  std::vector<double> v;
  std::vector<cplx> gamma;
};

inline PacketFrame build_frame(const Field& phi, const AlphaModel& m, double lambda, double t,
                               double x_origin = 0.0, int samples = 16) {
  PacketFrame fr;
  fr.part = velocity_partition(m, lambda);
  fr.t = t;
  fr.valid = packet_valid(m, lambda, t);
  Field block = cell_projection(phi, lambda);
  double dv = (fr.part.v_hi - fr.part.v_lo) / samples;
  for (int i = 0; i < samples; ++i) {
    double v = fr.part.v_lo + (i + 0.5) * dv;
    fr.v.push_back(v);
    fr.gamma.push_back(inner_product(block, build_packet(phi.grid(), m, v, t, x_origin)));
  }
  return fr;
}

// midpoint-rule int_J |gamma|^2 dv; compare against ||P_lambda phi||^2 for the frame constant
inline double frame_mass(const PacketFrame& fr) {
  double dv = (fr.part.v_hi - fr.part.v_lo) / fr.gamma.size();
  double acc = 0.0;
  for (const cplx& gmm : fr.gamma) acc += std::norm(gmm);
  return acc * dv;
}

struct GammaSample {
  double t = 0.0;
  cplx gamma;
};

inline std::vector<double> unwrapped_phase(const std::vector<GammaSample>& s) {
  std::vector<double> th(s.size());
  if (s.empty()) return th;
  th[0] = std::arg(s[0].gamma);
  for (size_t k = 1; k < s.size(); ++k) th[k] = th[k - 1] + std::arg(s[k].gamma / s[k - 1].gamma);
  return th;
}

namespace detail {

inline double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (size_t k = 0; k < n; ++k) mx += x[k], my += y[k];
  mx /= n, my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t k = 0; k < n; ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  return sxy / sxx;
}

}  // namespace detail

// d arg(gamma) / d ln t by least squares
inline double phase_slope(const std::vector<GammaSample>& s) {
  if (s.size() < 2) throw InsufficientSeries("phase slope needs at least 2 samples");
  std::vector<double> lt(s.size());
  for (size_t k = 0; k < s.size(); ++k) lt[k] = std::log(s[k].t);
  return detail::lsq_slope(lt, unwrapped_phase(s));
}

// d log|gamma| / d log t by least squares; zero samples are skipped
inline double modulus_slope(const std::vector<GammaSample>& s) {
  std::vector<double> lt, lg;
  for (const auto& smp : s) {
    double a = std::abs(smp.gamma);
    if (smp.t > 0.0 && a > 0.0) lt.push_back(std::log(smp.t)), lg.push_back(std::log(a));
  }
  if (lt.size() < 2) throw InsufficientSeries("modulus slope needs at least 2 usable samples");
  return detail::lsq_slope(lt, lg);
}

// max_k |gamma_dot - i q(xi_v) xi_v gamma |gamma|^2 / t| * t^{1 + delta/2} over interior samples,
// gamma_dot from the centered 4th-order stencil on the log-time grid
inline double ode_residual(const std::vector<GammaSample>& s, double v, const AlphaModel& m,
                           double delta = 0.05) {
  size_t n = s.size();
  if (n < 8) throw InsufficientSeries("ode residual needs at least 8 samples");
  double h = (std::log(s[n - 1].t) - std::log(s[0].t)) / (n - 1);
  if (!(h > 0.0)) throw Error("ode residual expects increasing times");
  for (size_t k = 0; k + 1 < n; ++k) {
    double hk = std::log(s[k + 1].t) - std::log(s[k].t);
    if (std::fabs(hk - h) > 1e-6 * h)
      throw Error("ode residual expects a uniformly log-spaced series");
  }
  double xv = xi_of_velocity(v, m);
  double q = cubic_coefficient_closed(xv, m);
  double worst = 0.0;
  for (size_t k = 2; k + 2 < n; ++k) {
    cplx dlog = (-s[k + 2].gamma + 8.0 * s[k + 1].gamma - 8.0 * s[k - 1].gamma + s[k - 2].gamma) /
                (12.0 * h);
    cplx defect = (dlog - cplx(0.0, 1.0) * q * xv * s[k].gamma * std::norm(s[k].gamma)) / s[k].t;
    worst = std::max(worst, std::abs(defect) * std::pow(s[k].t, 1.0 + 0.5 * delta));
  }
  return worst;
}

struct ScatteringProfile {
  cplx W;
  double phase_residual = 0.0;
};

// invert gamma ~ W e^{i q xi_v |W|^2 ln t}: |W| = mean |gamma|, phase by removing the log drift
inline ScatteringProfile extract_scattering_profile(const std::vector<GammaSample>& s, double v,
                                                    const AlphaModel& m) {
  size_t n = s.size();
  if (n < 8) throw InsufficientSeries("scattering extraction needs at least 8 samples");
  if (!(std::log(s[n - 1].t / s[0].t) >= 1.0 - 1e-9))
    throw InsufficientSeries("scattering extraction needs at least one e-fold in time");
  double mean = 0.0, lo = HUGE_VAL, hi = 0.0;
  for (const auto& smp : s) {
    double a = std::abs(smp.gamma);
    mean += a;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  mean /= n;
  if (mean < 1e-10) return {cplx(0.0), 0.0};
  if ((hi - lo) / mean > 0.20) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "modulus spread %.1f%% exceeds 20%%", 100.0 * (hi - lo) / mean);
    throw NotInScatteringRegime(msg);
  }
  double xv = xi_of_velocity(v, m);
  double drift = cubic_coefficient_closed(xv, m) * xv * mean * mean;
  auto th = unwrapped_phase(s);
  std::vector<double> rest(n);
  double tm = 0.0;
  for (size_t k = 0; k < n; ++k) tm += (rest[k] = th[k] - drift * std::log(s[k].t));
  tm /= n;
  double res = 0.0;
  for (double r : rest) res = std::max(res, std::fabs(r - tm));
  return {std::polar(mean, tm), res};
}

}  // namespace gsqg
