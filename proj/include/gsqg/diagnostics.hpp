#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "multipliers.hpp"
#include "symbols.hpp"

namespace gsqg {

// max of the two homogeneous Sobolev norms; low blocks are governed by s0, high blocks by s
inline double hs_pair_norm(const Field& f, double s0, double s) {
  return std::max(homogeneous_hs_norm(f, s0), homogeneous_hs_norm(f, s));
}

// A = sup |phi_x|, B = l^2 sum over dyadic blocks of lambda^{a/2} sup |P_lambda phi_x|.
// The BMO component is proxied by the same dyadic value at this scale.
inline std::pair<double, double> control_norms(const Field& phi, const AlphaModel& m) {
  Field phix = derivative(phi);
  double A = phix.sup_abs();
  double B2 = 0.0;
  for (double lam : dyadic_blocks(phi.grid())) {
    double blk = std::pow(lam, 0.5 * m.alpha) * littlewood_paley(phix, lam).sup_abs();
    B2 += blk * blk;
  }
  return {A, std::sqrt(B2)};
}

// L = x + t a c(a)|D|^{a-1}, the vector field commuting with the linear flow.
// x acts as the centered sawtooth coordinate of the torus.
inline Field vector_field_L(const Field& phi, double t, const AlphaModel& m) {
  if (m.branch == Branch::LogSQG)
    throw Error("vector field L is not available on the logarithmic branch");
  const Grid& g = phi.grid();
  const auto& v = phi.values();
  std::vector<cplx> out(g.n);
  for (int j = 0; j < g.n; ++j) out[j] = g.x(j) * v[j];
  Field xf = Field::from_values(g, std::move(out));
  if (t == 0.0 || m.alpha == 0.0) return xf;
  return xf + t * m.alpha * m.c() * abs_d_power(phi, m.alpha - 1.0);
}

inline double norm_X(const Field& phi, double t, const AlphaModel& m, double s0 = 0.5,
                     double s = -1.0) {
  if (s < 0.0) s = m.alpha + 2.5;
  return hs_pair_norm(phi, s0, s) + vector_field_L(derivative(phi), t, m).norm_l2();
}

// pointwise control norm, single combined multiplier |xi|^{1-d} <xi>^{a/2+2d}
inline double norm_Y(const Field& phi, const AlphaModel& m, double delta = 0.05) {
  double p = 0.5 * m.alpha + 2.0 * delta;
  Field w = apply_multiplier(phi, [&](double xi) {
    if (xi == 0.0) return cplx(0.0);
    return cplx(std::pow(std::fabs(xi), 1.0 - delta) * std::pow(1.0 + xi * xi, 0.5 * p), 0.0);
  });
  return w.sup_abs();
}

// two-term variant used in the late sections; reported alongside the combined form
inline double norm_Y_split(const Field& phi, const AlphaModel& m, double delta = 0.05) {
  return abs_d_power(phi, 1.0 - delta).sup_abs() +
         abs_d_power(derivative(phi), 0.5 * m.alpha + delta).sup_abs();
}

// slowly varying majorant of the dyadic block norms in Hdot^{s0} cap Hdot^{s}
inline std::map<double, double> frequency_envelope(const Field& phi, double s0, double s,
                                                   double delta = 0.05) {
  auto blocks = dyadic_blocks(phi.grid());
  std::vector<double> bn(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i)
    bn[i] = hs_pair_norm(littlewood_paley(phi, blocks[i]), s0, s);
  std::map<double, double> env;
  for (size_t i = 0; i < blocks.size(); ++i) {
    double c = 0.0;
    for (size_t k = 0; k < blocks.size(); ++k) {
      double gap = std::fabs(std::log2(blocks[i] / blocks[k]));
      c = std::max(c, std::pow(2.0, -delta * gap) * bn[k]);
    }
    env[blocks[i]] = c;
  }
  return env;
}

struct DecayFit {
  double exponent;
  double residual;  // max |log value - fit| over the window
};

inline DecayFit decay_fit(const std::vector<std::pair<double, double>>& series) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [t, v] : series)
    if (t > 0.0 && v > 0.0) pts.emplace_back(std::log(t), std::log(v));
  if (pts.size() < 4) throw InsufficientSeries("decay fit needs at least 4 usable points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double icpt = (sy - slope * sx) / n;
  double res = 0.0;
  for (const auto& [x, y] : pts) res = std::max(res, std::fabs(y - (slope * x + icpt)));
  return {slope, res};
}

struct DiagnosticsRecord {
  double t = 0.0;
  double A = 0.0;
  double B = 0.0;
  double mass = 0.0;  // squared L2 norm
  std::map<double, double> hs_norms;
  double X = 0.0;
  double Y = 0.0;
  double E = 0.0;
  double E_s = 0.0;
  std::map<double, double> envelope;
};

inline DiagnosticsRecord make_record(double t, const Field& phi, const AlphaModel& m,
                                     double s0 = 0.5, double s = -1.0, double delta = 0.05) {
  if (s < 0.0) s = m.alpha + 2.5;
  DiagnosticsRecord r;
  r.t = t;
  std::tie(r.A, r.B) = control_norms(phi, m);
  double l2 = phi.norm_l2();
  r.mass = l2 * l2;
  r.hs_norms[s] = hs_norm(phi, s);
  r.X = norm_X(phi, t, m, s0, s);
  r.Y = norm_Y(phi, m, delta);
  r.envelope = frequency_envelope(phi, s0, s, delta);
  return r;
}

namespace detail {
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
inline std::string gkey(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}
}  // namespace detail

inline std::string diagnostics_csv_header(const DiagnosticsRecord& r) {
  std::string h = "t,A,B,mass";
  for (const auto& [s, _] : r.hs_norms) h += ",hs:" + detail::gkey(s);
  h += ",X,Y,E,E_s";
  for (const auto& [lam, _] : r.envelope) h += ",env:" + detail::gkey(lam);
  h += "\n";
  return h;
}

inline std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
  using detail::g17;
  std::string row = g17(r.t) + "," + g17(r.A) + "," + g17(r.B) + "," + g17(r.mass);
  for (const auto& [_, v] : r.hs_norms) row += "," + g17(v);
  row += "," + g17(r.X) + "," + g17(r.Y) + "," + g17(r.E) + "," + g17(r.E_s);
  for (const auto& [_, v] : r.envelope) row += "," + g17(v);
  row += "\n";
  return row;
}

}  // namespace gsqg
