#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "multipliers.hpp"
#include "nonlinearity.hpp"
#include "paraproduct.hpp"
#include "quadrature.hpp"
#include "symbols.hpp"

namespace gsqg {

struct FrontState {
  double t = 0.0;
  Field phi;
};

struct CoupledState {
  double t = 0.0;
  Field phi;
  Field v;
};

enum class Scheme { IFRK4 };

struct StepperConfig {
  double dt = 0.01;
  Scheme scheme = Scheme::IFRK4;
  double cfl_guard = 32.0;
  // reject any step that leaves the coercivity regime |phi_x| < 1/2
  bool enforce_coercivity = false;
};

// the stepper handles the dispersive part in closed form, so the rhs entry
// points below return only the nonlinear piece
inline Field rhs_full(const FrontState& st, const AlphaModel& m, const QuadratureSpec& qs) {
  return Q_apply(st.phi, derivative(st.phi), m, qs);
}

inline Field rhs_linearized(const FrontState& st, const Field& v, const AlphaModel& m,
                            const QuadratureSpec& qs) {
  return derivative(Q_apply(st.phi, v, m, qs));
}

inline Field rhs_paradifferential(const FrontState& st, const Field& v, const Field& f_source,
                                  const AlphaModel& m, const QuadratureSpec& qs,
                                  const ParaproductSpec& ps = {}) {
  return derivative(Q_split(st.phi, v, m, qs, ps).q_lh) + f_source;
}

namespace detail {

inline std::vector<cplx> if_phase(const Grid& g, const AlphaModel& m, double tau) {
  DispersionSymbols ds(m);
  std::vector<cplx> e(g.n);
  for (int i = 0; i < g.n; ++i) e[i] = std::exp(cplx(0.0, -ds.a(g.xi(i)) * tau));
  return e;
}

inline Field apply_phase(const Field& f, const std::vector<cplx>& e) {
  auto s = f.spectrum();
  for (size_t i = 0; i < s.size(); ++i) s[i] *= e[i];
  return Field::from_spectrum(f.grid(), std::move(s));
}

// the nonlinearity is mean free by the +-y pairing; pin the zero mode exactly
// so the mean of phi is bitwise constant along the flow
inline Field drop_mean(const Field& f) {
  auto s = f.spectrum();
  s[0] = 0.0;
  return Field::from_spectrum(f.grid(), std::move(s));
}

// classical integrating-factor RK4; exact on the linear flow, signed dt allowed
template <class Rhs>
std::vector<Field> ifrk4(const std::vector<Field>& u, double t, double dt, const Grid& g,
                         const AlphaModel& m, const Rhs& rhs) {
  auto Eh = if_phase(g, m, 0.5 * dt);
  auto Ef = if_phase(g, m, dt);
  size_t nc = u.size();
  auto N = [&](const std::vector<Field>& w, double tw) {
    std::vector<Field> out = rhs(w, tw);
    for (auto& f : out) f = drop_mean(f);
    return out;
  };
  std::vector<Field> k1 = N(u, t);
  std::vector<Field> s2, s3, s4, out;
  s2.reserve(nc); s3.reserve(nc); s4.reserve(nc); out.reserve(nc);
  for (size_t c = 0; c < nc; ++c) s2.push_back(apply_phase(u[c] + (0.5 * dt) * k1[c], Eh));
  std::vector<Field> k2 = N(s2, t + 0.5 * dt);
  for (size_t c = 0; c < nc; ++c) s3.push_back(apply_phase(u[c], Eh) + (0.5 * dt) * k2[c]);
  std::vector<Field> k3 = N(s3, t + 0.5 * dt);
  for (size_t c = 0; c < nc; ++c) s4.push_back(apply_phase(u[c], Ef) + dt * apply_phase(k3[c], Eh));
  std::vector<Field> k4 = N(s4, t + dt);
  for (size_t c = 0; c < nc; ++c) {
    Field acc = apply_phase(u[c] + (dt / 6.0) * k1[c], Ef) +
                apply_phase((dt / 3.0) * (k2[c] + k3[c]), Eh) + (dt / 6.0) * k4[c];
    out.push_back(std::move(acc));
  }
  return out;
}

inline void check_cfl(const Grid& g, const AlphaModel& m, const StepperConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw Error("stepper dt must be positive");
  DispersionSymbols ds(m);
  double amax = 0.0;
  for (int i = 0; i < g.n; ++i) amax = std::max(amax, std::fabs(ds.a(g.xi(i))));
  if (cfg.dt * amax > cfg.cfl_guard)
    throw Error("dt * max|a(xi)| = " + std::to_string(cfg.dt * amax) +
                " exceeds the cfl guard " + std::to_string(cfg.cfl_guard));
}

inline bool finite(const Field& f) {
  for (const auto& v : f.values())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

// advance by dt, halving the substep up to 5 times if the state degenerates
template <class StepOne>
void substep_guard(double t, double dt, const StepOne& attempt) {
  for (int level = 0; level <= 5; ++level) {
    int parts = 1 << level;
    if (attempt(dt / parts, parts)) return;
  }
  throw BlowupDetected(t);
}

inline void coercivity_gate(const Field& phi, const StepperConfig& cfg) {
  if (!cfg.enforce_coercivity) return;
  double slope = derivative(phi).sup_abs();
  if (!(slope < 0.5)) throw DataTooLarge(slope);
}

}  // namespace detail

inline FrontState step(const FrontState& st, const StepperConfig& cfg, const AlphaModel& m,
                       const QuadratureSpec& qs) {
  const Grid& g = st.phi.grid();
  detail::check_cfl(g, m, cfg);
  FrontState next{st.t + cfg.dt, st.phi};
  auto rhs = [&](const std::vector<Field>& w, double) {
    return std::vector<Field>{Q_apply(w[0], derivative(w[0]), m, qs)};
  };
  detail::substep_guard(st.t, cfg.dt, [&](double h, int parts) {
    Field phi = st.phi;
    double t = st.t;
    for (int p = 0; p < parts; ++p) {
      phi = detail::ifrk4(std::vector<Field>{phi}, t, h, g, m, rhs)[0];
      if (!detail::finite(phi)) return false;
      t += h;
    }
    next.phi = std::move(phi);
    return true;
  });
  detail::coercivity_gate(next.phi, cfg);
  return next;
}

inline FrontState evolve(FrontState st, double t_final, const StepperConfig& cfg,
                         const AlphaModel& m, const QuadratureSpec& qs,
                         const std::function<void(const FrontState&)>& observer = {}) {
  while (st.t < t_final - 1e-12) {
    StepperConfig c = cfg;
    c.dt = std::min(cfg.dt, t_final - st.t);
    st = step(st, c, m, qs);
    if (observer) observer(st);
  }
  return st;
}

// phi advances under the full equation, v under the linearization along phi
inline CoupledState step_linearized(const CoupledState& st, const StepperConfig& cfg,
                                    const AlphaModel& m, const QuadratureSpec& qs) {
  const Grid& g = st.phi.grid();
  detail::check_cfl(g, m, cfg);
  CoupledState next{st.t + cfg.dt, st.phi, st.v};
  auto rhs = [&](const std::vector<Field>& w, double) {
    return std::vector<Field>{Q_apply(w[0], derivative(w[0]), m, qs),
                              derivative(Q_apply(w[0], w[1], m, qs))};
  };
  detail::substep_guard(st.t, cfg.dt, [&](double h, int parts) {
    std::vector<Field> u{st.phi, st.v};
    double t = st.t;
    for (int p = 0; p < parts; ++p) {
      u = detail::ifrk4(u, t, h, g, m, rhs);
      if (!detail::finite(u[0]) || !detail::finite(u[1])) return false;
      t += h;
    }
    next.phi = std::move(u[0]);
    next.v = std::move(u[1]);
    return true;
  });
  detail::coercivity_gate(next.phi, cfg);
  return next;
}

// phi advances under the full equation, v under the low-high paradifferential
// flow with an optional constant source
inline CoupledState step_paradifferential(const CoupledState& st, const StepperConfig& cfg,
                                          const AlphaModel& m, const QuadratureSpec& qs,
                                          const ParaproductSpec& ps = {},
                                          const Field* f_source = nullptr) {
  const Grid& g = st.phi.grid();
  detail::check_cfl(g, m, cfg);
  CoupledState next{st.t + cfg.dt, st.phi, st.v};
  auto rhs = [&](const std::vector<Field>& w, double) {
    Field qv = derivative(Q_split(w[0], w[1], m, qs, ps).q_lh);
    if (f_source) qv = qv + *f_source;
    return std::vector<Field>{Q_apply(w[0], derivative(w[0]), m, qs), std::move(qv)};
  };
  detail::substep_guard(st.t, cfg.dt, [&](double h, int parts) {
    std::vector<Field> u{st.phi, st.v};
    double t = st.t;
    for (int p = 0; p < parts; ++p) {
      u = detail::ifrk4(u, t, h, g, m, rhs);
      if (!detail::finite(u[0]) || !detail::finite(u[1])) return false;
      t += h;
    }
    next.phi = std::move(u[0]);
    next.v = std::move(u[1]);
    return true;
  });
  detail::coercivity_gate(next.phi, cfg);
  return next;
}

}  // namespace gsqg
