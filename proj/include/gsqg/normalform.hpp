#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "multipliers.hpp"
#include "nonlinearity.hpp"
#include "paraproduct.hpp"
#include "symbols.hpp"

namespace gsqg {

namespace detail {

template <class Fn>
Field pointwise_map(const Field& f, Fn&& fn) {
  const Grid& g = f.grid();
  const auto& v = f.values();
  std::vector<double> out(g.n);
  for (int j = 0; j < g.n; ++j) out[j] = fn(v[j].real());
  return Field::from_real(g, out);
}

}  // namespace detail

struct NormalFormData {
  AlphaModel model;
  Field psi;      // dx^{-1} F(phi_x), mean zero
  Field psi_x;    // F(phi_x) sampled directly; keeps the mean that psi cannot carry
  Field J;        // 1/(1 - psi_x)
  Field J_tilde;  // J^{-1/alpha} on the generic branch, 1 elsewhere
};

inline NormalFormData build_normalform(const Field& phi, const AlphaModel& m) {
  Field phix = derivative(phi);
  double slope = phix.sup_abs();
  if (!(slope < 0.5)) throw DataTooLarge(slope);
  Field psix = F_profile(m, phix);
  double margin = 1.0;
  for (const auto& v : psix.values()) margin = std::min(margin, 1.0 - v.real());
  if (!(margin > 0.5)) throw DataTooLarge(slope);
  Field J = detail::pointwise_map(psix, [](double s) { return 1.0 / (1.0 - s); });
  Field Jt = m.branch == Branch::Generic
                 ? detail::pointwise_map(J, [&m](double j) { return std::pow(j, -1.0 / m.alpha); })
                 : Field::sample(phi.grid(), [](double) { return 1.0; });
  return NormalFormData{m, dx_inverse(psix), std::move(psix), std::move(J), std::move(Jt)};
}

// vtil = v - (1/a) dx T_{T_J v} psi - (1/a) dx Pi(T_J v, psi)
inline Field linearized_correction(const Field& v, const NormalFormData& nf,
                                   const ParaproductSpec& ps = {}) {
  if (nf.model.branch == Branch::Zero)
    throw Error("zero-dispersion branch carries no paradifferential normal form");
  Field w = paraproduct(nf.J, v, ps);
  Field corr = derivative(paraproduct(w, nf.psi, ps) + balanced_remainder(w, nf.psi, ps));
  return v - (1.0 / nf.model.alpha) * corr;
}

// phitil = phi - (1/a) Pi(psi, T_J phi_x)
inline Field nonlinear_correction(const Field& phi, const NormalFormData& nf,
                                  const ParaproductSpec& ps = {}) {
  if (nf.model.branch == Branch::Zero)
    throw Error("zero-dispersion branch carries no paradifferential normal form");
  Field u = paraproduct(nf.J, derivative(phi), ps);
  return phi - (1.0 / nf.model.alpha) * balanced_remainder(nf.psi, u, ps);
}

// E(v) = <v, T_{Jtilde} v>; the log and zero branches keep the flat L^2 energy
inline double modified_energy(const Field& v, const NormalFormData& nf,
                              const ParaproductSpec& ps = {}) {
  if (nf.model.branch != Branch::Generic) {
    double n = v.norm_l2();
    return n * n;
  }
  return inner_product(v, paraproduct(nf.J_tilde, v, ps)).real();
}

// vs = T_{J^{-s/a}} |D|^s v, then one commutator correction
// ws = (1/a^2) T_J ( -dx [|D|^s, T_psi] |D|^{1-a-s} vs + s T_{psi_x} |D|^{1-a} vs )
inline Field conjugated_variable(const Field& v, double s, const NormalFormData& nf,
                                 const ParaproductSpec& ps = {}, bool with_correction = true) {
  if (nf.model.branch == Branch::Zero)
    throw Error("zero-dispersion branch carries no conjugated variable");
  double a = nf.model.alpha;
  Field weight = detail::pointwise_map(nf.J, [&](double j) { return std::pow(j, -s / a); });
  Field vs = paraproduct(weight, abs_d_power(v, s), ps);
  if (!with_correction) return vs;
  Field u = abs_d_power(vs, 1.0 - a - s);
  Field comm =
      abs_d_power(paraproduct(nf.psi, u, ps), s) - paraproduct(nf.psi, abs_d_power(u, s), ps);
  Field inner =
      (-1.0) * derivative(comm) + s * paraproduct(nf.psi_x, abs_d_power(vs, 1.0 - a), ps);
  return vs - (1.0 / (a * a)) * paraproduct(nf.J, inner, ps);
}

inline double higher_energy(const Field& v, double s, const NormalFormData& nf,
                            const ParaproductSpec& ps = {}, bool with_correction = true) {
  return modified_energy(conjugated_variable(v, s, nf, ps, with_correction), nf, ps);
}

}  // namespace gsqg
