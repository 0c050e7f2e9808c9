#pragma once

#include <cmath>
#include <vector>

#include "gsqg/multipliers.hpp"

namespace gsqg {

// quantization data for low-high paraproducts.
// chi(r) drops the symbol region |xi-eta|^2 > (M^2 + |xi+eta|^2)/10 and both
// factors carry the frequency projection P_{>M}.  The sharp projection keeps
// constant-symbol identities exact (T_c u = c P_{>M} u); the smooth roll-off
// over [M, 2M] is available for comparison runs.
struct ParaproductSpec {
  double M = 8.0;
  bool sharp_projection = true;

  double cutoff(double theta1, double theta2) const {
    return para_cutoff(theta1 * theta1 / (M * M + theta2 * theta2));
  }

  double projection(double xi) const { return highpass_profile(xi, M, sharp_projection); }
};

// modes below the FFT noise floor are dropped from the convolution support;
// the trim is relative, so the operator stays homogeneous in a
inline double para_support_threshold(const std::vector<cplx>& sp) {
  double m = 0.0;
  for (const auto& c : sp) m = std::max(m, std::abs(c));
  return 1e-14 * m;
}

// T_a u: twisted convolution over the grid spectrum,
//   (T_a u)^(xi) = P(xi) (2L)^{-1} sum_eta chi(xi-eta, xi+eta) a^(xi-eta) P(eta) u^(eta)
// restricted to grid frequencies (no wrap-around).
inline Field paraproduct(const Field& a, const Field& u, const ParaproductSpec& ps) {
  require_same_grid(a.grid(), u.grid(), "paraproduct");
  const Grid& g = a.grid();
  const auto& ah = a.spectrum();
  const auto& uh = u.spectrum();
  int n = g.n;
  int half = n / 2;

  double tau = para_support_threshold(ah);
  std::vector<int> amodes;
  amodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(ah[i]) > tau) amodes.push_back(g.mode(i));
  }

  std::vector<cplx> out(n, cplx(0.0));
  double inv2L = 1.0 / (2.0 * g.L);
  for (int i = 0; i < n; ++i) {
    int k = g.mode(i);
    double xik = M_PI * k / g.L;
    double pk = ps.projection(xik);
    if (pk == 0.0) continue;
    cplx acc(0.0);
    for (int ka : amodes) {
      int m = k - ka;
      if (m < -half || m >= half) continue;
      double xim = M_PI * m / g.L;
      double pm = ps.projection(xim);
      if (pm == 0.0) continue;
      double w = ps.cutoff(xik - xim, xik + xim);
      if (w == 0.0) continue;
      int ia = ka >= 0 ? ka : ka + n;
      int im = m >= 0 ? m : m + n;
      acc += w * pm * ah[ia] * uh[im];
    }
    out[i] = pk * inv2L * acc;
  }
  return Field::from_spectrum(g, std::move(out));
}

// balanced remainder Pi(a,u) = a u - T_a u - T_u a, with the pointwise grid product
inline Field balanced_remainder(const Field& a, const Field& u, const ParaproductSpec& ps) {
  Field p = product_pointwise(a, u);
  p -= paraproduct(a, u, ps);
  p -= paraproduct(u, a, ps);
  return p;
}

}  // namespace gsqg
