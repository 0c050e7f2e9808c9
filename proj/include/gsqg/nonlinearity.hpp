#pragma once

#include <cmath>
#include <vector>

#include "gsqg/errors.hpp"
#include "gsqg/field.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/paraproduct.hpp"
#include "gsqg/quadrature.hpp"
#include "gsqg/symbols.hpp"
#include "gsqg/threading.hpp"

namespace gsqg {

inline double F_profile(const AlphaModel& m, double s) { return m.F(s); }

inline Field F_profile(const AlphaModel& m, const Field& f) {
  const Grid& g = f.grid();
  const auto& v = f.values();
  std::vector<double> out(g.n);
  for (int j = 0; j < g.n; ++j) out[j] = m.F(v[j].real());
  return Field::from_real(g, out);
}

// delta^y f = (f(x+y) - f(x))/y as the spectral multiplier (e^{i xi y} - 1)/y
inline Field difference_quotient(const Field& f, double y) {
  if (y == 0.0) throw ZeroShift();
  return apply_multiplier(f, [y](double xi) {
    return (std::exp(cplx(0.0, xi * y)) - 1.0) / y;
  });
}

// |delta|^y f = sgn(y) delta^y f
inline Field abs_difference_quotient(const Field& f, double y) {
  Field d = difference_quotient(f, y);
  if (y < 0.0) d *= -1.0;
  return d;
}

// psi = dx^{-1} F(phi_x), normalized to mean zero by the inverse derivative
inline Field slope_potential(const Field& phi, const AlphaModel& m) {
  return dx_inverse(F_profile(m, derivative(phi)));
}

namespace detail {

// sums node(y, w, acc) over the ladder with one accumulator per worker chunk,
// merged in chunk order; callers must materialize input spectra first so the
// lazy FFT cache is not raced
template <class NodeFn>
inline std::vector<double> ladder_accumulate(int n, const NodeLadder& lad, const NodeFn& node) {
  int m = static_cast<int>(lad.y.size());
  int k = std::min(thread_count(), std::max(m, 1));
  std::vector<std::vector<double>> partial(k, std::vector<double>(n, 0.0));
  parallel_chunks(m, [&](int c, int b, int e) {
    auto& acc = partial[c];
    for (int i = b; i < e; ++i) node(lad.y[i], lad.w[i], acc);
  });
  std::vector<double> out(n, 0.0);
  for (int c = 0; c < k; ++c)
    for (int j = 0; j < n; ++j) out[j] += partial[c][j];
  return out;
}

inline QuadratureSpec clamp_to_torus(const QuadratureSpec& qs, const Grid& g) {
  QuadratureSpec eff = qs;
  // shifts wrap with period 2L, so the difference integrand repeats; cut there
  eff.y_max = std::min(qs.y_max, 2.0 * g.L);
  return eff;
}

}  // namespace detail

// Q(f, g) = int |y|^{1-alpha} F(delta^y f) |delta|^y g dy over the +/-y pair
//   y^{-alpha} [ F((f+ - f)/y) (g+ - g) + F((f- - f)/y) (g- - g) ]
// The gap |y| < y_min would contribute the small-y limit |y|^{1-alpha} F(f_x)
// sgn(y) g_x, which is odd in y, so the paired gap term vanishes and is skipped.
inline Field Q_apply(const Field& f, const Field& gfun, const AlphaModel& m,
                     const QuadratureSpec& qs) {
  require_same_grid(f.grid(), gfun.grid(), "Q_apply");
  const Grid& g = f.grid();
  NodeLadder lad = build_ladder(detail::clamp_to_torus(qs, g));
  f.spectrum();
  gfun.spectrum();
  const auto& f0 = f.values();
  const auto& g0 = gfun.values();
  double alpha = m.alpha;

  auto acc = detail::ladder_accumulate(g.n, lad, [&](double y, double w, std::vector<double>& out) {
    thread_local std::vector<double> fp, fm, gp, gm;
    translate_pair_real(f, y, fp, fm);
    translate_pair_real(gfun, y, gp, gm);
    double wy = w * std::pow(y, -alpha);
    double iy = 1.0 / y;
    for (int j = 0; j < g.n; ++j) {
      double sp = (fp[j] - f0[j].real()) * iy;
      double sm = (fm[j] - f0[j].real()) * iy;
      out[j] += wy * (m.F(sp) * (gp[j] - g0[j].real()) + m.F(sm) * (gm[j] - g0[j].real()));
    }
  });
  return dealias_truncate(Field::from_real(g, acc));
}

// principal bilinear part: Omega(psi, v) = int |y|^{1-alpha} delta^y psi |delta|^y v dy,
// evaluated with the same ladder as Q_apply so the two share truncation errors;
// paired integrand y^{-1-alpha} [ (psi+ - psi)(v+ - v) - (psi- - psi)(v- - v) ]
inline Field omega_bilinear(const Field& psi, const Field& v, const AlphaModel& m,
                            const QuadratureSpec& qs) {
  require_same_grid(psi.grid(), v.grid(), "omega_bilinear");
  const Grid& g = psi.grid();
  NodeLadder lad = build_ladder(detail::clamp_to_torus(qs, g));
  psi.spectrum();
  v.spectrum();
  const auto& p0 = psi.values();
  const auto& v0 = v.values();
  double alpha = m.alpha;

  auto acc = detail::ladder_accumulate(g.n, lad, [&](double y, double w, std::vector<double>& out) {
    thread_local std::vector<double> pp, pm, vp, vm;
    translate_pair_real(psi, y, pp, pm);
    translate_pair_real(v, y, vp, vm);
    double wy = w * std::pow(y, -1.0 - alpha);
    for (int j = 0; j < g.n; ++j) {
      out[j] += wy * ((pp[j] - p0[j].real()) * (vp[j] - v0[j].real()) -
                      (pm[j] - p0[j].real()) * (vm[j] - v0[j].real()));
    }
  });
  return dealias_truncate(Field::from_real(g, acc));
}

// Q(f, v) with the quadratic-in-f principal part Omega(psi(f), v) removed;
// both terms ride the same ladder, so their shared truncation bias cancels
inline Field null_remainder(const Field& f, const Field& v, const AlphaModel& m,
                            const QuadratureSpec& qs) {
  Field q = Q_apply(f, v, m, qs);
  q -= omega_bilinear(slope_potential(f, m), v, m, qs);
  return q;
}

struct NonlinearityTerms {
  Field q_full;
  Field q_lh;
  Field q_hl;
  Field q_hh;
};

// splits the integrand product F(delta^y f) * (v(x +/- y) - v(x)) into
// paraproduct low-high / high-low / balanced parts at every ladder node,
// then integrates each piece; q_full is the plain Q_apply sum so the
// decomposition identity q_full = q_lh + q_hl + q_hh is a real check
inline NonlinearityTerms Q_split(const Field& f, const Field& v, const AlphaModel& m,
                                 const QuadratureSpec& qs, const ParaproductSpec& ps = {}) {
  require_same_grid(f.grid(), v.grid(), "Q_split");
  const Grid& g = f.grid();
  NodeLadder lad = build_ladder(detail::clamp_to_torus(qs, g));
  f.spectrum();
  v.spectrum();
  const auto& f0 = f.values();
  const auto& v0 = v.values();
  double alpha = m.alpha;
  int nn = g.n;

  int mcount = static_cast<int>(lad.y.size());
  int k = std::min(thread_count(), std::max(mcount, 1));
  std::vector<std::vector<double>> afull(k, std::vector<double>(nn, 0.0));
  std::vector<std::vector<double>> alh = afull, ahl = afull, ahh = afull;

  parallel_chunks(mcount, [&](int c, int b, int e) {
    std::vector<double> fp, fm, vp, vm, abuf(nn), ubuf(nn);
    for (int i = b; i < e; ++i) {
      double y = lad.y[i], w = lad.w[i];
      translate_pair_real(f, y, fp, fm);
      translate_pair_real(v, y, vp, vm);
      double wy = w * std::pow(y, -alpha);
      double iy = 1.0 / y;
      for (int side = 0; side < 2; ++side) {
        const auto& ft = side == 0 ? fp : fm;
        const auto& vt = side == 0 ? vp : vm;
        for (int j = 0; j < nn; ++j) {
          abuf[j] = m.F((ft[j] - f0[j].real()) * iy);
          ubuf[j] = vt[j] - v0[j].real();
        }
        Field a = Field::from_real(g, abuf);
        Field u = Field::from_real(g, ubuf);
        Field lh = paraproduct(a, u, ps);
        Field hl = paraproduct(u, a, ps);
        const auto& lhv = lh.values();
        const auto& hlv = hl.values();
        for (int j = 0; j < nn; ++j) {
          double prod = abuf[j] * ubuf[j];
          double l = lhv[j].real(), h = hlv[j].real();
          afull[c][j] += wy * prod;
          alh[c][j] += wy * l;
          ahl[c][j] += wy * h;
          ahh[c][j] += wy * (prod - l - h);
        }
      }
    }
  });

  auto merge = [&](std::vector<std::vector<double>>& parts) {
    std::vector<double> out(nn, 0.0);
    for (int c = 0; c < k; ++c)
      for (int j = 0; j < nn; ++j) out[j] += parts[c][j];
    return dealias_truncate(Field::from_real(g, out));
  };
  return NonlinearityTerms{merge(afull), merge(alh), merge(ahl), merge(ahh)};
}

}  // namespace gsqg
