#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "gsqg/errors.hpp"
#include "gsqg/grid.hpp"

namespace gsqg {

// graded node ladder for |y|-integrals: geometric growth from y_min with ratio,
// with the step capped once it reaches (ratio-1)*32 so oscillatory tails stay
// resolved; node count is derived from the three fields
struct QuadratureSpec {
  double y_min = 1e-3;
  double y_max = 1e4;
  double ratio = 1.05;

  static QuadratureSpec for_grid(const Grid& g) {
    QuadratureSpec q;
    q.y_min = g.dx / 8.0;
    q.y_max = 2.0 * g.L;
    q.ratio = 1.05;
    return q;
  }

  static QuadratureSpec for_symbols() {
    QuadratureSpec q;
    q.y_min = 1e-3;
    q.y_max = 2e4;
    q.ratio = 1.02;
    return q;
  }

  QuadratureSpec refined() const {
    QuadratureSpec q = *this;
    q.ratio = 1.0 + 0.5 * (ratio - 1.0);
    return q;
  }
};

struct NodeLadder {
  std::vector<double> y;
  std::vector<double> w;  // trapezoid weights on the ladder
};

namespace detail {

inline const double kGL5x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                0.5384693101056831, 0.9061798459386640};
inline const double kGL5w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                0.4786286704993665, 0.2369268850561891};

}  // namespace detail

// five-point Gauss nodes on geometric panels; the panel width grows by `ratio`
// until capped at (ratio-1)*cap_scale, so refined() doubles density everywhere
inline NodeLadder build_ladder(const QuadratureSpec& qs, double cap_scale = 20.0) {
  if (!(qs.y_min > 0.0) || !(qs.y_max > qs.y_min) || !(qs.ratio > 1.0))
    throw QuadratureDiverged("quadrature spec requires 0 < y_min < y_max and ratio > 1");
  NodeLadder lad;
  double h_cap = (qs.ratio - 1.0) * cap_scale;
  double a = qs.y_min;
  size_t panels = 0;
  while (a < qs.y_max) {
    double b = std::min(a + std::min(a * (qs.ratio - 1.0), h_cap), qs.y_max);
    double m = 0.5 * (a + b), s = 0.5 * (b - a);
    for (int i = 0; i < 5; ++i) {
      lad.y.push_back(m + s * detail::kGL5x[i]);
      lad.w.push_back(s * detail::kGL5w[i]);
    }
    a = b;
    if (++panels > 200000) throw QuadratureDiverged("ladder node count exploded");
  }
  return lad;
}

// ---- oscillatory power integrals -------------------------------------------
//
// int_0^inf y^{-p} [ dc + sum_i amp_i trig_i(freq_i y) ] dy  with p in (1, 4),
// requiring the bracket to vanish to order > p-1 at y = 0.
// Pieces: Taylor series on [0, y0], Gauss-Legendre panels while resolved,
// Hermite-Filon panels once under-resolved, closed forms beyond y_max.

struct TrigTerm {
  double amp = 0.0;
  double freq = 0.0;  // signed; sin(-f y) = -sin(f y) handled via amp
  bool is_sin = true;
};

namespace detail {

// moments M_k(th) = int_{-1}^{1} tau^k exp(i th tau) dtau, k = 0..3
inline void filon_moments(double th, std::complex<double> M[4]) {
  using C = std::complex<double>;
  if (std::fabs(th) < 0.5) {
    for (int k = 0; k < 4; ++k) M[k] = C(0.0);
    C ipow(1.0, 0.0);
    double fact = 1.0;
    for (int j = 0; j < 24; ++j) {
      for (int k = 0; k < 4; ++k) {
        if ((k + j) % 2 == 0) M[k] += ipow / fact * (2.0 / (k + j + 1));
      }
      ipow *= C(0.0, th);
      fact *= (j + 1.0);
    }
    return;
  }
  C eip = std::exp(C(0.0, th));
  C eim = std::conj(eip);
  C ith(0.0, th);
  M[0] = (eip - eim) / ith;
  for (int k = 1; k < 4; ++k) {
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    M[k] = (eip - sgn * eim) / ith - (static_cast<double>(k) / ith) * M[k - 1];
  }
}

// int_a^b y^{-p} exp(i mu y) dy with cubic Hermite interpolation of y^{-p}
inline std::complex<double> filon_panel(double a, double b, double p, double mu) {
  using C = std::complex<double>;
  double s = 0.5 * (b - a), m = 0.5 * (a + b);
  double fa = std::pow(a, -p), fb = std::pow(b, -p);
  double da = -p * std::pow(a, -p - 1.0) * s, db = -p * std::pow(b, -p - 1.0) * s;
  double c2 = 0.25 * (db - da);
  double c0 = 0.5 * (fa + fb) - c2;
  double c3 = 0.25 * (da + db - (fb - fa));
  double c1 = 0.5 * (fb - fa) - c3;
  C M[4];
  filon_moments(mu * s, M);
  C val = c0 * M[0] + c1 * M[1] + c2 * M[2] + c3 * M[3];
  return s * std::exp(C(0.0, mu * m)) * val;
}

}  // namespace detail

inline double osc_power_integral(double p, const std::vector<TrigTerm>& in_terms, double in_dc,
                                 const QuadratureSpec& qs) {
  // fold zero-frequency pieces into the constant part
  std::vector<TrigTerm> terms;
  double dc = in_dc;
  for (const auto& t : in_terms) {
    if (t.amp == 0.0) continue;
    if (t.freq == 0.0) {
      if (!t.is_sin) dc += t.amp;
      continue;
    }
    terms.push_back(t);
  }
  double mu_max = 0.0, amp_sum = std::fabs(dc);
  for (const auto& t : terms) {
    mu_max = std::max(mu_max, std::fabs(t.freq));
    amp_sum += std::fabs(t.amp);
  }
  if (amp_sum == 0.0) return 0.0;

  // Taylor coefficients of the bracket at 0 up to y^9
  double coef[10] = {dc, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  for (const auto& t : terms) {
    double fp = 1.0;  // freq^m / m!
    for (int m = 0; m < 10; ++m) {
      if (m > 0) fp *= t.freq / m;
      int r = m % 4;
      if (t.is_sin) {
        if (r == 1) coef[m] += t.amp * fp;
        if (r == 3) coef[m] -= t.amp * fp;
      } else {
        if (r == 0) coef[m] += t.amp * fp;
        if (r == 2) coef[m] -= t.amp * fp;
      }
    }
  }
  // orders with non-integrable weight must cancel
  for (int m = 0; m + 1.0 - p <= 1e-9; ++m) {
    double scale = amp_sum * std::pow(std::max(mu_max, 1.0), m);
    if (std::fabs(coef[m]) > 1e-10 * scale)
      throw QuadratureDiverged("integrand does not cancel at y=0 (order " + std::to_string(m) +
                               ")");
    coef[m] = 0.0;
  }

  double y0 = std::min(qs.y_min, mu_max > 0.0 ? 0.05 / mu_max : qs.y_min);
  double head = 0.0;
  for (int m = 0; m < 10; ++m) {
    if (coef[m] == 0.0) continue;
    head += coef[m] * std::pow(y0, m + 1.0 - p) / (m + 1.0 - p);
  }

  auto bracket = [&](double y) {
    double s = dc;
    for (const auto& t : terms) s += t.amp * (t.is_sin ? std::sin(t.freq * y) : std::cos(t.freq * y));
    return s;
  };

  // resolved region: Gauss-Legendre panels on the geometric ladder
  double r = qs.ratio;
  double y_osc = mu_max > 0.0 ? 0.8 / (mu_max * (r - 1.0)) : qs.y_max;
  double acc = head;
  double y = y0;
  while (y < qs.y_max && y < y_osc) {
    double b = std::min(y * r, std::min(qs.y_max, y_osc));
    double s = 0.5 * (b - y), m = 0.5 * (b + y);
    double panel = 0.0;
    for (int i = 0; i < 5; ++i) {
      double yy = m + s * detail::kGL5x[i];
      panel += detail::kGL5w[i] * std::pow(yy, -p) * bracket(yy);
    }
    acc += s * panel;
    y = b;
  }

  // under-resolved region: per-component Hermite-Filon panels, extended past
  // y_max for slow components until |mu| y >= 20 so integration by parts is
  // accurate; the constant part gets closed forms
  double y_g = y;
  if (y_g < qs.y_max && dc != 0.0)
    acc += dc * (std::pow(qs.y_max, 1.0 - p) - std::pow(y_g, 1.0 - p)) / (1.0 - p);
  if (dc != 0.0) acc += dc * std::pow(qs.y_max, 1.0 - p) / (p - 1.0);
  for (const auto& t : terms) {
    double Yc = std::max(qs.y_max, 20.0 / std::fabs(t.freq));
    double yy = y_g;
    while (yy < Yc) {
      double b = std::min(yy * r, Yc);
      std::complex<double> pi = detail::filon_panel(yy, b, p, t.freq);
      acc += t.amp * (t.is_sin ? pi.imag() : pi.real());
      yy = b;
    }
    double A = std::pow(Yc, -p), Ap = -p * std::pow(Yc, -p - 1.0);
    double mu = t.freq;
    double sn = std::sin(mu * Yc), cn = std::cos(mu * Yc);
    double tail = t.is_sin ? (A * cn / mu - Ap * sn / (mu * mu))
                           : (-A * sn / mu - Ap * cn / (mu * mu));
    acc += t.amp * tail;
  }
  return acc;
}

}  // namespace gsqg
