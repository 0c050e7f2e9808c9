#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "gsqg/bump.hpp"
#include "gsqg/field.hpp"

namespace gsqg {

// apply a Fourier multiplier m(xi) on the grid; m must be finite at every grid frequency
template <class M>
Field apply_multiplier(const Field& f, M&& m) {
  const Grid& g = f.grid();
  auto s = f.spectrum();
  for (int i = 0; i < g.n; ++i) {
    double xi = g.xi(i);
    cplx mv = m(xi);
    if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) throw SingularMultiplier(xi);
    s[i] *= mv;
  }
  return Field::from_spectrum(g, std::move(s));
}

inline Field derivative(const Field& f) {
  return apply_multiplier(f, [](double xi) { return cplx(0.0, xi); });
}

// antiderivative with the zero mode removed
inline Field dx_inverse(const Field& f) {
  return apply_multiplier(f, [](double xi) {
    if (xi == 0.0) return cplx(0.0);
    return cplx(0.0, -1.0 / xi);
  });
}

// |D|^s with the zero mode removed (required for negative s, harmless otherwise)
inline Field abs_d_power(const Field& f, double s) {
  return apply_multiplier(f, [s](double xi) {
    if (xi == 0.0) return cplx(0.0);
    return cplx(std::pow(std::fabs(xi), s), 0.0);
  });
}

// f(. + y) for arbitrary real shift y
inline Field translate(const Field& f, double y) {
  return apply_multiplier(f, [y](double xi) { return std::exp(cplx(0.0, xi * y)); });
}

// both translates f(. + y) and f(. - y) of a real field from one complex transform
inline void translate_pair_real(const Field& f, double y, std::vector<double>& plus,
                                std::vector<double>& minus) {
  const Grid& g = f.grid();
  const auto& s = f.spectrum();
  std::vector<cplx> packed(g.n);
  double inv = 1.0 / (g.dx * g.n);
  for (int i = 0; i < g.n; ++i) {
    double xi = g.xi(i);
    cplx ep = std::exp(cplx(0.0, xi * y));
    double sgn = (i & 1) ? -1.0 : 1.0;
    // h = f(x+y) + i f(x-y); valid because f is real so both translates are real
    packed[i] = (s[i] * ep + cplx(0.0, 1.0) * (s[i] * std::conj(ep))) * (sgn * inv);
  }
  std::vector<cplx> out(g.n);
  detail::FftPlans::instance().backward(g.n, packed.data(), out.data());
  plus.resize(g.n);
  minus.resize(g.n);
  for (int j = 0; j < g.n; ++j) {
    plus[j] = out[j].real();
    minus[j] = out[j].imag();
  }
}

// smooth high-pass profile: 0 below M, 1 above 2M
inline double highpass_profile(double xi, double M, bool sharp) {
  double a = std::fabs(xi);
  if (sharp) return a > M ? 1.0 : 0.0;
  return 1.0 - shell_theta(a / M);
}

inline Field highpass(const Field& f, double M, bool sharp = true) {
  return apply_multiplier(
      f, [M, sharp](double xi) { return cplx(highpass_profile(xi, M, sharp), 0.0); });
}

// dyadic shell list for the grid: lambda = 2^j covering (lambda/2, lambda] shells
// from below the least nonzero frequency up to Nyquist
inline std::vector<double> dyadic_blocks(const Grid& g) {
  int jmin = static_cast<int>(std::floor(std::log2(g.xi_min()) + 1e-12));
  int jmax = static_cast<int>(std::ceil(std::log2(g.xi_max()) - 1e-12));
  std::vector<double> out;
  for (int j = jmin; j <= jmax; ++j) out.push_back(std::ldexp(1.0, j));
  return out;
}

// shell profile at frequency xi: smooth telescoping profile peaking at |xi| = lambda,
// or the sharp indicator of (lambda/2, lambda]
inline double lp_profile(double xi, double lambda, bool sharp) {
  double a = std::fabs(xi);
  if (sharp) return (a > 0.5 * lambda && a <= lambda) ? 1.0 : 0.0;
  return shell_theta(a / lambda) - shell_theta(2.0 * a / lambda);
}

inline bool lp_block_in_range(const Grid& g, double lambda) {
  auto blocks = dyadic_blocks(g);
  for (double b : blocks)
    if (std::fabs(b - lambda) <= 1e-12 * lambda) return true;
  return false;
}

inline Field littlewood_paley(const Field& f, double lambda, bool sharp = false) {
  const Grid& g = f.grid();
  if (!lp_block_in_range(g, lambda))
    throw BlockOutOfRange("dyadic block " + std::to_string(lambda) +
                          " outside the grid range [" + std::to_string(dyadic_blocks(g).front()) +
                          ", " + std::to_string(dyadic_blocks(g).back()) + "]");
  return apply_multiplier(
      f, [lambda, sharp](double xi) { return cplx(lp_profile(xi, lambda, sharp), 0.0); });
}

// the mean mode left out of the dyadic shells
inline Field lp_zero_mode(const Field& f) {
  const Grid& g = f.grid();
  std::vector<cplx> s(g.n, cplx(0.0));
  s[0] = f.spectrum()[0];
  return Field::from_spectrum(g, std::move(s));
}

}  // namespace gsqg
