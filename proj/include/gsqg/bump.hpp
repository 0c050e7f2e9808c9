#pragma once

#include <array>
#include <cmath>

namespace gsqg {

// C^inf bump on (-1,1), zero outside, not normalized
inline double bump(double t) {
  double s = 1.0 - t * t;
  if (s <= 0.0) return 0.0;
  return std::exp(-1.0 / s);
}

namespace detail {

// integral of bump over [-1, x], tabulated once on a fixed Simpson grid
struct BumpCdfTable {
  static constexpr int kPanels = 4096;
  std::array<double, kPanels + 1> cdf{};
  double total = 0.0;

  BumpCdfTable() {
    double h = 2.0 / kPanels;
    cdf[0] = 0.0;
    for (int i = 0; i < kPanels; ++i) {
      double a = -1.0 + i * h;
      double m = a + 0.5 * h;
      double b = a + h;
      cdf[i + 1] = cdf[i] + h / 6.0 * (bump(a) + 4.0 * bump(m) + bump(b));
    }
    total = cdf[kPanels];
  }

  double eval(double x) const {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return total;
    double u = (x + 1.0) / 2.0 * kPanels;
    int i = static_cast<int>(u);
    if (i >= kPanels) i = kPanels - 1;
    double frac = u - i;
    double h = 2.0 / kPanels;
    double a = -1.0 + i * h;
    // Simpson refinement of the partial panel keeps the table smooth to ~1e-14
    double xm = a + 0.5 * frac * h;
    return cdf[i] + frac * h / 6.0 * (bump(a) + 4.0 * bump(xm) + bump(a + frac * h));
  }
};

inline const BumpCdfTable& bump_cdf() {
  static const BumpCdfTable table;
  return table;
}

}  // namespace detail

// smooth monotone step: 0 for t <= 0, 1 for t >= 1
inline double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const auto& tab = detail::bump_cdf();
  return tab.eval(2.0 * t - 1.0) / tab.total;
}

// mollifier with unit integral, support [-1,1]
inline double mollifier(double t) {
  const auto& tab = detail::bump_cdf();
  return bump(t) / tab.total;
}

// paradifferential cutoff chi(r): 1 for r <= 1/20, 0 for r >= 1/10, smooth monotone between
inline double para_cutoff(double r) {
  return smooth_step((0.1 - r) / 0.05);
}

// dyadic shell profile pieces: theta(r) = 1 for |r| <= 1, 0 for |r| >= 2
inline double shell_theta(double r) {
  r = std::fabs(r);
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  return smooth_step(2.0 - r);
}

}  // namespace gsqg
