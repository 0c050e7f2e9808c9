#pragma once

#include <cmath>
#include <string>

#include "gsqg/errors.hpp"

namespace gsqg {

// uniform periodic grid on [-L, L), x_j = -L + j*dx, dx = 2L/n
struct Grid {
  int n = 0;
  double L = 0.0;
  double dx = 0.0;

  Grid() = default;
  Grid(int n_, double L_) : n(n_), L(L_) {
    if (n <= 0 || (n & (n - 1)) != 0)
      throw GridMismatch("grid size must be a positive power of two, got " + std::to_string(n));
    if (!(L > 0.0)) throw GridMismatch("grid half-length must be positive");
    dx = 2.0 * L / n;
  }

  double x(int j) const { return -L + j * dx; }

  // signed mode index for storage slot i in [0, n)
  int mode(int i) const { return i < n / 2 ? i : i - n; }

  // wavenumber xi_k = pi k / L at storage slot i
  double xi(int i) const { return M_PI * mode(i) / L; }

  double xi_max() const { return M_PI * (n / 2) / L; }
  double xi_min() const { return M_PI / L; }

  bool operator==(const Grid& o) const { return n == o.n && L == o.L; }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (a != b)
    throw GridMismatch(std::string(where) + ": grids differ (n " + std::to_string(a.n) + " vs " +
                       std::to_string(b.n) + ", L " + std::to_string(a.L) + " vs " +
                       std::to_string(b.L) + ")");
}

}  // namespace gsqg
