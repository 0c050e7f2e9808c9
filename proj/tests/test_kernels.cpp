#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gsqg/kernels.hpp"

using namespace gsqg;
using Catch::Approx;

TEST_CASE("sum frequency snaps exact resonances", "[kernels]") {
  REQUIRE(resonance_sum_frequency(1.5, -1.5) == 0.0);
  REQUIRE(resonance_sum_frequency(1.5, -1.5 + 1e-12) == 0.0);
  REQUIRE(resonance_sum_frequency(1.5, -1.2) == Approx(0.3));
}

TEST_CASE("resonance golden value at (1,1), alpha = 1/2", "[kernels]") {
  AlphaModel m = AlphaModel::generic(0.5);
  cplx closed = resonance_closed(1.0, 1.0, m);
  REQUIRE(closed.real() == Approx(0.0).margin(1e-13));
  REQUIRE(closed.imag() == Approx(-2.936697694901938).epsilon(1e-12));
  // direct evaluation: a(1) = -c, a(2) = -c sqrt(2), so
  // Im Omega = (c + c - c sqrt(2)) / alpha = 2 c (2 - sqrt(2))
  double c = m.c();
  double want = 2.0 * c * (2.0 - std::sqrt(2.0));
  REQUIRE(closed.imag() == Approx(want).epsilon(1e-12));
}

TEST_CASE("resonance kernel quadrature agrees with the closed form", "[kernels]") {
  for (double al : {0.25, 0.5, 1.5, 1.75}) {
    AlphaModel m = AlphaModel::generic(al);
    for (auto [x1, x2] : {std::pair{1.0, 1.0},
                          std::pair{0.3, -1.7},
                          std::pair{-2.0, -2.0},
                          std::pair{5.0, 0.25},
                          std::pair{-4.4, 6.1}}) {
      cplx k = resonance_kernel(x1, x2, m);
      cplx c = resonance_closed(x1, x2, m);
      INFO("alpha " << al << " at (" << x1 << "," << x2 << ")");
      REQUIRE(std::abs(k - c) < 1e-7 * (1.0 + std::abs(c)));
    }
    // exact resonance line xi1 + xi2 = 0 vanishes on both routes
    REQUIRE(std::abs(resonance_closed(2.2, -2.2, m)) < 1e-13);
    REQUIRE(std::abs(resonance_kernel(2.2, -2.2, m)) < 1e-9);
  }

  AlphaModel lg = AlphaModel::log_sqg();
  cplx k = resonance_kernel(1.3, 2.2, lg);
  cplx c = resonance_closed(1.3, 2.2, lg);
  REQUIRE(std::abs(k - c) < 1e-7 * (1.0 + std::abs(c)));

  AlphaModel z = AlphaModel::zero();
  cplx kz = resonance_kernel(0.8, 1.7, z);
  cplx cz = resonance_closed(0.8, 1.7, z);
  REQUIRE(std::abs(kz - cz) < 1e-7 * (1.0 + std::abs(cz)));
}

TEST_CASE("resonance symmetries", "[kernels]") {
  AlphaModel m = AlphaModel::generic(0.75);
  cplx a = resonance_closed(1.1, 2.7, m);
  REQUIRE(std::abs(a - resonance_closed(2.7, 1.1, m)) < 1e-14 * std::abs(a));
  REQUIRE(std::abs(resonance_closed(-1.1, -2.7, m) + a) < 1e-13 * std::abs(a));
  // homogeneity of degree alpha
  cplx s = resonance_closed(2.2, 5.4, m);
  REQUIRE(std::abs(s - std::pow(2.0, 0.75) * a) < 1e-12 * std::abs(s));
}

TEST_CASE("cubic coefficient golden value", "[kernels]") {
  AlphaModel m = AlphaModel::generic(0.5);
  double q1 = cubic_coefficient_closed(1.0, m);
  REQUIRE(q1 == Approx(-0.97889923163397930).epsilon(1e-13));
  // q(1) = (4 sqrt(pi) / 3)(1 - sqrt(2)) at alpha = 1/2
  REQUIRE(q1 == Approx(4.0 * std::sqrt(M_PI) / 3.0 * (1.0 - std::sqrt(2.0))).epsilon(1e-13));
}

TEST_CASE("cubic coefficient: quadrature route, parity, homogeneity", "[kernels]") {
  for (double al : {0.25, 0.5, 1.5}) {
    AlphaModel m = AlphaModel::generic(al);
    for (double xi : {0.4, 1.0, 3.7}) {
      double qq = cubic_coefficient_q(xi, m);
      double qc = cubic_coefficient_closed(xi, m);
      INFO("alpha " << al << " xi " << xi);
      REQUIRE(std::fabs(qq - qc) < 1e-7 * (1.0 + std::fabs(qc)));
      REQUIRE(qc < 0.0);
      REQUIRE(cubic_coefficient_closed(-xi, m) == Approx(qc).epsilon(1e-14));
    }
    double r = cubic_coefficient_closed(2.0, m) / cubic_coefficient_closed(1.0, m);
    REQUIRE(r == Approx(std::pow(2.0, 1.0 + al)).epsilon(1e-12));
  }
  REQUIRE(cubic_coefficient_closed(0.0, AlphaModel::generic(0.5)) == 0.0);

  AlphaModel lg = AlphaModel::log_sqg();
  REQUIRE(cubic_coefficient_closed(1.5, lg) ==
          Approx(-2.0 * std::log(2.0) * 2.25).epsilon(1e-13));
  REQUIRE(std::fabs(cubic_coefficient_q(1.5, lg) - cubic_coefficient_closed(1.5, lg)) < 1e-6);

  AlphaModel z = AlphaModel::zero();
  REQUIRE(cubic_coefficient_closed(2.5, z) == Approx(-2.5).epsilon(1e-14));
  REQUIRE(std::fabs(cubic_coefficient_q(2.5, z) - (-2.5)) < 1e-6);
}

TEST_CASE("cubic coefficient is continuous through the log point", "[kernels]") {
  AlphaModel lg = AlphaModel::log_sqg();
  double at_log = cubic_coefficient_closed(1.3, lg);
  for (double al : {0.999, 1.001}) {
    // stay on the generic closed form right at the branch boundary
    AlphaModel near{al, Branch::Generic};
    double v = cubic_coefficient_closed(1.3, near);
    REQUIRE(v == Approx(at_log).epsilon(5e-3));
  }
}
