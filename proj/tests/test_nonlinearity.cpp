#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gsqg/kernels.hpp"
#include "gsqg/multipliers.hpp"
#include "gsqg/nonlinearity.hpp"

using namespace gsqg;
using Catch::Approx;

namespace {

struct Lab {
  Grid g{1024, 32.0 * M_PI};
  AlphaModel m = AlphaModel::generic(0.5);
  QuadratureSpec qs = QuadratureSpec::for_grid(g);
  Field phi, phix;

  Lab() {
    phi = dealias_truncate(
        Field::sample(g, [](double x) { return 0.05 * std::exp(-x * x / 16.0); }));
    phix = derivative(phi);
  }
};

Lab& lab() {
  static Lab l;
  return l;
}

}  // namespace

TEST_CASE("Q is invariant under quadrature refinement", "[nonlinearity]") {
  auto& l = lab();
  Field q1 = Q_apply(l.phi, l.phix, l.m, l.qs);
  Field q2 = Q_apply(l.phi, l.phix, l.m, l.qs.refined());
  REQUIRE((q1 - q2).norm_l2() < 1e-7 * q2.norm_l2());
}

TEST_CASE("Q scales cubically in the front amplitude", "[nonlinearity]") {
  auto& l = lab();
  double prev = 0.0;
  for (double kap : {1e-2, 5e-3, 2.5e-3}) {
    Field fk = l.phi;
    fk *= (kap / 0.05);
    Field qk = Q_apply(fk, derivative(fk), l.m, l.qs);
    double r = qk.norm_l2() / (kap * kap * kap);
    if (prev > 0.0) REQUIRE(std::fabs(r / prev - 1.0) < 1e-5);
    prev = r;
  }
}

TEST_CASE("Q conserves mass and stays real", "[nonlinearity]") {
  auto& l = lab();
  Field q = Q_apply(l.phi, l.phix, l.m, l.qs);
  REQUIRE(q.norm_l2() > 0.0);
  REQUIRE(std::fabs(q.mass()) < 1e-18);
  REQUIRE(std::abs(q.spectrum()[0]) < 1e-18);
  REQUIRE(q.sup_imag() < 1e-14);
}

TEST_CASE("two-mode interaction reproduces the resonance kernel", "[nonlinearity]") {
  auto& l = lab();
  for (auto [k1, k2] : {std::pair{5, 9}, std::pair{3, 17}, std::pair{11, 6}}) {
    double xi1 = M_PI * k1 / l.g.L, xi2 = M_PI * k2 / l.g.L;
    Field psi = Field::sample(l.g, [&](double x) { return std::cos(xi1 * x); });
    Field v = Field::sample(l.g, [&](double x) { return std::cos(xi2 * x); });
    Field om = omega_bilinear(psi, v, l.m, l.qs);
    cplx got = om.spectrum_at_mode(k1 + k2);
    cplx want = 0.5 * l.g.L * resonance_kernel(xi1, xi2, l.m);
    INFO("modes (" << k1 << ", " << k2 << ")");
    REQUIRE(std::abs(got - want) < 2e-2 * std::abs(want));
  }
}

TEST_CASE("remainder after resonance subtraction is one order smaller", "[nonlinearity]") {
  auto& l = lab();
  Field vtest = dealias_truncate(
      Field::sample(l.g, [](double x) { return std::exp(-x * x / 64.0) * std::cos(1.5 * x); }));
  double prev = 0.0;
  for (double kap : {1e-2, 5e-3, 2.5e-3}) {
    Field fk = l.phi;
    fk *= (kap / 0.05);
    Field rem = null_remainder(fk, vtest, l.m, l.qs);
    double r2 = derivative(rem).norm_l2() / (kap * kap);
    if (prev > 0.0) REQUIRE(std::fabs(r2 / prev - 1.0) < 1e-3);
    prev = r2;
  }
}

TEST_CASE("paradifferential split reassembles Q", "[nonlinearity]") {
  auto& l = lab();
  Field vtest = dealias_truncate(
      Field::sample(l.g, [](double x) { return std::exp(-x * x / 64.0) * std::cos(1.5 * x); }));
  NonlinearityTerms terms = Q_split(l.phi, vtest, l.m, l.qs);
  Field resid = terms.q_full;
  resid -= terms.q_lh;
  resid -= terms.q_hl;
  resid -= terms.q_hh;
  REQUIRE(resid.norm_l2() < 1e-10 * terms.q_full.norm_l2());

  Field direct = Q_apply(l.phi, vtest, l.m, l.qs);
  REQUIRE((direct - terms.q_full).norm_l2() < 1e-10 * direct.norm_l2());
}

TEST_CASE("split respects frequency separation", "[nonlinearity]") {
  auto& l = lab();
  Field flow = Field::sample(l.g, [](double x) { return 0.01 * std::cos(0.5 * x); });
  Field vhigh = dealias_truncate(Field::sample(
      l.g, [](double x) { return std::cos(10.0 * x) * std::exp(-x * x / 400.0); }));
  NonlinearityTerms sep = Q_split(flow, vhigh, l.m, l.qs);
  REQUIRE(sep.q_lh.norm_l2() > 0.0);
  REQUIRE(sep.q_hl.norm_l2() < 1e-8 * sep.q_lh.norm_l2());
  REQUIRE(sep.q_hh.norm_l2() < 1e-8 * sep.q_lh.norm_l2());
}

TEST_CASE("near-origin gap is below tolerance and stable under y_min", "[nonlinearity]") {
  auto& l = lab();
  Field q1 = Q_apply(l.phi, l.phix, l.m, l.qs);
  QuadratureSpec tight = l.qs;
  tight.y_min = 0.5 * l.qs.y_min;
  Field q2 = Q_apply(l.phi, l.phix, l.m, tight);
  REQUIRE((q1 - q2).norm_l2() < 1e-3 * q1.norm_l2());
}

TEST_CASE("zero and log branches produce finite real output", "[nonlinearity]") {
  auto& l = lab();
  for (AlphaModel b : {AlphaModel::zero(), AlphaModel::log_sqg()}) {
    Field q = Q_apply(l.phi, l.phix, b, l.qs);
    REQUIRE(std::isfinite(q.norm_l2()));
    REQUIRE(q.norm_l2() > 0.0);
    REQUIRE(q.sup_imag() < 1e-14);
    REQUIRE(std::fabs(q.mass()) < 1e-15);
  }
}

TEST_CASE("slope potential is the antiderivative of F(phi_x)", "[nonlinearity]") {
  auto& l = lab();
  Field psi = slope_potential(l.phi, l.m);
  Field psix = derivative(psi);
  const auto& px = psix.values();
  const auto& fx = l.phix.values();
  double fbar = 0.0;
  for (int j = 0; j < l.g.n; ++j) fbar += l.m.F(fx[j].real());
  fbar /= l.g.n;
  double worst = 0.0;
  for (int j = 0; j < l.g.n; ++j)
    worst = std::max(worst, std::abs(px[j].real() - (l.m.F(fx[j].real()) - fbar)));
  REQUIRE(worst < 1e-10);
  REQUIRE(std::fabs(psi.mass()) < 1e-12);
}
