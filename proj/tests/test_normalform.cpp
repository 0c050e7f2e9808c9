#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gsqg/multipliers.hpp"
#include "gsqg/normalform.hpp"

using namespace gsqg;
using Catch::Approx;

namespace {

Field gauss(const Grid& g, double eps, double sigma) {
  return Field::sample(g, [=](double x) { return eps * std::exp(-x * x / (2 * sigma * sigma)); });
}

}  // namespace

TEST_CASE("normal form construction identities", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  Field phi = gauss(g, 0.05, 3.0);
  auto nf = build_normalform(phi, m);

  Field phix = derivative(phi);
  const auto& px = nf.psi_x.values();
  const auto& fx = phix.values();
  double worst = 0.0;
  for (int j = 0; j < g.n; ++j)
    worst = std::max(worst, std::abs(px[j].real() - m.F(fx[j].real())));
  REQUIRE(worst < 1e-12);

  double jworst = 0.0;
  const auto& J = nf.J.values();
  for (int j = 0; j < g.n; ++j)
    jworst = std::max(jworst, std::abs(J[j].real() * (1.0 - px[j].real()) - 1.0));
  REQUIRE(jworst < 1e-12);

  // at alpha = 1/2 the weight J_tilde is (1 - psi_x)^2
  double jt = 0.0;
  const auto& Jt = nf.J_tilde.values();
  for (int j = 0; j < g.n; ++j) {
    double want = (1.0 - px[j].real()) * (1.0 - px[j].real());
    jt = std::max(jt, std::abs(Jt[j].real() - want));
  }
  REQUIRE(jt < 1e-12);

  // psi is a mean-free antiderivative of psi_x
  REQUIRE(std::fabs(nf.psi.mass()) < 1e-10);
  Field mean = Field::sample(g, [&](double) { return nf.psi_x.mass() / (2.0 * g.L); });
  REQUIRE((derivative(nf.psi) - (nf.psi_x - mean)).sup_abs() < 1e-10);
}

TEST_CASE("psi_x spot value on a sine front", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  Field sphi = Field::sample(g, [](double x) { return 0.1 * std::sin(0.25 * x); });
  auto snf = build_normalform(sphi, m);
  // x = 0 is sample n/2; the slope there is 0.025
  double got = snf.psi_x.values()[g.n / 2].real();
  REQUIRE(got == Approx(m.F(0.025)).epsilon(1e-9));
}

TEST_CASE("vanishing front leaves every correction trivial", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  ParaproductSpec ps;
  Field z = Field::sample(g, [](double) { return 0.0; });
  auto znf = build_normalform(z, m);
  Field v = Field::sample(g, [](double x) { return std::exp(-x * x / 8.0) * std::cos(12.0 * x); });

  REQUIRE((linearized_correction(v, znf, ps) - v).sup_abs() < 1e-13);
  REQUIRE(nonlinear_correction(z, znf, ps).sup_abs() < 1e-13);

  Field hp = highpass(v, ps.M, true);
  REQUIRE(modified_energy(v, znf, ps) == Approx(hp.norm_l2() * hp.norm_l2()).epsilon(1e-12));
  REQUIRE((conjugated_variable(v, 1.0, znf, ps) - highpass(abs_d_power(v, 1.0), ps.M, true))
              .norm_l2() < 1e-12);
  REQUIRE((conjugated_variable(v, 0.0, znf, ps) - hp).norm_l2() < 1e-12);
}

TEST_CASE("linearized correction is affine in v", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  ParaproductSpec ps;
  auto nf = build_normalform(gauss(g, 0.05, 3.0), m);
  Field v1 = Field::sample(g, [](double x) { return std::exp(-x * x / 8.0) * std::cos(12.0 * x); });
  Field v2 = Field::sample(g, [](double x) { return std::exp(-(x - 2) * (x - 2) / 6.0) * std::sin(9.0 * x); });
  Field c12 = linearized_correction(v1 + v2, nf, ps) - (v1 + v2);
  Field c1 = linearized_correction(v1, nf, ps) - v1;
  Field c2 = linearized_correction(v2, nf, ps) - v2;
  REQUIRE((c12 - c1 - c2).sup_abs() < 1e-12 * (c1.sup_abs() + c2.sup_abs() + 1e-30));
}

TEST_CASE("corrections scan at their derived amplitude orders", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  ParaproductSpec ps;
  Field v = Field::sample(g, [](double x) { return std::exp(-x * x / 8.0) * std::cos(12.0 * x); });
  double prev1 = 0, prev2 = 0, prev3 = 0;
  for (double k : {1.0, 0.5, 0.25}) {
    Field pk = gauss(g, 0.05 * k, 3.0);
    auto nfk = build_normalform(pk, m);
    double d1 = (linearized_correction(v, nfk, ps) - v).norm_l2();
    double d2 = (nonlinear_correction(pk, nfk, ps) - pk).norm_l2();
    double d3 = (conjugated_variable(v, 1.5, nfk, ps) -
                 highpass(abs_d_power(v, 1.5), ps.M, true)).norm_l2();
    if (prev1 > 0) {
      REQUIRE(std::log2(prev1 / d1) == Approx(2.0).margin(0.1));
      REQUIRE(std::log2(prev2 / d2) == Approx(3.0).margin(0.1));
      REQUIRE(std::log2(prev3 / d3) == Approx(2.0).margin(0.1));
    }
    prev1 = d1;
    prev2 = d2;
    prev3 = d3;
  }
}

TEST_CASE("modified energy is real and coercive on a random suite", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  ParaproductSpec ps;
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  double worst = 1e9;
  for (int trial = 0; trial < 20; ++trial) {
    double eps = 0.02 + 0.02 * std::fabs(un(rng));
    double sig = 2.0 + 2.0 * std::fabs(un(rng));
    auto nfk = build_normalform(gauss(g, eps, sig), m);
    std::vector<double> vals(g.n);
    for (int j = 0; j < g.n; ++j) vals[j] = un(rng);
    Field v = highpass(Field::from_real(g, vals), 2.0, true);
    double e = modified_energy(v, nfk, ps);
    Field hp = highpass(v, ps.M, true);
    worst = std::min(worst, e / (hp.norm_l2() * hp.norm_l2()));
  }
  REQUIRE(worst > 0.5);
  REQUIRE(worst < 2.0);
}

TEST_CASE("higher energy grows like lambda^{2s} across single modes", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  ParaproductSpec ps;
  auto nf = build_normalform(gauss(g, 0.05, 3.0), m);
  double s = 1.5;
  double eprev = 0.0, xiprev = 0.0;
  for (double xi : {10.0, 14.0, 20.0}) {
    Field v = Field::sample(g, [=](double x) { return std::cos(xi * x); });
    double e = higher_energy(v, s, nf, ps);
    if (eprev > 0.0) {
      double slope = std::log2(e / eprev) / std::log2(xi / xiprev);
      REQUIRE(slope == Approx(2.0 * s).margin(0.2));
    }
    eprev = e;
    xiprev = xi;
  }
}

TEST_CASE("branch behavior of the energies", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  ParaproductSpec ps;
  Field phi = gauss(g, 0.05, 3.0);
  Field v = Field::sample(g, [](double x) { return std::exp(-x * x / 8.0) * std::cos(12.0 * x); });

  AlphaModel lg = AlphaModel::log_sqg();
  auto lnf = build_normalform(phi, lg);
  REQUIRE(std::isfinite(modified_energy(v, lnf, ps)));
  REQUIRE(std::isfinite((linearized_correction(v, lnf, ps) - v).norm_l2()));

  AlphaModel z = AlphaModel::zero();
  auto znf = build_normalform(phi, z);
  double n2 = v.norm_l2() * v.norm_l2();
  REQUIRE(modified_energy(v, znf, ps) == Approx(n2).epsilon(1e-12));
  REQUIRE_THROWS_AS(linearized_correction(v, znf, ps), Error);
}

TEST_CASE("steep fronts are rejected", "[normalform]") {
  Grid g(512, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  REQUIRE_THROWS_AS(build_normalform(gauss(g, 3.0, 2.0), m), DataTooLarge);
}

TEST_CASE("nonlinear correction stays in the interaction band", "[normalform]") {
  Grid g(1024, 8.0 * M_PI);
  AlphaModel m = AlphaModel::generic(0.5);
  ParaproductSpec ps;
  Field p2 = Field::sample(g, [](double x) { return 0.02 * std::cos(3.0 * x) + 0.02 * std::cos(11.0 * x); });
  auto nf2 = build_normalform(p2, m);
  Field corr = nonlinear_correction(p2, nf2, ps) - p2;
  const auto& sp = corr.spectrum();
  double low = 0.0, inband = 0.0, total = 0.0;
  for (int i = 0; i < g.n; ++i) {
    double xi = std::fabs(g.xi(i));
    double w = std::norm(sp[i]);
    total += w;
    if (xi < 2.5) low += w;
    if (xi >= 2.5 && xi <= 36.0) inband += w;
  }
  REQUIRE(total > 0.0);
  REQUIRE(inband / total >= 0.999);
  REQUIRE(low / total < 1e-6);
}
