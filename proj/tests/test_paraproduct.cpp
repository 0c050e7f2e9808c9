#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gsqg/multipliers.hpp"
#include "gsqg/paraproduct.hpp"

using namespace gsqg;
using Catch::Approx;

namespace {

Field random_band(const Grid& g, std::mt19937_64& rng, int kmax) {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  std::vector<cplx> s(g.n, cplx(0.0));
  for (int k = 1; k <= kmax; ++k) {
    cplx c(un(rng), un(rng));
    s[k] = 2.0 * g.L * c;
    s[g.n - k] = std::conj(s[k]);
  }
  return Field::from_spectrum(g, std::move(s));
}

}  // namespace

TEST_CASE("product splits exactly into two paraproducts and the remainder", "[paraproduct]") {
  Grid g(512, 8.0 * M_PI);
  std::mt19937_64 rng(42);
  ParaproductSpec ps;
  for (int trial = 0; trial < 4; ++trial) {
    Field a = random_band(g, rng, g.n / 6);
    Field u = random_band(g, rng, g.n / 6);
    Field sum = paraproduct(a, u, ps) + paraproduct(u, a, ps) + balanced_remainder(a, u, ps);
    Field prod = product_pointwise(a, u);
    REQUIRE((sum - prod).norm_l2() < 1e-12 * prod.norm_l2());
  }
}

TEST_CASE("paraproduct is self-adjoint in the rough slot", "[paraproduct]") {
  Grid g(512, 8.0 * M_PI);
  std::mt19937_64 rng(4242);
  ParaproductSpec ps;
  for (int trial = 0; trial < 5; ++trial) {
    Field a = random_band(g, rng, g.n / 6);
    Field u = random_band(g, rng, g.n / 6);
    Field w = random_band(g, rng, g.n / 6);
    cplx lhs = inner_product(paraproduct(a, u, ps), w);
    cplx rhs = inner_product(u, paraproduct(a, w, ps));
    double scale = paraproduct(a, u, ps).norm_l2() * w.norm_l2() + 1e-30;
    REQUIRE(std::abs(lhs - rhs) < 1e-12 * scale);
  }
}

TEST_CASE("constant symbol collapses to the high-frequency projection", "[paraproduct]") {
  Grid g(256, 8.0 * M_PI);
  std::mt19937_64 rng(7);
  ParaproductSpec ps;
  Field u = random_band(g, rng, g.n / 6);
  Field c = Field::sample(g, [](double) { return 3.25; });
  Field t = paraproduct(c, u, ps);
  Field want = 3.25 * highpass(u, ps.M, ps.sharp_projection);
  REQUIRE((t - want).norm_l2() < 1e-12 * want.norm_l2());
}

TEST_CASE("paraproduct is homogeneous in the symbol", "[paraproduct]") {
  Grid g(256, 8.0 * M_PI);
  std::mt19937_64 rng(9);
  ParaproductSpec ps;
  Field a = random_band(g, rng, 20);
  Field u = random_band(g, rng, 40);
  Field t1 = paraproduct(a, u, ps);
  Field a2 = a;
  a2 *= 2.0;
  Field t2 = paraproduct(a2, u, ps);
  REQUIRE((t2 - 2.0 * t1).norm_l2() < 1e-12 * t2.norm_l2());
}

TEST_CASE("paraproduct output lives above the projection scale", "[paraproduct]") {
  Grid g(256, 8.0 * M_PI);
  std::mt19937_64 rng(13);
  ParaproductSpec ps;
  Field a = random_band(g, rng, 30);
  Field u = random_band(g, rng, 30);
  Field t = paraproduct(a, u, ps);
  for (int i = 0; i < g.n; ++i) {
    if (std::fabs(g.xi(i)) <= ps.M) REQUIRE(std::abs(t.spectrum()[i]) == 0.0);
  }
}

TEST_CASE("smooth projection variant keeps the exact identities", "[paraproduct]") {
  Grid g(256, 8.0 * M_PI);
  std::mt19937_64 rng(21);
  ParaproductSpec ps;
  ps.sharp_projection = false;
  Field a = random_band(g, rng, g.n / 6);
  Field u = random_band(g, rng, g.n / 6);
  Field w = random_band(g, rng, g.n / 6);
  Field sum = paraproduct(a, u, ps) + paraproduct(u, a, ps) + balanced_remainder(a, u, ps);
  Field prod = product_pointwise(a, u);
  REQUIRE((sum - prod).norm_l2() < 1e-12 * prod.norm_l2());
  cplx lhs = inner_product(paraproduct(a, u, ps), w);
  cplx rhs = inner_product(u, paraproduct(a, w, ps));
  REQUIRE(std::abs(lhs - rhs) < 1e-12 * (std::abs(lhs) + w.norm_l2() * u.norm_l2()));
}

TEST_CASE("balanced remainder is symmetric", "[paraproduct]") {
  Grid g(256, 8.0 * M_PI);
  std::mt19937_64 rng(33);
  ParaproductSpec ps;
  Field a = random_band(g, rng, 30);
  Field u = random_band(g, rng, 30);
  Field r1 = balanced_remainder(a, u, ps);
  Field r2 = balanced_remainder(u, a, ps);
  REQUIRE((r1 - r2).norm_l2() < 1e-13 * (r1.norm_l2() + 1e-30));
}
