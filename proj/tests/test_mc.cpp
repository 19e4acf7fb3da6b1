#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "sysorder/mc.hpp"
#include "sysorder/orders.hpp"

using namespace sysorder;

namespace {

LSDistribution expo(double loc, double scale) {
  return LSDistribution(BaselineDistribution::exponential(), loc, scale);
}

}  // namespace

TEST_CASE("minimum of independent exponentials") {
  SystemSpec spec({expo(0, 1), expo(0, 0.5)}, std::nullopt, Structure::Series);
  const auto sim = simulate_system(spec, 20000, 12);
  REQUIRE(sim.count == 20000);
  double mean = 0;
  for (double t : sim.lifetimes) mean += t;
  mean /= 20000.0;
  // Min ~ Exp(3): mean 1/3, se = (1/3)/sqrt(n).
  CHECK(std::fabs(mean - 1.0 / 3.0) <= 3.0 * (1.0 / 3.0) / std::sqrt(20000.0));
}

TEST_CASE("single component matches its own law") {
  SystemSpec spec({LSDistribution(BaselineDistribution::weibull(1.7), 0.4, 1.2)},
                  std::nullopt, Structure::Series);
  const auto sim = simulate_system(spec, 20000, 5);
  CHECK(ks_compare(sim, spec).pass);
}

TEST_CASE("single draw lands in the support") {
  SystemSpec spec({expo(1.0, 2.0), expo(0.5, 1.0)}, std::nullopt, Structure::Series);
  const auto sim = simulate_system(spec, 1, 3);
  REQUIRE(sim.lifetimes.size() == 1);
  CHECK(sim.lifetimes[0] > 0.5);
}

TEST_CASE("dependent samples agree with the analytic law") {
  SystemSpec clay({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::clayton(1.0),
                  Structure::Series);
  const auto sim = simulate_system(clay, 20000, 8);
  const auto ks = ks_compare(sim, clay);
  CHECK(ks.pass);

  // Power check: an analytic law wrong by a factor of two must fail.
  const auto wrong = ks_compare(
      sim, [&clay](double t) { return system_cdf(clay, 2.0 * t); }, 0.01);
  CHECK(!wrong.pass);

  // Trivial self-comparison: the empirical cdf of the sample itself.
  std::vector<double> sorted(sim.lifetimes);
  std::sort(sorted.begin(), sorted.end());
  const auto self = ks_compare(
      sim,
      [&sorted](double t) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), t);
        return static_cast<double>(it - sorted.begin()) / sorted.size();
      },
      0.01);
  CHECK(self.statistic <= 1.0 / sorted.size() + 1e-12);
  CHECK(self.pass);
}

TEST_CASE("parallel systems couple through the distributional copula") {
  SystemSpec par({expo(0.2, 1.0), LSDistribution(BaselineDistribution::weibull(1.4),
                                                 0.0, 1.5)},
                 ArchimedeanGenerator::gumbel(2.0), Structure::Parallel);
  const auto sim = simulate_system(par, 20000, 21);
  CHECK(ks_compare(sim, par).pass);
}

TEST_CASE("unsupported frailty families are reported") {
  SystemSpec frank({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::frank(2.0),
                   Structure::Series);
  CHECK_THROWS_AS(simulate_system(frank, 100, 1), UnsupportedFamily);
}

TEST_CASE("empirical curves respect a strict stochastic order") {
  const LSDistribution x = expo(0, 0.5), y = expo(0, 1.0);
  SystemSpec sx({x, x}, std::nullopt, Structure::Series);
  SystemSpec sy({y, y}, std::nullopt, Structure::Series);
  const auto lx = make_law(sx), ly = make_law(sy);
  REQUIRE(order_verdict(lx, ly, OrderRelation::ST, make_order_grid(lx, ly, 256)).holds());

  const std::size_t n = 20000;
  auto simx = simulate_system(sx, n, 31);
  auto simy = simulate_system(sy, n, 32);
  std::sort(simx.lifetimes.begin(), simx.lifetimes.end());
  std::sort(simy.lifetimes.begin(), simy.lifetimes.end());
  auto ecdf = [n](const std::vector<double>& v, double t) {
    const auto it = std::upper_bound(v.begin(), v.end(), t);
    return static_cast<double>(it - v.begin()) / static_cast<double>(n);
  };
  for (int d = 1; d <= 9; ++d) {
    const double t = system_quantile(sy, d / 10.0);
    const double fx = ecdf(simx.lifetimes, t), fy = ecdf(simy.lifetimes, t);
    const double se = std::sqrt(0.25 / static_cast<double>(n));
    // sf_x <= sf_y means cdf_x >= cdf_y, up to 3 binomial standard errors.
    CHECK(fx >= fy - 3.0 * se * 2.0);
  }
}

TEST_CASE("determinism and count validation") {
  SystemSpec spec({expo(0, 1), expo(0, 2)}, ArchimedeanGenerator::clayton(2.0),
                  Structure::Series);
  const auto a = simulate_system(spec, 500, 77);
  const auto b = simulate_system(spec, 500, 77);
  CHECK(a.lifetimes == b.lifetimes);
  CHECK_THROWS_AS(simulate_system(spec, 0, 1), DomainError);
  CHECK_THROWS_AS(ks_compare(simulate_system(spec, 99, 1), spec), DomainError);
}
