#include <cmath>

#include "doctest.h"
#include "sysorder/orders.hpp"

using namespace sysorder;

namespace {

LifetimeLaw exp_law(double rate) {
  return make_law(LSDistribution(BaselineDistribution::exponential(), 0.0, 1.0 / rate));
}

}  // namespace

TEST_CASE("order verdicts between exponentials") {
  const LifetimeLaw a = exp_law(2.0), b = exp_law(1.0);
  const auto grid = make_order_grid(a, b, 512);
  CHECK(order_verdict(a, b, OrderRelation::ST, grid).status == CheckStatus::Holds);
  CHECK(order_verdict(a, b, OrderRelation::HR, grid).status == CheckStatus::Holds);
  CHECK(order_verdict(a, b, OrderRelation::RH, grid).status == CheckStatus::Holds);
  CHECK(order_verdict(a, b, OrderRelation::LR, grid).status == CheckStatus::Holds);
  // Constant hazard ratio: ageing-faster holds with equality.
  CHECK(order_verdict(a, b, OrderRelation::RHR, grid).status ==
        CheckStatus::HoldsWithEquality);
}

TEST_CASE("identical laws give equality everywhere") {
  const LifetimeLaw a = exp_law(1.3);
  const auto grid = make_order_grid(a, a, 256);
  for (auto rel : {OrderRelation::ST, OrderRelation::HR, OrderRelation::RH,
                   OrderRelation::LR, OrderRelation::RHR})
    CHECK(order_verdict(a, a, rel, grid).status == CheckStatus::HoldsWithEquality);
}

TEST_CASE("ageing faster example") {
  const auto a = make_law(LSDistribution(BaselineDistribution::weibull(2.0), 0.0, 1.0));
  const auto b = make_law(LSDistribution(BaselineDistribution::exponential(), 0.0, 1.0));
  const auto grid = make_order_grid(a, b, 512);
  // Hazard ratio 2u is increasing: a ages faster.
  CHECK(order_verdict(a, b, OrderRelation::RHR, grid).status == CheckStatus::Holds);
}

TEST_CASE("antisymmetry of strict stochastic dominance") {
  const LifetimeLaw a = exp_law(2.0), b = exp_law(1.0);
  const auto grid = make_order_grid(a, b, 512);
  const auto fwd = order_verdict(a, b, OrderRelation::ST, grid);
  REQUIRE(fwd.holds());
  double max_gap = 0.0;
  for (double t : grid.points)
    max_gap = std::max(max_gap, std::fabs(a.sf(t) - b.sf(t)));
  REQUIRE(max_gap > 10.0 * fwd.tolerance);
  CHECK(order_verdict(b, a, OrderRelation::ST, grid).status == CheckStatus::Fails);
}

TEST_CASE("grid refinement stability") {
  const auto a = make_law(LSDistribution(BaselineDistribution::weibull(1.5), 0.0, 1.0));
  const auto b = make_law(LSDistribution(BaselineDistribution::weibull(1.5), 0.0, 1.4));
  for (auto rel : {OrderRelation::ST, OrderRelation::HR, OrderRelation::LR}) {
    const auto coarse = order_verdict(a, b, rel, make_order_grid(a, b, 256));
    const auto fine = order_verdict(a, b, rel, make_order_grid(a, b, 1024));
    REQUIRE(coarse.holds());
    CHECK(fine.holds());
  }
}

TEST_CASE("log-space ratio evaluation agrees with direct ratios") {
  const LifetimeLaw a = exp_law(1.8), b = exp_law(0.9);
  const auto grid = make_order_grid(a, b, 256);
  const auto verdict = order_verdict(a, b, OrderRelation::HR, grid);
  // Direct-ratio oracle on the same grid.
  bool monotone = true;
  double prev = -1.0;
  for (double t : grid.points) {
    const double sa = a.sf(t), sb = b.sf(t);
    if (sa < 1e-100 || sb < 1e-100) continue;
    const double ratio = sb / sa;
    if (prev > 0.0 && ratio < prev * (1.0 - 1e-8)) monotone = false;
    prev = ratio;
  }
  CHECK(verdict.holds() == monotone);
}

TEST_CASE("chain checker on likelihood-ratio ordered pairs") {
  Rng rng(77);
  std::size_t violations = 0, lr_hits = 0;
  for (int i = 0; i < 60; ++i) {
    const int fam = static_cast<int>(rng.index(3));
    LSDistribution x(BaselineDistribution::exponential(), 0, 1),
        y(BaselineDistribution::exponential(), 0, 1);
    const double lam = rng.uniform(0.0, 0.6);
    const double s1 = rng.uniform(0.5, 1.2), s2 = s1 + rng.uniform(0.05, 1.0);
    if (fam == 0) {
      x = LSDistribution(BaselineDistribution::exponential(), lam, s1);
      y = LSDistribution(BaselineDistribution::exponential(), lam, s2);
    } else if (fam == 1) {
      const double alpha = rng.uniform(0.7, 2.5);
      x = LSDistribution(BaselineDistribution::weibull(alpha), lam, s1);
      y = LSDistribution(BaselineDistribution::weibull(alpha), lam, s2);
    } else {
      const double gamma = rng.uniform(1.0, 2.5);
      x = LSDistribution(BaselineDistribution::pareto(gamma), lam, s1);
      y = LSDistribution(BaselineDistribution::pareto(gamma), lam, s2);
    }
    const auto lx = make_law(x), ly = make_law(y);
    const auto rep = order_chain_check(lx, ly, make_order_grid(lx, ly, 512));
    if (rep.verdicts.at(OrderRelation::LR).holds()) {
      ++lr_hits;
      violations += rep.violations.size();
    }
  }
  REQUIRE(lr_hits >= 50);
  CHECK(violations == 0);
}

TEST_CASE("missing evaluators are reported") {
  SystemSpec dep({LSDistribution(BaselineDistribution::exponential(), 0, 1),
                  LSDistribution(BaselineDistribution::exponential(), 0, 2)},
                 ArchimedeanGenerator::clayton(1.0), Structure::Series);
  const auto law = make_law(dep);
  CHECK(!law.pdf);
  const auto other = exp_law(1.0);
  const auto grid = make_order_grid(other, other, 64);
  CHECK_THROWS_AS(order_verdict(law, other, OrderRelation::LR, grid), MissingEvaluator);
  CHECK_THROWS_AS(order_verdict(law, other, OrderRelation::RHR, grid), MissingEvaluator);
}
