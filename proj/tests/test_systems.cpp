#include <cmath>

#include "doctest.h"
#include "sysorder/systems.hpp"

using namespace sysorder;

namespace {

LSDistribution expo(double loc, double scale) {
  return LSDistribution(BaselineDistribution::exponential(), loc, scale);
}

}  // namespace

TEST_CASE("series survival closed forms") {
  SystemSpec ind({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::independence(),
                 Structure::Series);
  CHECK(series_sf(ind, std::log(2.0)) == doctest::Approx(0.25).epsilon(1e-12));

  SystemSpec clay({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::clayton(1.0),
                  Structure::Series);
  // phi(e^-t) = e^t - 1; at t = ln 2 the sum is 2 and psi(2) = 1/3.
  CHECK(std::fabs(series_sf(clay, std::log(2.0)) - 1.0 / 3.0) <= 1e-12);

  SystemSpec single({LSDistribution(BaselineDistribution::weibull(1.7), 0.3, 2.0)},
                    ArchimedeanGenerator::gumbel(2.0), Structure::Series);
  for (double t : {0.5, 1.0, 2.5, 7.0})
    CHECK(series_sf(single, t) ==
          doctest::Approx(single.components[0].sf(t)).epsilon(1e-12));
  CHECK_THROWS_AS(parallel_cdf(single, 1.0), DomainError);
}

TEST_CASE("parallel distribution closed forms") {
  SystemSpec ind({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::independence(),
                 Structure::Parallel);
  CHECK(parallel_cdf(ind, std::log(2.0)) == doctest::Approx(0.25).epsilon(1e-12));

  SystemSpec clay({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::clayton(1.0),
                  Structure::Parallel);
  CHECK(std::fabs(parallel_cdf(clay, std::log(2.0)) - 1.0 / 3.0) <= 1e-12);

  SystemSpec shifted({expo(1.0, 1), expo(2.0, 1)}, ArchimedeanGenerator::gumbel(1.5),
                     Structure::Parallel);
  CHECK(parallel_cdf(shifted, 0.5) == 0.0);
}

TEST_CASE("independent series hazard") {
  SystemSpec two_exp({expo(0, 0.5), expo(0, 1.0 / 3.0)}, std::nullopt, Structure::Series);
  for (double t : {0.2, 1.0, 3.0})
    CHECK(series_hazard_independent(two_exp, t) == doctest::Approx(5.0).epsilon(1e-13));

  SystemSpec single({LSDistribution(BaselineDistribution::weibull(2.0), 0.0, 1.0)},
                    std::nullopt, Structure::Series);
  CHECK(series_hazard_independent(single, 1.5) == doctest::Approx(3.0).epsilon(1e-12));

  SystemSpec twin({expo(0.5, 2.0), expo(0.5, 2.0)}, std::nullopt, Structure::Series);
  CHECK(series_hazard_independent(twin, 2.0) ==
        doctest::Approx(2.0 * twin.components[0].hazard(2.0)).epsilon(1e-13));

  CHECK_THROWS_AS(series_hazard_independent(twin, 0.5), DomainError);

  // Matches the finite-difference log-derivative of the product survival.
  SystemSpec mixed({LSDistribution(BaselineDistribution::weibull(1.6), 0.2, 1.3),
                    expo(0.1, 0.8)},
                   std::nullopt, Structure::Series);
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const double h = 1e-6 * t;
    const double fd =
        -(std::log(series_sf(mixed, t + h)) - std::log(series_sf(mixed, t - h))) /
        (2.0 * h);
    const double hz = series_hazard_independent(mixed, t);
    CHECK(std::fabs(fd - hz) / hz <= 1e-5);
  }
}

TEST_CASE("system quantile") {
  SystemSpec two_exp({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::independence(),
                     Structure::Series);
  CHECK(system_quantile(two_exp, 0.75) == doctest::Approx(std::log(2.0)).epsilon(1e-8));

  SystemSpec clay({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::clayton(1.0),
                  Structure::Series);
  CHECK(system_quantile(clay, 2.0 / 3.0) == doctest::Approx(std::log(2.0)).epsilon(1e-8));

  SystemSpec single({LSDistribution(BaselineDistribution::gompertz(0.9), 0.4, 1.1)},
                    std::nullopt, Structure::Series);
  for (double p : {0.01, 0.4, 0.99})
    CHECK(system_quantile(single, p) ==
          doctest::Approx(single.components[0].quantile(p)).epsilon(1e-8));

  for (double p : {0.05, 0.5, 0.95}) {
    const double t = system_quantile(clay, p);
    CHECK(std::fabs(system_cdf(clay, t) - p) <= 1e-8);
  }
  CHECK_THROWS_AS(system_quantile(clay, 0.0), DomainError);
}

TEST_CASE("multiple outlier expansion") {
  const MultipleOutlierSpec m{2, 1, 1.0, 0.5, 0.8, 2.0,
                              BaselineDistribution::weibull(1.5)};
  const SystemSpec s = expand_outlier(m);
  REQUIRE(s.size() == 3);
  CHECK(s.independent());
  CHECK(s.components[0].location() == s.components[1].location());
  CHECK(s.components[0].scale() == s.components[1].scale());
  CHECK(s.components[2].scale() == 2.0);

  const MultipleOutlierSpec pair{1, 1, 1.0, 0.5, 0.8, 2.0,
                                 BaselineDistribution::weibull(1.5)};
  CHECK(expand_outlier(pair).size() == 2);

  // Block symmetry of the hazard sum.
  const LSDistribution c1(m.baseline, m.lambda1, m.sigma1);
  const LSDistribution c2(m.baseline, m.lambda2, m.sigma2);
  for (double t : {1.5, 2.5, 6.0})
    CHECK(series_hazard_independent(s, t) ==
          doctest::Approx(2.0 * c1.hazard(t) + 1.0 * c2.hazard(t)).epsilon(1e-13));

  CHECK_THROWS_AS(expand_outlier(MultipleOutlierSpec{0, 1, 1, 1, 1, 1,
                                                     BaselineDistribution::exponential()}),
                  DomainError);
}

TEST_CASE("independence generator equals independent products") {
  Rng rng(21);
  for (int k = 0; k < 10; ++k) {
    std::vector<LSDistribution> comps;
    const std::size_t n = 2 + rng.index(3);
    for (std::size_t i = 0; i < n; ++i) {
      const double alpha = rng.uniform(0.6, 2.5);
      comps.emplace_back(BaselineDistribution::weibull(alpha), rng.uniform(0.0, 1.0),
                         rng.uniform(0.4, 2.0));
    }
    for (Structure st : {Structure::Series, Structure::Parallel}) {
      SystemSpec dep(comps, ArchimedeanGenerator::independence(), st);
      SystemSpec ind(comps, std::nullopt, st);
      for (int i = 0; i < 256; ++i) {
        const double p = 0.002 + 0.996 * i / 255.0;
        const double t = system_quantile(ind, p);
        CHECK(std::fabs(system_sf(dep, t) - system_sf(ind, t)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("monotonicity and envelope bounds") {
  SystemSpec spec({expo(0.3, 1.2), expo(0.1, 0.7),
                   LSDistribution(BaselineDistribution::weibull(1.4), 0.2, 1.0)},
                  ArchimedeanGenerator::gumbel(1.8), Structure::Series);
  double prev = 1.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = 0.05 + i * 0.02;
    const double sf = series_sf(spec, t);
    CHECK(sf <= prev + 1e-14);
    prev = sf;
    double mn = 1.0;
    for (const auto& c : spec.components) mn = std::min(mn, c.sf(t));
    CHECK(sf <= mn + 1e-12);
    const double nphi = std::min(3.0 * spec.copula->phi(mn), spec.copula->cap());
    CHECK(sf >= spec.copula->psi(nphi) - 1e-12);
  }

  SystemSpec par({expo(0.3, 1.2), expo(0.1, 0.7)}, ArchimedeanGenerator::clayton(1.0),
                 Structure::Parallel);
  prev = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = 0.05 + i * 0.02;
    const double c = parallel_cdf(par, t);
    CHECK(c >= prev - 1e-14);
    prev = c;
  }
}

TEST_CASE("dimension guard") {
  const auto neg = ArchimedeanGenerator::clayton(-0.2);
  std::vector<LSDistribution> comps(7, expo(0, 1));
  CHECK_THROWS_AS(SystemSpec(comps, neg, Structure::Series), DimensionError);
}
