#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "sysorder/copulas.hpp"

using namespace sysorder;

namespace {

std::vector<ArchimedeanGenerator> generator_pool() {
  return {ArchimedeanGenerator::independence(), ArchimedeanGenerator::clayton(0.5),
          ArchimedeanGenerator::clayton(1.0),   ArchimedeanGenerator::clayton(2.0),
          ArchimedeanGenerator::clayton(-0.15), ArchimedeanGenerator::gumbel(1.5),
          ArchimedeanGenerator::gumbel(2.0),    ArchimedeanGenerator::gumbel(3.0),
          ArchimedeanGenerator::frank(1.0),     ArchimedeanGenerator::frank(4.0)};
}

double kendall_tau(const std::vector<double>& m, std::size_t count) {
  long long conc = 0, disc = 0;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const double d = (m[2 * i] - m[2 * j]) * (m[2 * i + 1] - m[2 * j + 1]);
      (d > 0 ? conc : disc) += 1;
    }
  return static_cast<double>(conc - disc) /
         (0.5 * static_cast<double>(count) * static_cast<double>(count - 1));
}

}  // namespace

TEST_CASE("generator evaluations") {
  CHECK(psi_eval(ArchimedeanGenerator::clayton(1.0), 1.0) == doctest::Approx(0.5));
  CHECK(psi_eval(ArchimedeanGenerator::gumbel(2.0), 4.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  for (const auto& g : generator_pool()) {
    CHECK(g.psi(0.0) == 1.0);
    CHECK(g.psi(g.cap()) < 1e-12);
    CHECK(g.psi(std::numeric_limits<double>::infinity()) == 0.0);
  }
  CHECK_THROWS_AS(psi_eval(ArchimedeanGenerator::independence(), -0.5), DomainError);
}

TEST_CASE("inverse evaluations and roundtrip") {
  CHECK(phi_eval(ArchimedeanGenerator::clayton(1.0), 0.25) == doctest::Approx(3.0));
  CHECK(phi_eval(ArchimedeanGenerator::independence(), std::exp(-2.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  for (const auto& g : generator_pool()) {
    CHECK(g.phi(1.0) == 0.0);
    for (double t : {1e-8, 1e-3, 0.1, 1.0, 3.0, -1.0, -2.0}) {
      if (t == -1.0) t = 0.5 * g.cap();
      if (t == -2.0) t = 0.9 * g.cap();
      if (t > g.cap()) continue;
      const double u = g.psi(t);
      if (u <= 0.0) continue;
      CHECK(std::fabs(g.phi(u) - t) <= 1e-9 * std::max(1.0, t));
    }
  }
  CHECK_THROWS_AS(phi_eval(ArchimedeanGenerator::frank(2.0), 1.5), DomainError);
}

TEST_CASE("copula evaluation") {
  CHECK(copula_eval(ArchimedeanGenerator::independence(), {0.5, 0.4}) ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(copula_eval(ArchimedeanGenerator::clayton(1.0), {0.5, 0.5}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  for (const auto& g : generator_pool())
    CHECK(copula_eval(g, {1.0, 1.0, 1.0}) == 1.0);
  // Negative-theta Clayton carries a real dimension bound.
  const auto neg = ArchimedeanGenerator::clayton(-0.2);
  CHECK(neg.max_dim() == 6);
  CHECK_THROWS_AS(copula_eval(neg, std::vector<double>(7, 0.5)), DimensionError);
}

TEST_CASE("Frechet bounds") {
  Rng rng(3);
  for (const auto& g : generator_pool()) {
    for (int i = 0; i < 2000; ++i) {
      const std::size_t dim = 2 + rng.index(3);
      if (dim > static_cast<std::size_t>(g.max_dim())) continue;
      std::vector<double> u(dim);
      double sum = 0.0, mn = 1.0;
      for (auto& e : u) {
        e = rng.uniform();
        sum += e;
        mn = std::min(mn, e);
      }
      const double c = copula_eval(g, u);
      const double lower = std::max(sum - static_cast<double>(dim) + 1.0, 0.0);
      CHECK(c >= lower - 1e-10);
      CHECK(c <= mn + 1e-10);
    }
  }
}

TEST_CASE("d-monotonicity up to order four") {
  for (const auto& g : generator_pool()) CHECK(check_d_monotone(g, 4).holds());
}

TEST_CASE("super-additivity of phi2 o psi1") {
  const auto c1 = ArchimedeanGenerator::clayton(1.0);
  CHECK(check_superadditive(c1, c1).status == CheckStatus::HoldsWithEquality);
  CHECK(check_superadditive(ArchimedeanGenerator::independence(),
                            ArchimedeanGenerator::gumbel(2.0))
            .status == CheckStatus::Holds);
  const auto bad = check_superadditive(ArchimedeanGenerator::gumbel(2.0),
                                       ArchimedeanGenerator::independence());
  CHECK(bad.status == CheckStatus::Fails);
  CHECK(!bad.witnesses.empty());
}

TEST_CASE("copula dominance") {
  const auto g = ArchimedeanGenerator::gumbel(2.0);
  CHECK(copula_dominance(g, g, 3, 2000, 1).status == CheckStatus::HoldsWithEquality);
  CHECK(copula_dominance(ArchimedeanGenerator::independence(), g, 2, 5000, 2).holds());
  CHECK(copula_dominance(g, ArchimedeanGenerator::independence(), 2, 5000, 3).status ==
        CheckStatus::Fails);
}

TEST_CASE("super-additivity implies sampled dominance") {
  const auto pool = generator_pool();
  for (const auto& g1 : pool)
    for (const auto& g2 : pool) {
      if (!check_superadditive(g1, g2, {64, 2000, 5}).holds()) continue;
      const std::size_t dim =
          std::min<std::size_t>(3, static_cast<std::size_t>(
                                       std::min(g1.max_dim(), g2.max_dim())));
      CHECK(copula_dominance(g1, g2, dim, 3000, 11).holds());
    }
}

TEST_CASE("frailty sampler") {
  // Single draw stays strictly inside the unit cube.
  const auto one = sample_copula(ArchimedeanGenerator::clayton(2.0), 3, 1, 9);
  REQUIRE(one.size() == 3);
  for (double u : one) CHECK((u > 0.0 && u < 1.0));

  // Margins: KS distance below the 1% critical value at n = 1e4.
  const double crit = 1.628 / std::sqrt(10000.0);
  for (const auto& g :
       {ArchimedeanGenerator::independence(), ArchimedeanGenerator::clayton(2.0),
        ArchimedeanGenerator::gumbel(2.0)}) {
    const auto m = sample_copula(g, 2, 10000, 31);
    for (int col = 0; col < 2; ++col) {
      std::vector<double> v(10000);
      for (std::size_t i = 0; i < 10000; ++i) v[i] = m[2 * i + col];
      std::sort(v.begin(), v.end());
      double d = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        d = std::max(d, std::fabs((i + 1.0) / 10000.0 - v[i]));
        d = std::max(d, std::fabs(v[i] - i / 10000.0));
      }
      CHECK(d < crit);
    }
  }

  // Kendall tau: Clayton theta = 2 has tau = 1/2; independence has tau = 0.
  const std::size_t n = 10000;
  const auto mc = sample_copula(ArchimedeanGenerator::clayton(2.0), 2, n, 17);
  CHECK(std::fabs(kendall_tau(mc, n) - 0.5) <= 0.03);
  const auto mi = sample_copula(ArchimedeanGenerator::independence(), 2, n, 18);
  CHECK(std::fabs(kendall_tau(mi, n)) <= 0.03);

  // Determinism: same seed, same matrix.
  const auto a = sample_copula(ArchimedeanGenerator::gumbel(1.7), 3, 64, 5);
  const auto b = sample_copula(ArchimedeanGenerator::gumbel(1.7), 3, 64, 5);
  CHECK(a == b);

  CHECK_THROWS_AS(sample_copula(ArchimedeanGenerator::frank(2.0), 2, 10, 1),
                  UnsupportedFamily);
  CHECK_THROWS_AS(sample_copula(ArchimedeanGenerator::clayton(-0.1), 2, 10, 1),
                  UnsupportedFamily);
}
