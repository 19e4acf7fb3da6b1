#include <cmath>

#include "doctest.h"
#include "sysorder/calculus.hpp"
#include "sysorder/copulas.hpp"

using namespace sysorder;

namespace {

ScalarFunction fn(std::function<double(double)> f, double lo = 0.0,
                  double hi = std::numeric_limits<double>::infinity()) {
  return ScalarFunction{std::move(f), lo, hi};
}

}  // namespace

TEST_CASE("central differences") {
  CHECK(std::fabs(numeric_derivative(fn([](double u) { return std::exp(u); }), 0.5, 1) -
                  std::exp(0.5)) <= 1e-7);
  CHECK(std::fabs(numeric_derivative(fn([](double u) { return u * u; }), 3.0, 2) - 2.0) <=
        1e-5);
  CHECK(std::fabs(numeric_derivative(fn([](double u) { return u * u * u; }), 2.0, 3) -
                  6.0) <= 1e-3);
  CHECK_THROWS_AS(numeric_derivative(fn([](double u) { return u; }, 0.0, 1.0), 1.5, 1),
                  DomainError);
  CHECK_THROWS_AS(numeric_derivative(fn([](double u) { return u; }), 1.0, 4),
                  DomainError);
}

TEST_CASE("polynomial accuracy suite") {
  // Degree <= 4 polynomials; orders 1..3 within 1e-6 / 1e-4 / 1e-2.
  const double c[5] = {0.3, -1.2, 0.7, 0.4, -0.15};
  auto poly = [&](double u) {
    return c[0] + u * (c[1] + u * (c[2] + u * (c[3] + u * c[4])));
  };
  auto d1 = [&](double u) { return c[1] + u * (2 * c[2] + u * (3 * c[3] + u * 4 * c[4])); };
  auto d2 = [&](double u) { return 2 * c[2] + u * (6 * c[3] + u * 12 * c[4]); };
  auto d3 = [&](double u) { return 6 * c[3] + 24 * c[4] * u; };
  const double tol[4] = {0, 1e-6, 1e-4, 1e-2};
  for (double u : {0.5, 1.0, 2.0, 3.5}) {
    CHECK(std::fabs(numeric_derivative(fn(poly), u, 1) - d1(u)) <= tol[1]);
    CHECK(std::fabs(numeric_derivative(fn(poly), u, 2) - d2(u)) <= tol[2]);
    CHECK(std::fabs(numeric_derivative(fn(poly), u, 3) - d3(u)) <= tol[3]);
  }
}

TEST_CASE("monotone verdicts") {
  const auto grid = EvaluationGrid::log_spaced(0.01, 0.99, 128);
  CHECK(monotone_verdict(fn([](double u) { return u; }), Direction::Increasing, grid)
            .status == CheckStatus::Holds);
  CHECK(monotone_verdict(fn([](double) { return 1.0; }), Direction::Decreasing, grid)
            .status == CheckStatus::HoldsWithEquality);
  const auto w = BaselineDistribution::weibull(0.5);
  CHECK(monotone_verdict(fn([w](double u) { return w.hazard(u); }),
                         Direction::Decreasing, default_shape_grid(w, 256))
            .holds());
  const auto fail = monotone_verdict(fn([](double u) { return u; }),
                                     Direction::Decreasing, grid);
  CHECK(fail.status == CheckStatus::Fails);
  CHECK(!fail.witnesses.empty());
}

TEST_CASE("derivative sign verdicts") {
  const auto grid = EvaluationGrid::log_spaced(0.5, 4.0, 64);
  CHECK(r_shape_verdict(fn([](double u) { return u * u; }), 2,
                        SignConstraint::NonNegative, grid)
            .status == CheckStatus::Holds);
  const auto w = BaselineDistribution::weibull(0.5);
  auto hz = fn([w](double u) { return w.hazard(u); });
  const auto g = default_shape_grid(w, 128);
  CHECK(r_shape_verdict(hz, 1, SignConstraint::NonPositive, g).holds());
  // r'''(u) = -0.9375 u^-3.5 for the alpha = 1/2 Weibull hazard.
  CHECK(r_shape_verdict(hz, 3, SignConstraint::NonPositive, g).holds());
  CHECK(r_shape_verdict(hz, 1, SignConstraint::NonNegative, g).status ==
        CheckStatus::Fails);
}

TEST_CASE("log shape verdicts") {
  auto psi_fn = [](const ArchimedeanGenerator& g) {
    return fn([g](double t) { return g.psi(t); }, 0.0, g.cap());
  };
  const auto grid = EvaluationGrid::log_spaced(0.05, 5.0, 64);
  const auto ind = ArchimedeanGenerator::independence();
  CHECK(log_shape_verdict(psi_fn(ind), LogShape::LogConcave, grid).status ==
        CheckStatus::HoldsWithEquality);
  CHECK(log_shape_verdict(psi_fn(ind), LogShape::LogConvex, grid).status ==
        CheckStatus::HoldsWithEquality);
  CHECK(log_shape_verdict(psi_fn(ArchimedeanGenerator::clayton(1.0)),
                          LogShape::LogConvex, grid)
            .status == CheckStatus::Holds);
  CHECK(log_shape_verdict(psi_fn(ArchimedeanGenerator::gumbel(2.0)),
                          LogShape::LogConvex, grid)
            .status == CheckStatus::Holds);
  CHECK_THROWS_AS(log_shape_verdict(fn([](double u) { return u - 1.0; }),
                                    LogShape::LogConcave, grid),
                  PositivityError);
}

TEST_CASE("composite conditions") {
  const auto expo = BaselineDistribution::exponential();
  CHECK(composite_condition(expo, CompositeCondition::URIncreasing).holds());
  const auto w05 = BaselineDistribution::weibull(0.5);
  CHECK(composite_condition(w05, CompositeCondition::URConcave).holds());
  const auto w2 = BaselineDistribution::weibull(2.0);
  CHECK(composite_condition(w2, CompositeCondition::U2RPrimeDecreasing).status ==
        CheckStatus::Fails);
  // Boundary members go through the equality branch.
  CHECK(composite_condition(expo, CompositeCondition::U2RPrimeDecreasing).status ==
        CheckStatus::HoldsWithEquality);
  // Pareto: u r(u) is constant, so both directions hold.
  const auto par = BaselineDistribution::pareto(1.5);
  CHECK(composite_condition(par, CompositeCondition::URDecreasing).holds());
  CHECK(composite_condition(par, CompositeCondition::URIncreasing).holds());
}

TEST_CASE("two-log interpretations") {
  // DecayHazard has (log r)'' = 0 on the grid: both readings accept it.
  const auto dh = BaselineDistribution::decay_hazard(12.0, 1.1);
  for (auto interp : {TwoLogInterpretation::SecondLogDerivativeMonotone,
                      TwoLogInterpretation::SecondLogDerivativeSign}) {
    CHECK(composite_condition(dh, CompositeCondition::TwoLogConvex,
                              default_shape_grid(dh, 256), interp)
              .holds());
    CHECK(composite_condition(dh, CompositeCondition::TwoLogConcave,
                              default_shape_grid(dh, 256), interp)
              .holds());
  }
  // Pareto: (log r)'' = u^-2, strictly positive and strictly decreasing, so
  // the two readings of "2-log-convex" disagree.
  const auto par = BaselineDistribution::pareto(1.5);
  CHECK(composite_condition(par, CompositeCondition::TwoLogConvex,
                            default_shape_grid(par, 256),
                            TwoLogInterpretation::SecondLogDerivativeSign)
            .holds());
  CHECK(composite_condition(par, CompositeCondition::TwoLogConvex,
                            default_shape_grid(par, 256),
                            TwoLogInterpretation::SecondLogDerivativeMonotone)
            .status == CheckStatus::Fails);
}

TEST_CASE("grid refinement never flips holds to fails") {
  const auto w05 = BaselineDistribution::weibull(0.5);
  const auto w2 = BaselineDistribution::weibull(2.0);
  const auto par = BaselineDistribution::pareto(2.0);
  for (auto [b, cond] : {std::pair{w05, CompositeCondition::URConcave},
                         std::pair{w2, CompositeCondition::URConvex},
                         std::pair{par, CompositeCondition::URDecreasing},
                         std::pair{w05, CompositeCondition::HazardDecreasing}}) {
    const auto coarse = composite_condition(b, cond, default_shape_grid(b, 256));
    const auto fine = composite_condition(b, cond, default_shape_grid(b, 1024));
    REQUIRE(coarse.holds());
    CHECK(fine.holds());
  }
}
