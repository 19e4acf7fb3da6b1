#ifndef SYSORDER_CALCULUS_HPP
#define SYSORDER_CALCULUS_HPP

#include <functional>
#include <limits>

#include "sysorder/baselines.hpp"
#include "sysorder/common.hpp"
#include "sysorder/grid.hpp"

namespace sysorder {

/// Carrier for the scalar shape checks: an evaluator plus its open domain.
struct ScalarFunction {
  std::function<double(double)> eval;
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
};

enum class Direction { Increasing, Decreasing };
enum class SignConstraint { NonNegative, NonPositive };
enum class LogShape { LogConcave, LogConvex };

/// "2-log-convex/concave" has no standard definition; both plausible
/// readings are implemented and every verdict built on them is flagged.
enum class TwoLogInterpretation {
  SecondLogDerivativeMonotone,  // default: (log f)'' nondecreasing (convex case)
  SecondLogDerivativeSign,      // literal:  (log f)'' >= 0 (convex case)
};

/// Central-difference derivative of order 1..3. The step is proportional to
/// max(|u|,1), shrunk when the domain margin would be crossed.
double numeric_derivative(const ScalarFunction& f, double u, int order,
                          double* step_used = nullptr);

/// Extra violation allowance for checks built on differentiated values.
struct NoiseFloor {
  double rel = 0.0;
  double abs = 0.0;
};

CheckVerdict monotone_verdict(const ScalarFunction& f, Direction dir,
                              const EvaluationGrid& grid, NoiseFloor noise = {});

CheckVerdict r_shape_verdict(const ScalarFunction& f, int order, SignConstraint sign,
                             const EvaluationGrid& grid);

CheckVerdict log_shape_verdict(const ScalarFunction& f, LogShape shape,
                               const EvaluationGrid& grid);

/// Composite hypothesis conditions on a baseline's hazard r (or reversed
/// hazard), as they appear in the theorem statements.
enum class CompositeCondition {
  HazardDecreasing,
  HazardIncreasing,
  URDecreasing,        // u * r(u) decreasing
  URIncreasing,
  URConcave,
  URConvex,
  U2RDecreasing,       // u^2 * r(u) decreasing
  UDURDecreasing,      // u * d/du(u * r(u)) decreasing
  UDURIncreasing,
  U2RPrimeDecreasing,  // u^2 * r'(u) decreasing
  U2RPrimeIncreasing,
  U3RSecondIncreasing, // u^3 * r''(u) increasing
  U3RSecondDecreasing,
  HazardLogConcave,
  TwoLogConvex,
  TwoLogConcave,
  ReversedHazardDecreasing,
  HazardConcave,       // r'' <= 0
  HazardConvex,        // r'' >= 0
  RConcaveOrder1,      // r-concave of Definition 3, r = 1,2,3
  RConcaveOrder2,
  RConcaveOrder3,
};

const char* to_string(CompositeCondition c);

/// 512 log-spaced points over the central [q(0.001), q(0.999)] window,
/// clipped so finite-difference stencils stay interior to the support.
EvaluationGrid default_shape_grid(const BaselineDistribution& b, std::size_t count = 512);

CheckVerdict composite_condition(
    const BaselineDistribution& b, CompositeCondition cond, const EvaluationGrid& grid,
    TwoLogInterpretation interp = TwoLogInterpretation::SecondLogDerivativeMonotone);

CheckVerdict composite_condition(
    const BaselineDistribution& b, CompositeCondition cond,
    TwoLogInterpretation interp = TwoLogInterpretation::SecondLogDerivativeMonotone);

}  // namespace sysorder

#endif
