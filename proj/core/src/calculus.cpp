#include "sysorder/calculus.hpp"

#include <cmath>
#include <vector>

namespace sysorder {

namespace {

constexpr double kEps = 2.220446049250313e-16;
// Step factors eps^(1/3), eps^(1/4), eps^(1/5) for orders 1..3.
constexpr double kStepFactor[4] = {0.0, 6.0554544523933395e-6, 1.220703125e-4,
                                   7.4009797409e-4};
// Rounding-noise multipliers for derivative-based sign checks.
constexpr double kNoiseMult = 100.0;

double local_step(const ScalarFunction& f, double u, int order) {
  const double halfwidths = (order == 3) ? 2.0 : 1.0;
  double h = kStepFactor[order] * std::max(std::fabs(u), 1.0);
  const double margin = std::min(u - f.lo, f.hi - u);
  if (!(margin > 0.0)) throw DomainError("numeric_derivative: point outside domain");
  if (halfwidths * h >= margin) h = margin / (halfwidths + 0.5);
  if (!(h > 8.0 * kEps * std::fabs(u)))
    throw DomainError("numeric_derivative: point too close to the domain boundary");
  return h;
}

}  // namespace

double numeric_derivative(const ScalarFunction& f, double u, int order,
                          double* step_used) {
  if (order < 1 || order > 3) throw DomainError("numeric_derivative: order must be 1..3");
  const double h = local_step(f, u, order);
  if (step_used) *step_used = h;
  switch (order) {
    case 1:
      return (f.eval(u + h) - f.eval(u - h)) / (2.0 * h);
    case 2:
      return (f.eval(u + h) - 2.0 * f.eval(u) + f.eval(u - h)) / (h * h);
    default:
      return (f.eval(u + 2.0 * h) - 2.0 * f.eval(u + h) + 2.0 * f.eval(u - h) -
              f.eval(u - 2.0 * h)) /
             (2.0 * h * h * h);
  }
}

CheckVerdict monotone_verdict(const ScalarFunction& f, Direction dir,
                              const EvaluationGrid& grid, NoiseFloor noise) {
  const auto& ts = grid.points;
  std::vector<double> g(ts.size());
  double maxabs = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    g[i] = f.eval(ts[i]);
    maxabs = std::max(maxabs, std::fabs(g[i]));
  }
  VerdictAccumulator acc(1e-8, 1e-12 * std::max(1.0, maxabs));
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double scale = std::max({std::fabs(g[i]), std::fabs(g[i + 1]), 1e-300});
    const double tol = 1e-8 * scale + noise.rel * scale + noise.abs;
    const double band = tol + 10.0 * (noise.rel * scale + noise.abs);
    if (dir == Direction::Increasing)
      acc.observe(ts[i], g[i], g[i + 1], tol, band);
    else
      acc.observe(ts[i], g[i + 1], g[i], tol, band);
  }
  return acc.finish();
}

CheckVerdict r_shape_verdict(const ScalarFunction& f, int order, SignConstraint sign,
                             const EvaluationGrid& grid) {
  std::vector<double> d(grid.size()), nb(grid.size());
  double max_abs_d = 0.0;
  bool all_within_noise = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = grid.points[i];
    double h = 0.0;
    d[i] = numeric_derivative(f, u, order, &h);
    const double fu = std::fabs(f.eval(u));
    nb[i] = kNoiseMult * kEps * std::max(1.0, fu) / std::pow(h, order);
    max_abs_d = std::max(max_abs_d, std::fabs(d[i]));
    if (std::fabs(d[i]) > nb[i]) all_within_noise = false;
  }
  if (all_within_noise) {
    // Derivative indistinguishable from zero everywhere: boundary member.
    CheckVerdict v;
    v.status = CheckStatus::HoldsWithEquality;
    v.tolerance = 1e-8;
    v.slack = 0.0;
    return v;
  }
  VerdictAccumulator acc(1e-8, 1e-12 * std::max(1.0, max_abs_d));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double scale = std::max({std::fabs(d[i]), nb[i], 1e-300});
    const double tol = 1e-8 * scale + nb[i];
    const double band = tol + 10.0 * nb[i];
    if (sign == SignConstraint::NonNegative)
      acc.observe(grid.points[i], 0.0, d[i], tol, band);
    else
      acc.observe(grid.points[i], d[i], 0.0, tol, band);
  }
  return acc.finish();
}

CheckVerdict log_shape_verdict(const ScalarFunction& f, LogShape shape,
                               const EvaluationGrid& grid) {
  for (double u : grid.points)
    if (!(f.eval(u) > 0.0))
      throw PositivityError("log_shape_verdict: function must be positive on the grid");
  ScalarFunction logf{[&f](double u) { return std::log(f.eval(u)); }, f.lo, f.hi};
  return r_shape_verdict(logf, 2,
                         shape == LogShape::LogConvex ? SignConstraint::NonNegative
                                                      : SignConstraint::NonPositive,
                         grid);
}

const char* to_string(CompositeCondition c) {
  switch (c) {
    case CompositeCondition::HazardDecreasing: return "r_decreasing";
    case CompositeCondition::HazardIncreasing: return "r_increasing";
    case CompositeCondition::URDecreasing: return "u_r_decreasing";
    case CompositeCondition::URIncreasing: return "u_r_increasing";
    case CompositeCondition::URConcave: return "u_r_concave";
    case CompositeCondition::URConvex: return "u_r_convex";
    case CompositeCondition::U2RDecreasing: return "u2_r_decreasing";
    case CompositeCondition::UDURDecreasing: return "u_dur_decreasing";
    case CompositeCondition::UDURIncreasing: return "u_dur_increasing";
    case CompositeCondition::U2RPrimeDecreasing: return "u2_rprime_decreasing";
    case CompositeCondition::U2RPrimeIncreasing: return "u2_rprime_increasing";
    case CompositeCondition::U3RSecondIncreasing: return "u3_rsecond_increasing";
    case CompositeCondition::U3RSecondDecreasing: return "u3_rsecond_decreasing";
    case CompositeCondition::HazardLogConcave: return "r_log_concave";
    case CompositeCondition::TwoLogConvex: return "r_2_log_convex";
    case CompositeCondition::TwoLogConcave: return "r_2_log_concave";
    case CompositeCondition::ReversedHazardDecreasing: return "rrev_decreasing";
    case CompositeCondition::HazardConcave: return "r_concave";
    case CompositeCondition::HazardConvex: return "r_convex";
    case CompositeCondition::RConcaveOrder1: return "r_1_concave";
    case CompositeCondition::RConcaveOrder2: return "r_2_concave";
    case CompositeCondition::RConcaveOrder3: return "r_3_concave";
  }
  return "?";
}

EvaluationGrid default_shape_grid(const BaselineDistribution& b, std::size_t count) {
  double lo = b.quantile(0.001);
  const double hi = b.quantile(0.999);
  const double edge = b.support_left();
  if (edge > 0.0) {
    // Keep order-3 stencils (halfwidth 2h, h ~ 7.4e-4 u) inside the support.
    const double clearance = edge * (1.0 + 4.0 * kStepFactor[3]);
    lo = std::max(lo, clearance);
  }
  if (!(hi > lo)) throw DomainError("default_shape_grid: degenerate quantile window");
  return EvaluationGrid::log_spaced(lo, hi, count);
}

CheckVerdict composite_condition(const BaselineDistribution& b, CompositeCondition cond,
                                 const EvaluationGrid& grid,
                                 TwoLogInterpretation interp) {
  const double edge = b.support_left();
  ScalarFunction r{[b](double u) { return b.hazard(u); }, edge,
                   std::numeric_limits<double>::infinity()};
  ScalarFunction ur{[b](double u) { return u * b.hazard(u); }, edge,
                    std::numeric_limits<double>::infinity()};
  ScalarFunction logr{[b](double u) { return std::log(b.hazard(u)); }, edge,
                      std::numeric_limits<double>::infinity()};

  switch (cond) {
    case CompositeCondition::HazardDecreasing:
      return monotone_verdict(r, Direction::Decreasing, grid);
    case CompositeCondition::HazardIncreasing:
      return monotone_verdict(r, Direction::Increasing, grid);
    case CompositeCondition::URDecreasing:
      return monotone_verdict(ur, Direction::Decreasing, grid);
    case CompositeCondition::URIncreasing:
      return monotone_verdict(ur, Direction::Increasing, grid);
    case CompositeCondition::URConcave:
      return r_shape_verdict(ur, 2, SignConstraint::NonPositive, grid);
    case CompositeCondition::URConvex:
      return r_shape_verdict(ur, 2, SignConstraint::NonNegative, grid);
    case CompositeCondition::U2RDecreasing: {
      ScalarFunction g{[b](double u) { return u * u * b.hazard(u); }, edge,
                       std::numeric_limits<double>::infinity()};
      return monotone_verdict(g, Direction::Decreasing, grid);
    }
    case CompositeCondition::UDURDecreasing:
    case CompositeCondition::UDURIncreasing: {
      ScalarFunction g{[b, ur](double u) {
                         return u * numeric_derivative(ur, u, 1);
                       },
                       edge, std::numeric_limits<double>::infinity()};
      const auto dir = (cond == CompositeCondition::UDURDecreasing)
                           ? Direction::Decreasing
                           : Direction::Increasing;
      return monotone_verdict(g, dir, grid, NoiseFloor{1e-7, 1e-9});
    }
    case CompositeCondition::U2RPrimeDecreasing:
    case CompositeCondition::U2RPrimeIncreasing: {
      ScalarFunction g{[b, r](double u) {
                         return u * u * numeric_derivative(r, u, 1);
                       },
                       edge, std::numeric_limits<double>::infinity()};
      const auto dir = (cond == CompositeCondition::U2RPrimeDecreasing)
                           ? Direction::Decreasing
                           : Direction::Increasing;
      return monotone_verdict(g, dir, grid, NoiseFloor{1e-7, 1e-9});
    }
    case CompositeCondition::U3RSecondIncreasing:
    case CompositeCondition::U3RSecondDecreasing: {
      ScalarFunction g{[b, r](double u) {
                         return u * u * u * numeric_derivative(r, u, 2);
                       },
                       edge, std::numeric_limits<double>::infinity()};
      const auto dir = (cond == CompositeCondition::U3RSecondIncreasing)
                           ? Direction::Increasing
                           : Direction::Decreasing;
      return monotone_verdict(g, dir, grid, NoiseFloor{1e-5, 1e-6});
    }
    case CompositeCondition::HazardLogConcave:
      return log_shape_verdict(r, LogShape::LogConcave, grid);
    case CompositeCondition::TwoLogConvex:
    case CompositeCondition::TwoLogConcave: {
      const bool convex = cond == CompositeCondition::TwoLogConvex;
      if (interp == TwoLogInterpretation::SecondLogDerivativeSign)
        return log_shape_verdict(r, convex ? LogShape::LogConvex : LogShape::LogConcave,
                                 grid);
      ScalarFunction g{[logr](double u) { return numeric_derivative(logr, u, 2); },
                       edge, std::numeric_limits<double>::infinity()};
      return monotone_verdict(g, convex ? Direction::Increasing : Direction::Decreasing,
                              grid, NoiseFloor{1e-4, 1e-5});
    }
    case CompositeCondition::ReversedHazardDecreasing: {
      ScalarFunction g{[b](double u) { return b.reversed_hazard(u); }, edge,
                       std::numeric_limits<double>::infinity()};
      return monotone_verdict(g, Direction::Decreasing, grid);
    }
    case CompositeCondition::HazardConcave:
      return r_shape_verdict(r, 2, SignConstraint::NonPositive, grid);
    case CompositeCondition::HazardConvex:
      return r_shape_verdict(r, 2, SignConstraint::NonNegative, grid);
    case CompositeCondition::RConcaveOrder1:
      return r_shape_verdict(r, 1, SignConstraint::NonPositive, grid);
    case CompositeCondition::RConcaveOrder2:
      return r_shape_verdict(r, 2, SignConstraint::NonPositive, grid);
    case CompositeCondition::RConcaveOrder3:
      return r_shape_verdict(r, 3, SignConstraint::NonPositive, grid);
  }
  throw DomainError("composite_condition: unknown condition");
}

CheckVerdict composite_condition(const BaselineDistribution& b, CompositeCondition cond,
                                 TwoLogInterpretation interp) {
  return composite_condition(b, cond, default_shape_grid(b), interp);
}

}  // namespace sysorder
