#ifndef SYSORDER_BASELINES_HPP
#define SYSORDER_BASELINES_HPP

#include <string>

#include "sysorder/common.hpp"

namespace sysorder {

/// Baseline lifetime laws on the positive half line, in dimensionless time u.
/// The first five are the classical textbook families; the power-hazard
/// families after them exist because several shape hypotheses checked by the
/// theorem harness (u*r(u) decreasing, u^2*r(u) decreasing, r concave, ...)
/// have no representative among the classical families.
enum class BaselineFamily {
  Exponential,       // r(u) = 1
  Weibull,           // r(u) = alpha * u^(alpha-1)
  LogisticPositive,  // logistic truncated to u > 0, renormalized
  Gompertz,          // r(u) = exp(c*u), c > 0
  HalfNormal,        // |Z|, Z standard normal
  Pareto,            // support [1,inf), sf = u^(-gamma); u*r(u) = gamma
  Frechet,           // cdf = exp(-u^(-beta)); reversed hazard beta*u^(-beta-1)
  ParetoDrift,       // support [1,inf), u*r(u) = a + b*u^(-s)
  PowerDecayHazard,  // support [1,inf), r = K*u^(-q) up to B, then ~1/u tail
  DecayHazard,       // support [1,inf), r = c*exp(-k(u-1)) up to B, ~1/u tail
  SaturatingHazard,  // support [1,inf), r = L + m*u^(-s), |m| < L
  LinearHazard,      // support [1,inf), r = A - slope*(u-1) on a window
};

const char* to_string(BaselineFamily f);

class BaselineDistribution {
public:
  static BaselineDistribution exponential();
  static BaselineDistribution weibull(double shape);
  static BaselineDistribution logistic_positive();
  static BaselineDistribution gompertz(double shape);
  static BaselineDistribution half_normal();
  static BaselineDistribution pareto(double gamma);
  static BaselineDistribution frechet(double beta);
  static BaselineDistribution pareto_drift(double a, double b, double s);
  static BaselineDistribution power_decay_hazard(double k, double q);
  static BaselineDistribution decay_hazard(double c, double k);
  static BaselineDistribution saturating_hazard(double level, double m, double s);
  static BaselineDistribution linear_hazard(double a, double slope);

  double cdf(double u) const;
  double sf(double u) const;
  double pdf(double u) const;
  double hazard(double u) const;           // pdf/sf; NaN once sf underflows
  double reversed_hazard(double u) const;  // pdf/cdf; NaN once cdf underflows
  double quantile(double p) const;
  double cumulative_hazard(double u) const;

  /// Left edge of the support (0 for the classical families, 1 for the
  /// shifted power-hazard families).
  double support_left() const { return support_left_; }

  BaselineFamily family() const { return family_; }
  double param(int i) const { return i == 0 ? a_ : (i == 1 ? b_ : c_); }
  std::string name() const;

  bool operator==(const BaselineDistribution& o) const {
    return family_ == o.family_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }

private:
  BaselineDistribution(BaselineFamily f, double a, double b, double c);

  double quantile_by_bisection(double p) const;

  BaselineFamily family_;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0;  // family parameters
  double support_left_ = 0.0;
  // Spliced families switch to a u*r(u)=const tail at tail_start_ so the
  // survival function actually reaches zero.
  double tail_start_ = 0.0;
  double tail_urate_ = 0.0;   // u*r(u) on the tail
  double tail_cumhaz_ = 0.0;  // cumulative hazard at tail_start_
};

/// Location-scale wrapper: lifetime law of lambda + sigma * U.
class LSDistribution {
public:
  LSDistribution(BaselineDistribution baseline, double location, double scale)
      : baseline_(std::move(baseline)), location_(location), scale_(scale) {
    if (!(scale > 0.0)) throw DomainError("LSDistribution: scale must be > 0");
  }

  double cdf(double t) const;
  double sf(double t) const;
  double pdf(double t) const;
  double hazard(double t) const;  // DomainError for t <= location
  double quantile(double p) const;

  /// Left edge of the support: location + scale * baseline left edge.
  double support_left() const {
    return location_ + scale_ * baseline_.support_left();
  }

  const BaselineDistribution& baseline() const { return baseline_; }
  double location() const { return location_; }
  double scale() const { return scale_; }

private:
  BaselineDistribution baseline_;
  double location_;
  double scale_;
};

// Free-function operation surface.
double baseline_hazard(const BaselineDistribution& b, double u);
double ls_sf(const LSDistribution& d, double t);
double ls_cdf(const LSDistribution& d, double t);
double ls_hazard(const LSDistribution& d, double t);
double ls_quantile(const LSDistribution& d, double p);

}  // namespace sysorder

#endif
