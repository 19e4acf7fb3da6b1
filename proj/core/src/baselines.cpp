#include "sysorder/baselines.hpp"

#include <cmath>
#include <limits>

namespace sysorder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSfFloor = 1e-300;

// Cumulative hazard at which the spliced families hand over to the power
// tail; exp(-7.6) ~ 5.0e-4 keeps the [q(0.001), q(0.999)] window inside the
// designed hazard segment.
constexpr double kSpliceCumHaz = 7.6;

}  // namespace

const char* to_string(BaselineFamily f) {
  switch (f) {
    case BaselineFamily::Exponential: return "exponential";
    case BaselineFamily::Weibull: return "weibull";
    case BaselineFamily::LogisticPositive: return "logistic_positive";
    case BaselineFamily::Gompertz: return "gompertz";
    case BaselineFamily::HalfNormal: return "half_normal";
    case BaselineFamily::Pareto: return "pareto";
    case BaselineFamily::Frechet: return "frechet";
    case BaselineFamily::ParetoDrift: return "pareto_drift";
    case BaselineFamily::PowerDecayHazard: return "power_decay_hazard";
    case BaselineFamily::DecayHazard: return "decay_hazard";
    case BaselineFamily::SaturatingHazard: return "saturating_hazard";
    case BaselineFamily::LinearHazard: return "linear_hazard";
  }
  return "?";
}

BaselineDistribution::BaselineDistribution(BaselineFamily f, double a, double b, double c)
    : family_(f), a_(a), b_(b), c_(c) {
  switch (family_) {
    case BaselineFamily::Exponential:
    case BaselineFamily::Weibull:
    case BaselineFamily::LogisticPositive:
    case BaselineFamily::Gompertz:
    case BaselineFamily::HalfNormal:
    case BaselineFamily::Frechet:
      support_left_ = 0.0;
      break;
    case BaselineFamily::Pareto:
    case BaselineFamily::ParetoDrift:
    case BaselineFamily::SaturatingHazard:
      support_left_ = 1.0;
      break;
    case BaselineFamily::PowerDecayHazard: {
      support_left_ = 1.0;
      // r = K u^-q on [1, B]; cumulative hazard K(1-u^(1-q))/(q-1).
      const double k = a_, q = b_;
      tail_start_ = 10.0;
      tail_cumhaz_ = k * (1.0 - std::pow(tail_start_, 1.0 - q)) / (q - 1.0);
      if (tail_cumhaz_ < kSpliceCumHaz)
        throw DomainError("power_decay_hazard: k too small for the q(0.999) "
                          "window to sit inside the power segment");
      tail_urate_ = tail_start_ * k * std::pow(tail_start_, -q);
      break;
    }
    case BaselineFamily::DecayHazard: {
      support_left_ = 1.0;
      const double c0 = a_, k0 = b_;
      // Hand over where the cumulative hazard (c/k)(1-e^{-k(u-1)}) hits 7.6.
      const double x = 1.0 - kSpliceCumHaz * k0 / c0;
      if (x <= 0.0) throw DomainError("decay_hazard: need c > 7.6*k");
      tail_start_ = 1.0 - std::log(x) / k0;
      tail_cumhaz_ = kSpliceCumHaz;
      tail_urate_ = tail_start_ * c0 * x;  // u * r at the splice point
      break;
    }
    case BaselineFamily::LinearHazard: {
      support_left_ = 1.0;
      const double a0 = a_, slope = b_;
      // The linear segment ends where the cumulative hazard reaches 7.6
      // (survival ~5e-4), so the q(0.999) window never sees the kink.
      double window;
      if (slope == 0.0) {
        window = kSpliceCumHaz / a0;
      } else {
        const double disc = a0 * a0 - 2.0 * slope * kSpliceCumHaz;
        if (disc <= 0.0)
          throw DomainError("linear_hazard: slope too steep; hazard would cross "
                            "zero before the handover point");
        window = (a0 - std::sqrt(disc)) / slope;
      }
      tail_start_ = 1.0 + window;
      tail_cumhaz_ = kSpliceCumHaz;
      tail_urate_ = -1.0;  // marker: constant-hazard tail, not 1/u
      c_ = a0 - slope * window;
      break;
    }
  }
}

BaselineDistribution BaselineDistribution::exponential() {
  return BaselineDistribution(BaselineFamily::Exponential, 0, 0, 0);
}

BaselineDistribution BaselineDistribution::weibull(double shape) {
  if (!(shape > 0.0)) throw DomainError("weibull: shape must be > 0");
  return BaselineDistribution(BaselineFamily::Weibull, shape, 0, 0);
}

BaselineDistribution BaselineDistribution::logistic_positive() {
  return BaselineDistribution(BaselineFamily::LogisticPositive, 0, 0, 0);
}

BaselineDistribution BaselineDistribution::gompertz(double shape) {
  if (!(shape > 0.0)) throw DomainError("gompertz: shape must be > 0");
  return BaselineDistribution(BaselineFamily::Gompertz, shape, 0, 0);
}

BaselineDistribution BaselineDistribution::half_normal() {
  return BaselineDistribution(BaselineFamily::HalfNormal, 0, 0, 0);
}

BaselineDistribution BaselineDistribution::pareto(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("pareto: gamma must be > 0");
  return BaselineDistribution(BaselineFamily::Pareto, gamma, 0, 0);
}

BaselineDistribution BaselineDistribution::frechet(double beta) {
  if (!(beta > 0.0)) throw DomainError("frechet: beta must be > 0");
  return BaselineDistribution(BaselineFamily::Frechet, beta, 0, 0);
}

BaselineDistribution BaselineDistribution::pareto_drift(double a, double b, double s) {
  if (!(a > 0.0)) throw DomainError("pareto_drift: a must be > 0");
  if (!(a + b > 0.0)) throw DomainError("pareto_drift: need a + b > 0");
  if (b < 0.0 && -b >= a) throw DomainError("pareto_drift: need |b| < a when b < 0");
  if (!(s > 0.0)) throw DomainError("pareto_drift: s must be > 0");
  return BaselineDistribution(BaselineFamily::ParetoDrift, a, b, s);
}

BaselineDistribution BaselineDistribution::power_decay_hazard(double k, double q) {
  if (!(k > 0.0)) throw DomainError("power_decay_hazard: k must be > 0");
  if (!(q > 1.0)) throw DomainError("power_decay_hazard: q must be > 1");
  return BaselineDistribution(BaselineFamily::PowerDecayHazard, k, q, 0);
}

BaselineDistribution BaselineDistribution::decay_hazard(double c, double k) {
  if (!(c > 0.0) || !(k > 0.0)) throw DomainError("decay_hazard: c,k must be > 0");
  return BaselineDistribution(BaselineFamily::DecayHazard, c, k, 0);
}

BaselineDistribution BaselineDistribution::saturating_hazard(double level, double m,
                                                             double s) {
  if (!(level > 0.0)) throw DomainError("saturating_hazard: level must be > 0");
  if (!(std::fabs(m) < level)) throw DomainError("saturating_hazard: need |m| < level");
  if (!(s > 0.0)) throw DomainError("saturating_hazard: s must be > 0");
  return BaselineDistribution(BaselineFamily::SaturatingHazard, level, m, s);
}

BaselineDistribution BaselineDistribution::linear_hazard(double a, double slope) {
  if (!(a > 0.0)) throw DomainError("linear_hazard: a must be > 0");
  if (slope < 0.0) throw DomainError("linear_hazard: slope must be >= 0");
  return BaselineDistribution(BaselineFamily::LinearHazard, a, slope, 0);
}

double BaselineDistribution::cumulative_hazard(double u) const {
  if (u <= support_left_) return 0.0;
  switch (family_) {
    case BaselineFamily::Exponential:
      return u;
    case BaselineFamily::Weibull:
      return std::pow(u, a_);
    case BaselineFamily::LogisticPositive:
      // sf = 2 e^{-u} / (1 + e^{-u})
      return u - std::log(2.0) + std::log1p(std::exp(-u));
    case BaselineFamily::Gompertz:
      return std::expm1(a_ * u) / a_;
    case BaselineFamily::HalfNormal: {
      const double s = sf(u);
      return (s > 0.0) ? -std::log(s) : kInf;
    }
    case BaselineFamily::Pareto:
      return a_ * std::log(u);
    case BaselineFamily::Frechet: {
      const double s = sf(u);
      return (s > 0.0) ? -std::log(s) : kInf;
    }
    case BaselineFamily::ParetoDrift:
      return a_ * std::log(u) + (b_ / c_) * (1.0 - std::pow(u, -c_));
    case BaselineFamily::PowerDecayHazard: {
      const double k = a_, q = b_;
      if (u <= tail_start_)
        return k * (1.0 - std::pow(u, 1.0 - q)) / (q - 1.0);
      return tail_cumhaz_ + tail_urate_ * std::log(u / tail_start_);
    }
    case BaselineFamily::DecayHazard: {
      const double c0 = a_, k0 = b_;
      if (u <= tail_start_)
        return (c0 / k0) * (1.0 - std::exp(-k0 * (u - 1.0)));
      return tail_cumhaz_ + tail_urate_ * std::log(u / tail_start_);
    }
    case BaselineFamily::SaturatingHazard: {
      // integral of b*u^-s
      const double tail = (c_ == 1.0) ? b_ * std::log(u)
                                      : b_ * (std::pow(u, 1.0 - c_) - 1.0) / (1.0 - c_);
      return a_ * (u - 1.0) + tail;
    }
    case BaselineFamily::LinearHazard: {
      if (u <= tail_start_) {
        const double x = u - 1.0;
        return a_ * x - 0.5 * b_ * x * x;
      }
      return tail_cumhaz_ + c_ * (u - tail_start_);
    }
  }
  return kNaN;
}

double BaselineDistribution::sf(double u) const {
  if (u <= support_left_) return 1.0;
  switch (family_) {
    case BaselineFamily::LogisticPositive: {
      const double e = std::exp(-u);
      return 2.0 * e / (1.0 + e);
    }
    case BaselineFamily::HalfNormal:
      return std::erfc(u / std::sqrt(2.0));
    case BaselineFamily::Frechet:
      return -std::expm1(-std::pow(u, -a_));
    default:
      return std::exp(-cumulative_hazard(u));
  }
}

double BaselineDistribution::cdf(double u) const {
  if (u <= support_left_) return 0.0;
  switch (family_) {
    case BaselineFamily::LogisticPositive:
      return std::tanh(0.5 * u);
    case BaselineFamily::HalfNormal:
      return std::erf(u / std::sqrt(2.0));
    case BaselineFamily::Frechet:
      return std::exp(-std::pow(u, -a_));
    default: {
      const double h = cumulative_hazard(u);
      return -std::expm1(-h);
    }
  }
}

double BaselineDistribution::hazard(double u) const {
  if (u <= support_left_) return 0.0;
  switch (family_) {
    case BaselineFamily::Exponential:
      return 1.0;
    case BaselineFamily::Weibull:
      return a_ * std::pow(u, a_ - 1.0);
    case BaselineFamily::LogisticPositive:
      return 1.0 / (1.0 + std::exp(-u));
    case BaselineFamily::Gompertz:
      return std::exp(a_ * u);
    case BaselineFamily::HalfNormal: {
      const double s = sf(u);
      if (s < kSfFloor) return kNaN;  // overflow guard sentinel
      return std::sqrt(2.0 / 3.14159265358979323846) * std::exp(-0.5 * u * u) / s;
    }
    case BaselineFamily::Pareto:
      return a_ / u;
    case BaselineFamily::Frechet: {
      const double s = sf(u);
      if (s < kSfFloor) return kNaN;
      return pdf(u) / s;
    }
    case BaselineFamily::ParetoDrift:
      return (a_ + b_ * std::pow(u, -c_)) / u;
    case BaselineFamily::PowerDecayHazard:
      if (u <= tail_start_) return a_ * std::pow(u, -b_);
      return tail_urate_ / u;
    case BaselineFamily::DecayHazard:
      if (u <= tail_start_) return a_ * std::exp(-b_ * (u - 1.0));
      return tail_urate_ / u;
    case BaselineFamily::SaturatingHazard:
      return a_ + b_ * std::pow(u, -c_);
    case BaselineFamily::LinearHazard:
      if (u <= tail_start_) return a_ - b_ * (u - 1.0);
      return c_;
  }
  return kNaN;
}

double BaselineDistribution::pdf(double u) const {
  if (u <= support_left_) return 0.0;
  switch (family_) {
    case BaselineFamily::LogisticPositive: {
      const double e = std::exp(-u);
      const double denom = 1.0 + e;
      return 2.0 * e / (denom * denom);
    }
    case BaselineFamily::HalfNormal:
      return std::sqrt(2.0 / 3.14159265358979323846) * std::exp(-0.5 * u * u);
    case BaselineFamily::Frechet:
      return a_ * std::pow(u, -a_ - 1.0) * std::exp(-std::pow(u, -a_));
    default:
      return hazard(u) * sf(u);
  }
}

double BaselineDistribution::reversed_hazard(double u) const {
  if (u <= support_left_) return 0.0;
  if (family_ == BaselineFamily::Frechet) return a_ * std::pow(u, -a_ - 1.0);
  const double c = cdf(u);
  if (c < kSfFloor) return kNaN;
  return pdf(u) / c;
}

double BaselineDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("baseline quantile: p must lie in [0,1)");
  if (p == 0.0) return support_left_;
  switch (family_) {
    case BaselineFamily::Exponential:
      return -std::log1p(-p);
    case BaselineFamily::Weibull:
      return std::pow(-std::log1p(-p), 1.0 / a_);
    case BaselineFamily::LogisticPositive:
      return std::log1p(p) - std::log1p(-p);
    case BaselineFamily::Gompertz:
      return std::log1p(-a_ * std::log1p(-p)) / a_;
    case BaselineFamily::HalfNormal:
      return normal_quantile(0.5 * (1.0 + p));
    case BaselineFamily::Pareto:
      return std::exp(-std::log1p(-p) / a_);
    case BaselineFamily::Frechet:
      return std::pow(-std::log(p), -1.0 / a_);
    case BaselineFamily::PowerDecayHazard: {
      const double h0 = -std::log1p(-p);
      const double k = a_, q = b_;
      if (h0 <= tail_cumhaz_)
        return std::pow(1.0 - h0 * (q - 1.0) / k, 1.0 / (1.0 - q));
      return tail_start_ * std::exp((h0 - tail_cumhaz_) / tail_urate_);
    }
    case BaselineFamily::DecayHazard: {
      const double h0 = -std::log1p(-p);
      const double c0 = a_, k0 = b_;
      if (h0 <= tail_cumhaz_)
        return 1.0 - std::log(1.0 - h0 * k0 / c0) / k0;
      return tail_start_ * std::exp((h0 - tail_cumhaz_) / tail_urate_);
    }
    case BaselineFamily::LinearHazard: {
      const double h0 = -std::log1p(-p);
      if (h0 >= tail_cumhaz_)
        return tail_start_ + (h0 - tail_cumhaz_) / c_;
      if (b_ == 0.0) return 1.0 + h0 / a_;
      const double disc = a_ * a_ - 2.0 * b_ * h0;
      return 1.0 + (a_ - std::sqrt(disc)) / b_;
    }
    default:
      return quantile_by_bisection(p);
  }
}

double BaselineDistribution::quantile_by_bisection(double p) const {
  double lo = support_left_;
  double hi = std::max(1.0, 2.0 * support_left_);
  int guard = 0;
  while (cdf(hi) < p) {
    hi *= 2.0;
    if (++guard > 400) throw ConvergenceError("baseline quantile: bracket not found");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

std::string BaselineDistribution::name() const {
  std::string s = to_string(family_);
  switch (family_) {
    case BaselineFamily::Exponential:
    case BaselineFamily::LogisticPositive:
    case BaselineFamily::HalfNormal:
      return s;
    case BaselineFamily::Weibull:
    case BaselineFamily::Gompertz:
    case BaselineFamily::Pareto:
    case BaselineFamily::Frechet:
      return s + "(" + std::to_string(a_) + ")";
    default:
      return s + "(" + std::to_string(a_) + "," + std::to_string(b_) + "," +
             std::to_string(c_) + ")";
  }
}

// ---------------------------------------------------------------------------
// Location-scale wrapper
// ---------------------------------------------------------------------------

double LSDistribution::cdf(double t) const {
  if (t <= location_) return 0.0;
  return baseline_.cdf((t - location_) / scale_);
}

double LSDistribution::sf(double t) const {
  if (t <= location_) return 1.0;
  return baseline_.sf((t - location_) / scale_);
}

double LSDistribution::pdf(double t) const {
  if (t <= location_) return 0.0;
  return baseline_.pdf((t - location_) / scale_) / scale_;
}

double LSDistribution::hazard(double t) const {
  if (t <= location_)
    throw DomainError("ls hazard: t must exceed the location parameter");
  return baseline_.hazard((t - location_) / scale_) / scale_;
}

double LSDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("ls quantile: p must lie in [0,1)");
  return location_ + scale_ * baseline_.quantile(p);
}

double baseline_hazard(const BaselineDistribution& b, double u) {
  if (!(u > 0.0)) throw DomainError("baseline_hazard: u must be > 0");
  return b.hazard(u);
}

double ls_sf(const LSDistribution& d, double t) { return d.sf(t); }
double ls_cdf(const LSDistribution& d, double t) { return d.cdf(t); }
double ls_hazard(const LSDistribution& d, double t) { return d.hazard(t); }
double ls_quantile(const LSDistribution& d, double p) { return d.quantile(p); }

}  // namespace sysorder
