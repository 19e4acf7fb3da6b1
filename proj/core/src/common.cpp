#include "sysorder/common.hpp"

#include <cmath>

namespace sysorder {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::HoldsWithEquality: return "holds_with_equality";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

void VerdictAccumulator::observe(double point, double lhs, double rhs) {
  observe(point, lhs, rhs, tol_, noise_);
}

void VerdictAccumulator::observe(double point, double lhs, double rhs,
                                 double local_tol, double local_noise) {
  ++n_;
  const double viol = lhs - rhs;
  const double gap = std::fabs(viol);
  if (gap > max_abs_gap_) max_abs_gap_ = gap;
  if (viol > max_violation_) {
    max_violation_ = viol;
    if (viol > local_tol) worst_ = Witness{point, lhs, rhs};
  }
  if (local_noise < local_tol) local_noise = local_tol;
  if (viol > local_noise) {
    any_beyond_noise_ = true;
    worst_ = Witness{point, lhs, rhs};
  } else if (viol > local_tol) {
    any_in_band_ = true;
  }
}

CheckVerdict VerdictAccumulator::finish() const {
  CheckVerdict v;
  v.tolerance = tol_;
  v.slack = (n_ == 0) ? 0.0 : max_violation_;
  if (n_ == 0) {
    v.status = CheckStatus::Inconclusive;
    return v;
  }
  if (any_beyond_noise_) {
    v.status = CheckStatus::Fails;
    v.witnesses.push_back(worst_);
  } else if (any_in_band_) {
    v.status = CheckStatus::Inconclusive;
  } else if (max_abs_gap_ < eq_eps_) {
    v.status = CheckStatus::HoldsWithEquality;
  } else {
    v.status = CheckStatus::Holds;
  }
  return v;
}

double Rng::exponential() { return -std::log(uniform()); }

double Rng::normal() { return normal_quantile(uniform()); }

double Rng::gamma(double shape, double scale) {
  if (shape <= 0.0 || scale <= 0.0) throw DomainError("gamma: shape,scale must be > 0");
  // Marsaglia-Tsang; shape < 1 boosted through shape+1.
  double boost = 1.0;
  if (shape < 1.0) {
    boost = std::pow(uniform(), 1.0 / shape);
    shape += 1.0;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return boost * scale * d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return boost * scale * d * v;
  }
}

double Rng::positive_stable(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("positive_stable: alpha must lie in (0,1)");
  // Chambers-Mallows-Stuck, one uniform and one exponential per draw.
  const double pi = 3.14159265358979323846;
  const double theta = pi * uniform();
  const double w = exponential();
  const double a = std::sin(alpha * theta) / std::pow(std::sin(theta), 1.0 / alpha);
  const double b = std::pow(std::sin((1.0 - alpha) * theta) / w, (1.0 - alpha) / alpha);
  return a * b;
}

// AS241 (Wichura): inverse of the standard normal cdf.
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -1e308;
    if (p == 1.0) return 1e308;
    throw DomainError("normal_quantile: p outside [0,1]");
  }
  const double q = p - 0.5;
  double r, x;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    x = q *
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e0) /
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
    return x;
  }
  r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  if (r <= 5.0) {
    r -= 1.6;
    x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
            3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
          4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
          2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
          5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -x : x;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace sysorder
