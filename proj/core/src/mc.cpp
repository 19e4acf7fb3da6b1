#include "sysorder/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sysorder {

SimulationResult simulate_system(const SystemSpec& spec, std::size_t count,
                                 std::uint64_t seed) {
  if (count < 1) throw DomainError("simulate_system: count must be >= 1");
  const std::size_t n = spec.size();
  const bool series = spec.structure == Structure::Series;

  // Frailty parameters resolved up front so unsupported families fail fast.
  enum class Frailty { None, Gamma, Stable } frailty = Frailty::None;
  double theta = 0.0;
  if (spec.copula) {
    switch (spec.copula->family()) {
      case GeneratorFamily::Independence:
        break;
      case GeneratorFamily::Clayton:
        frailty = Frailty::Gamma;
        theta = spec.copula->theta();
        break;
      case GeneratorFamily::Gumbel:
        theta = spec.copula->theta();
        if (theta > 1.0) frailty = Frailty::Stable;
        break;
      case GeneratorFamily::Frank:
        throw UnsupportedFamily("simulate_system: Frank frailty sampling not implemented");
    }
  }

  SimulationResult res;
  res.seed = seed;
  res.count = count;
  res.lifetimes.resize(count);

  for (std::size_t row = 0; row < count; ++row) {
    Rng rng = Rng::substream(seed, row);
    double v = 1.0;
    if (frailty == Frailty::Gamma) v = rng.gamma(1.0 / theta, theta);
    if (frailty == Frailty::Stable) v = rng.positive_stable(1.0 / theta);

    double life = series ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double e = rng.exponential();
      double u = spec.copula ? spec.copula->psi(e / v) : std::exp(-e);
      u = std::min(std::max(u, 1e-15), 1.0 - 1e-15);
      // Series systems couple survival levels, parallel ones cdf levels.
      const double t = series ? spec.components[j].quantile(1.0 - u)
                              : spec.components[j].quantile(u);
      life = series ? std::min(life, t) : std::max(life, t);
    }
    res.lifetimes[row] = life;
  }
  return res;
}

KsResult ks_compare(const SimulationResult& sim,
                    const std::function<double(double)>& analytic_cdf, double alpha) {
  if (sim.lifetimes.size() < 100)
    throw DomainError("ks_compare: need at least 100 draws");
  std::vector<double> sorted(sim.lifetimes);
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = analytic_cdf(sorted[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max({d, hi, lo});
  }
  KsResult r;
  r.statistic = d;
  r.alpha = alpha;
  r.critical = std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(n);
  r.pass = d < r.critical;
  return r;
}

KsResult ks_compare(const SimulationResult& sim, const SystemSpec& spec, double alpha) {
  return ks_compare(
      sim, [&spec](double t) { return system_cdf(spec, t); }, alpha);
}

}  // namespace sysorder
