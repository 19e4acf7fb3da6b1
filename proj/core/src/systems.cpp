#include "sysorder/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sysorder {

const char* to_string(Structure s) {
  return s == Structure::Series ? "series" : "parallel";
}

SystemSpec::SystemSpec(std::vector<LSDistribution> comps,
                       std::optional<ArchimedeanGenerator> cop, Structure s)
    : components(std::move(comps)), copula(std::move(cop)), structure(s) {
  if (components.empty()) throw DomainError("SystemSpec: need at least one component");
  if (copula && components.size() > static_cast<std::size_t>(copula->max_dim()))
    throw DimensionError("SystemSpec: more components than the copula dimension");
}

double SystemSpec::alive_threshold() const {
  double t = -std::numeric_limits<double>::infinity();
  for (const auto& c : components) t = std::max(t, c.support_left());
  return t;
}

double SystemSpec::support_left() const {
  if (structure == Structure::Parallel) return alive_threshold();
  double t = std::numeric_limits<double>::infinity();
  for (const auto& c : components) t = std::min(t, c.support_left());
  return t;
}

SystemSpec expand_outlier(const MultipleOutlierSpec& m, Structure structure) {
  if (m.n1 < 1 || m.n2 < 1) throw DomainError("expand_outlier: n1, n2 must be >= 1");
  std::vector<LSDistribution> comps;
  comps.reserve(m.n1 + m.n2);
  for (std::size_t i = 0; i < m.n1; ++i)
    comps.emplace_back(m.baseline, m.lambda1, m.sigma1);
  for (std::size_t i = 0; i < m.n2; ++i)
    comps.emplace_back(m.baseline, m.lambda2, m.sigma2);
  return SystemSpec(std::move(comps), std::nullopt, structure);
}

namespace {

double archimedean_aggregate(const ArchimedeanGenerator& g,
                             const std::vector<LSDistribution>& comps, double t,
                             bool survival) {
  double sum = 0.0;
  const double cap = g.cap();
  for (const auto& c : comps) {
    const double v = survival ? c.sf(t) : c.cdf(t);
    if (v == 0.0) return 0.0;  // grounded copula
    sum += std::min(g.phi(v), cap);
    if (sum >= cap) return g.psi(cap);
  }
  return g.psi(sum);
}

}  // namespace

double series_sf(const SystemSpec& spec, double t) {
  if (spec.structure != Structure::Series)
    throw DomainError("series_sf: spec is not a series system");
  if (spec.copula) return archimedean_aggregate(*spec.copula, spec.components, t, true);
  double p = 1.0;
  for (const auto& c : spec.components) p *= c.sf(t);
  return p;
}

double parallel_cdf(const SystemSpec& spec, double t) {
  if (spec.structure != Structure::Parallel)
    throw DomainError("parallel_cdf: spec is not a parallel system");
  if (spec.copula) return archimedean_aggregate(*spec.copula, spec.components, t, false);
  double p = 1.0;
  for (const auto& c : spec.components) p *= c.cdf(t);
  return p;
}

double system_sf(const SystemSpec& spec, double t) {
  if (spec.structure == Structure::Series) return series_sf(spec, t);
  return 1.0 - parallel_cdf(spec, t);
}

double system_cdf(const SystemSpec& spec, double t) {
  if (spec.structure == Structure::Series) return 1.0 - series_sf(spec, t);
  return parallel_cdf(spec, t);
}

double series_hazard_independent(const SystemSpec& spec, double t) {
  if (spec.structure != Structure::Series || !spec.independent())
    throw DomainError("series_hazard_independent: needs an independent series system");
  double max_loc = -std::numeric_limits<double>::infinity();
  for (const auto& c : spec.components) max_loc = std::max(max_loc, c.location());
  if (!(t > max_loc))
    throw DomainError("series_hazard_independent: t must exceed every location");
  double sum = 0.0;
  for (const auto& c : spec.components) sum += c.hazard(t);
  return sum;
}

double system_pdf_independent(const SystemSpec& spec, double t) {
  if (!spec.independent())
    throw MissingEvaluator("system pdf: only available for independent systems");
  if (spec.structure == Structure::Series) {
    double sf = 1.0, hazard_sum = 0.0;
    for (const auto& c : spec.components) {
      sf *= c.sf(t);
      if (t > c.location()) hazard_sum += c.hazard(t);
    }
    return sf * hazard_sum;
  }
  double cdf = 1.0, rev_sum = 0.0;
  for (const auto& c : spec.components) {
    const double ci = c.cdf(t);
    if (ci <= 0.0) return 0.0;
    cdf *= ci;
    rev_sum += c.pdf(t) / ci;
  }
  return cdf * rev_sum;
}

double system_hazard_independent(const SystemSpec& spec, double t) {
  if (spec.structure == Structure::Series) return series_hazard_independent(spec, t);
  const double sf = system_sf(spec, t);
  if (sf < 1e-300) return std::numeric_limits<double>::quiet_NaN();
  return system_pdf_independent(spec, t) / sf;
}

double system_quantile(const SystemSpec& spec, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("system_quantile: p must lie in (0,1)");
  double lo = spec.support_left();
  double span = 1.0;
  for (const auto& c : spec.components) span = std::max(span, c.scale());
  double hi = lo + span;
  int guard = 0;
  while (system_cdf(spec, hi) < p) {
    hi = lo + (hi - lo) * 2.0;
    if (++guard > 300) throw ConvergenceError("system_quantile: bracket not found");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (system_cdf(spec, mid) < p)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-10 * std::max(1.0, std::fabs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sysorder
