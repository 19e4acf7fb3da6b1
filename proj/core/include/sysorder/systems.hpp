#ifndef SYSORDER_SYSTEMS_HPP
#define SYSORDER_SYSTEMS_HPP

#include <optional>
#include <vector>

#include "sysorder/baselines.hpp"
#include "sysorder/copulas.hpp"

namespace sysorder {

enum class Structure { Series, Parallel };

const char* to_string(Structure s);

/// Component lifetimes plus their coupling. An empty copula means
/// independence; otherwise the generator is the survival copula for series
/// systems and the distributional copula for parallel systems, matching the
/// displayed system laws.
struct SystemSpec {
  std::vector<LSDistribution> components;
  std::optional<ArchimedeanGenerator> copula;
  Structure structure = Structure::Series;

  SystemSpec(std::vector<LSDistribution> comps, std::optional<ArchimedeanGenerator> cop,
             Structure s);

  std::size_t size() const { return components.size(); }
  bool independent() const { return !copula.has_value(); }

  /// Largest component support edge; system formulas are asserted above it.
  double alive_threshold() const;
  /// Left edge of the system lifetime's support.
  double support_left() const;
};

/// Two homogeneous blocks: n1 copies of (lambda1, sigma1) then n2 copies of
/// (lambda2, sigma2), independent components.
struct MultipleOutlierSpec {
  std::size_t n1, n2;
  double lambda1, sigma1;
  double lambda2, sigma2;
  BaselineDistribution baseline;
};

SystemSpec expand_outlier(const MultipleOutlierSpec& m,
                          Structure structure = Structure::Series);

double series_sf(const SystemSpec& spec, double t);
double parallel_cdf(const SystemSpec& spec, double t);

/// Survival / distribution of the system lifetime for either structure.
double system_sf(const SystemSpec& spec, double t);
double system_cdf(const SystemSpec& spec, double t);

/// Sum of component hazards (independent series only; DomainError for
/// t <= max location).
double series_hazard_independent(const SystemSpec& spec, double t);

/// Density of the system lifetime; independent systems only.
double system_pdf_independent(const SystemSpec& spec, double t);
double system_hazard_independent(const SystemSpec& spec, double t);

/// Bisection inverse of the system cdf to 1e-10 relative width.
double system_quantile(const SystemSpec& spec, double p);

}  // namespace sysorder

#endif
