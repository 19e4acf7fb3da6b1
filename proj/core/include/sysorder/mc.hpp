#ifndef SYSORDER_MC_HPP
#define SYSORDER_MC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sysorder/systems.hpp"

namespace sysorder {

struct SimulationResult {
  std::vector<double> lifetimes;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

/// Inverse-transform simulation of the system lifetime. Dependent draws come
/// from the frailty copula sampler; the uniforms enter as survival levels for
/// series systems and as distribution levels for parallel systems, matching
/// which copula (survival vs distributional) the system formulas use.
SimulationResult simulate_system(const SystemSpec& spec, std::size_t count,
                                 std::uint64_t seed);

struct KsResult {
  double statistic = 0.0;
  double critical = 0.0;
  double alpha = 0.0;
  bool pass = false;
};

/// Two-sided KS distance between the empirical cdf and an analytic cdf.
KsResult ks_compare(const SimulationResult& sim,
                    const std::function<double(double)>& analytic_cdf,
                    double alpha = 0.01);

/// Convenience overload against the system's own analytic law.
KsResult ks_compare(const SimulationResult& sim, const SystemSpec& spec,
                    double alpha = 0.01);

}  // namespace sysorder

#endif
