#ifndef SYSORDER_GRID_HPP
#define SYSORDER_GRID_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "sysorder/common.hpp"

namespace sysorder {

/// Sorted, strictly increasing evaluation abscissae.
struct EvaluationGrid {
  std::vector<double> points;

  static EvaluationGrid log_spaced(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
      throw DomainError("log_spaced grid needs 0 < lo < hi and count >= 2");
    EvaluationGrid g;
    g.points.resize(count);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
      const double w = static_cast<double>(i) / static_cast<double>(count - 1);
      g.points[i] = std::exp(llo + w * (lhi - llo));
    }
    g.points.front() = lo;
    g.points.back() = hi;
    g.dedupe();
    return g;
  }

  static EvaluationGrid linear(double lo, double hi, std::size_t count) {
    if (!(hi > lo) || count < 2)
      throw DomainError("linear grid needs lo < hi and count >= 2");
    EvaluationGrid g;
    g.points.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double w = static_cast<double>(i) / static_cast<double>(count - 1);
      g.points[i] = lo + w * (hi - lo);
    }
    g.dedupe();
    return g;
  }

  /// Union of two laws' quantiles at `levels_per_law` levels in [p_lo, p_hi].
  static EvaluationGrid quantile_union(const std::function<double(double)>& quantile_a,
                                       const std::function<double(double)>& quantile_b,
                                       std::size_t levels_per_law,
                                       double p_lo = 0.001, double p_hi = 0.999) {
    EvaluationGrid g;
    g.points.reserve(2 * levels_per_law);
    for (std::size_t i = 0; i < levels_per_law; ++i) {
      const double w = static_cast<double>(i) / static_cast<double>(levels_per_law - 1);
      const double p = p_lo + w * (p_hi - p_lo);
      g.points.push_back(quantile_a(p));
      g.points.push_back(quantile_b(p));
    }
    g.dedupe();
    return g;
  }

  EvaluationGrid restricted_above(double lo) const {
    EvaluationGrid g;
    for (double t : points)
      if (t > lo) g.points.push_back(t);
    return g;
  }

  void dedupe() {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end(),
                             [](double a, double b) {
                               return std::fabs(a - b) <=
                                      1e-15 * std::max(std::fabs(a), std::fabs(b));
                             }),
                 points.end());
  }

  std::size_t size() const { return points.size(); }
};

}  // namespace sysorder

#endif
