#ifndef SYSORDER_ORDERS_HPP
#define SYSORDER_ORDERS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sysorder/baselines.hpp"
#include "sysorder/grid.hpp"
#include "sysorder/systems.hpp"

namespace sysorder {

/// ST: usual stochastic; HR: hazard rate; RH: reversed hazard rate;
/// LR: likelihood ratio; RHR: ageing-faster in the hazard rate sense.
enum class OrderRelation { ST, HR, RH, LR, RHR };

const char* to_string(OrderRelation r);
OrderRelation order_relation_from_string(const std::string& s);

/// Evaluator bundle for one lifetime law. pdf/hazard may be empty (dependent
/// systems expose only sf/cdf).
struct LifetimeLaw {
  std::function<double(double)> sf;
  std::function<double(double)> cdf;
  std::function<double(double)> quantile;
  std::function<double(double)> pdf;     // optional
  std::function<double(double)> hazard;  // optional
  double support_left = 0.0;
  std::string label;
};

LifetimeLaw make_law(const LSDistribution& d);
LifetimeLaw make_law(const SystemSpec& spec);

/// Union of both laws' quantiles at `count` levels in [0.001, 0.999].
EvaluationGrid make_order_grid(const LifetimeLaw& a, const LifetimeLaw& b,
                               std::size_t count = 512);

/// Verdict for "a <= b" in the given order over the grid. Ratio orders are
/// evaluated as monotone log-difference sequences; points beyond the sf/cdf
/// truncation floor are excluded rather than failed.
CheckVerdict order_verdict(const LifetimeLaw& a, const LifetimeLaw& b,
                           OrderRelation rel, const EvaluationGrid& grid);

struct OrderChainReport {
  std::map<OrderRelation, CheckVerdict> verdicts;
  /// Implication breaks (LR => HR, RH; HR/RH => ST). Always a bug.
  std::vector<std::string> violations;
};

OrderChainReport order_chain_check(const LifetimeLaw& a, const LifetimeLaw& b,
                                   const EvaluationGrid& grid);

}  // namespace sysorder

#endif
