#include "sysorder/orders.hpp"

#include <algorithm>
#include <cmath>

namespace sysorder {

namespace {

constexpr double kSfTruncation = 1e-12;
constexpr double kRatioTol = 1e-8;

struct RatioPoint {
  double t;
  double m;  // log-ratio value
};

}  // namespace

const char* to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::ST: return "st";
    case OrderRelation::HR: return "hr";
    case OrderRelation::RH: return "rh";
    case OrderRelation::LR: return "lr";
    case OrderRelation::RHR: return "rhr";
  }
  return "?";
}

OrderRelation order_relation_from_string(const std::string& s) {
  if (s == "st") return OrderRelation::ST;
  if (s == "hr") return OrderRelation::HR;
  if (s == "rh") return OrderRelation::RH;
  if (s == "lr") return OrderRelation::LR;
  if (s == "rhr") return OrderRelation::RHR;
  throw ConfigError("unknown order relation: " + s);
}

LifetimeLaw make_law(const LSDistribution& d) {
  LifetimeLaw law;
  law.sf = [d](double t) { return d.sf(t); };
  law.cdf = [d](double t) { return d.cdf(t); };
  law.quantile = [d](double p) { return d.quantile(p); };
  law.pdf = [d](double t) { return d.pdf(t); };
  law.hazard = [d](double t) { return t > d.location() ? d.hazard(t) : 0.0; };
  law.support_left = d.support_left();
  law.label = d.baseline().name();
  return law;
}

LifetimeLaw make_law(const SystemSpec& spec) {
  LifetimeLaw law;
  law.sf = [spec](double t) { return system_sf(spec, t); };
  law.cdf = [spec](double t) { return system_cdf(spec, t); };
  law.quantile = [spec](double p) { return system_quantile(spec, p); };
  if (spec.independent()) {
    law.pdf = [spec](double t) { return system_pdf_independent(spec, t); };
    law.hazard = [spec](double t) { return system_hazard_independent(spec, t); };
  }
  law.support_left = spec.support_left();
  law.label = std::string(to_string(spec.structure)) + "-system";
  return law;
}

EvaluationGrid make_order_grid(const LifetimeLaw& a, const LifetimeLaw& b,
                               std::size_t count) {
  return EvaluationGrid::quantile_union(a.quantile, b.quantile, count / 2);
}

CheckVerdict order_verdict(const LifetimeLaw& a, const LifetimeLaw& b,
                           OrderRelation rel, const EvaluationGrid& grid) {
  if (grid.size() < 2) throw DomainError("order_verdict: grid too small");

  if (rel == OrderRelation::ST) {
    VerdictAccumulator acc(1e-10, 1e-12);
    for (double t : grid.points) acc.observe(t, a.sf(t), b.sf(t));
    return acc.finish();
  }

  const bool needs_pdf = rel == OrderRelation::LR;
  const bool needs_hazard = rel == OrderRelation::RHR;
  if (needs_pdf && (!a.pdf || !b.pdf))
    throw MissingEvaluator("order_verdict: lr order needs density evaluators");
  if (needs_hazard && (!a.hazard || !b.hazard))
    throw MissingEvaluator("order_verdict: rhr order needs hazard evaluators");

  // Ratio orders: collect the log-ratio where both inputs are usable.
  const double edge = std::max(a.support_left, b.support_left);
  std::vector<RatioPoint> pts;
  pts.reserve(grid.size());
  for (double t : grid.points) {
    if (rel != OrderRelation::RH && t <= edge) continue;
    double num = 0.0, den = 0.0;
    bool usable = true;
    switch (rel) {
      case OrderRelation::HR:
        num = b.sf(t);
        den = a.sf(t);
        usable = num > kSfTruncation && den > kSfTruncation;
        break;
      case OrderRelation::RH:
        num = b.cdf(t);
        den = a.cdf(t);
        usable = num > kSfTruncation && den > kSfTruncation;
        break;
      case OrderRelation::LR:
        num = b.pdf(t);
        den = a.pdf(t);
        usable = num > 1e-300 && den > 1e-300 && a.sf(t) > kSfTruncation &&
                 b.sf(t) > kSfTruncation;
        break;
      default:  // RHR: r_a / r_b increasing
        num = a.hazard(t);
        den = b.hazard(t);
        usable = num > 1e-300 && den > 1e-300 && a.sf(t) > kSfTruncation &&
                 b.sf(t) > kSfTruncation;
        break;
    }
    if (!usable || !std::isfinite(num) || !std::isfinite(den)) continue;
    pts.push_back({t, std::log(num) - std::log(den)});
  }
  if (pts.size() < 2) {
    CheckVerdict v;
    v.status = CheckStatus::Inconclusive;
    v.tolerance = kRatioTol;
    return v;
  }
  double maxabs = 0.0;
  for (const auto& p : pts) maxabs = std::max(maxabs, std::fabs(p.m));
  VerdictAccumulator acc(kRatioTol, 1e-12 * std::max(1.0, maxabs));
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double scale = std::max({std::fabs(pts[i].m), std::fabs(pts[i + 1].m), 1.0});
    const double tol = kRatioTol * scale;
    acc.observe(pts[i].t, pts[i].m, pts[i + 1].m, tol, tol);
  }
  return acc.finish();
}

OrderChainReport order_chain_check(const LifetimeLaw& a, const LifetimeLaw& b,
                                   const EvaluationGrid& grid) {
  OrderChainReport rep;
  rep.verdicts[OrderRelation::ST] = order_verdict(a, b, OrderRelation::ST, grid);
  rep.verdicts[OrderRelation::HR] = order_verdict(a, b, OrderRelation::HR, grid);
  rep.verdicts[OrderRelation::RH] = order_verdict(a, b, OrderRelation::RH, grid);
  if (a.pdf && b.pdf)
    rep.verdicts[OrderRelation::LR] = order_verdict(a, b, OrderRelation::LR, grid);
  if (a.hazard && b.hazard)
    rep.verdicts[OrderRelation::RHR] = order_verdict(a, b, OrderRelation::RHR, grid);

  auto holds = [&](OrderRelation r) {
    auto it = rep.verdicts.find(r);
    return it != rep.verdicts.end() && it->second.holds();
  };
  auto failed = [&](OrderRelation r) {
    auto it = rep.verdicts.find(r);
    return it != rep.verdicts.end() && it->second.failed();
  };
  if (holds(OrderRelation::LR) && failed(OrderRelation::HR))
    rep.violations.push_back("lr holds but hr fails");
  if (holds(OrderRelation::LR) && failed(OrderRelation::RH))
    rep.violations.push_back("lr holds but rh fails");
  if (holds(OrderRelation::HR) && failed(OrderRelation::ST))
    rep.violations.push_back("hr holds but st fails");
  if (holds(OrderRelation::RH) && failed(OrderRelation::ST))
    rep.violations.push_back("rh holds but st fails");
  return rep;
}

}  // namespace sysorder
