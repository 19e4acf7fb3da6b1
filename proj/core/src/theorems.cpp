#include "sysorder/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace sysorder {

namespace {

int severity(CheckStatus s) {
  switch (s) {
    case CheckStatus::HoldsWithEquality: return 0;
    case CheckStatus::Holds: return 1;
    case CheckStatus::Inconclusive: return 2;
    case CheckStatus::Fails: return 3;
  }
  return 3;
}

CheckVerdict better(const CheckVerdict& a, const CheckVerdict& b) {
  return severity(a.status) <= severity(b.status) ? a : b;
}

CheckVerdict bool_verdict(bool ok) {
  CheckVerdict v;
  v.status = ok ? CheckStatus::Holds : CheckStatus::Fails;
  v.tolerance = 0.0;
  v.slack = ok ? 0.0 : 1.0;
  if (!ok) v.witnesses.push_back(Witness{0.0, 1.0, 0.0});
  return v;
}

std::vector<double> locations(const SystemSpec& s) {
  std::vector<double> v;
  v.reserve(s.size());
  for (const auto& c : s.components) v.push_back(c.location());
  return v;
}

std::vector<double> scales(const SystemSpec& s) {
  std::vector<double> v;
  v.reserve(s.size());
  for (const auto& c : s.components) v.push_back(c.scale());
  return v;
}

std::vector<double> reciprocals(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = 1.0 / v[i];
  return r;
}

const BaselineDistribution& system_baseline(const SystemSpec& s) {
  const auto& b0 = s.components.front().baseline();
  for (const auto& c : s.components)
    if (!(c.baseline() == b0))
      throw DomainError("theorem case: components of one system must share a baseline");
  return b0;
}

// ---------------------------------------------------------------------------
// Descriptor catalog
// ---------------------------------------------------------------------------

struct IdTraits {
  Structure structure;
  bool dependent;
  bool outlier;
  bool same_baseline;
  bool shared_location;
  bool shared_scale;
  bool scalar_location;
  int sub_cases;
  OrderRelation conclusion;
  bool reversed;
  bool flagged;
  bool direction_question;
  const char* summary;
  const char* roles;
};

IdTraits traits(TheoremId id) {
  using S = Structure;
  using O = OrderRelation;
  switch (id) {
    case TheoremId::T1:
      return {S::Series, true, false, false, true, false, false, 1, O::ST, false, false,
              false,
              "dependent series: super-additive phi2 o psi1, log-concave psi, X <=st Y, "
              "decreasing hazard; 1/sigma weakly supermajorized by 1/xi gives "
              "X(1:n) <=st Y(1:n)",
              "shared lambda; sigma vs xi vary; psi1/psi2; F,G"};
    case TheoremId::T2:
      return {S::Series, true, false, false, true, false, false, 1, O::ST, false, false,
              false,
              "dependent series: log-convex psi, increasing hazard; 1/sigma weakly "
              "submajorizes 1/xi gives X(1:n) <=st Y(1:n)",
              "shared lambda; sigma vs xi vary; psi1/psi2; F,G"};
    case TheoremId::T3:
      return {S::Series, true, false, false, true, false, false, 2, O::ST, false, false,
              false,
              "dependent series, p-larger (u r decreasing) and reciprocal (u^2 r "
              "decreasing) scale variants give X(1:n) <=st Y(1:n)",
              "shared lambda; sigma vs xi vary; psi1/psi2; F,G"};
    case TheoremId::T4:
      return {S::Series, true, false, false, false, true, false, 1, O::ST, false, false,
              true,
              "dependent series, location variant: u r decreasing, lambda below mu in "
              "weak submajorization gives X(1:n) <=st Y(1:n)",
              "shared sigma; lambda vs mu vary; psi1/psi2; F,G"};
    case TheoremId::T5:
      return {S::Series, true, false, false, false, true, false, 1, O::ST, false, false,
              true,
              "dependent series, location variant: log-convex psi, increasing hazard, "
              "lambda weakly supermajorizes mu gives X(1:n) <=st Y(1:n)",
              "shared sigma; lambda vs mu vary; psi1/psi2; F,G"};
    case TheoremId::T6:
      return {S::Series, false, false, false, true, false, false, 5, O::HR, false, false,
              false,
              "independent series: X <=hr Y plus concave-side u r shape conditions; "
              "m/weak/p/rm orderings of 1/sigma vs 1/xi give X(1:n) <=hr Y(1:n)",
              "shared lambda; sigma vs xi vary; F,G"};
    case TheoremId::T7:
      return {S::Series, false, false, false, true, false, false, 5, O::HR, false, false,
              false,
              "independent series: X <=hr Y plus convex-side u r shape conditions; "
              "reversed m/weak/p/rm orderings give X(1:n) <=hr Y(1:n)",
              "shared lambda; sigma vs xi vary; F,G"};
    case TheoremId::T8:
      return {S::Series, false, false, true, true, false, false, 1, O::RHR, false, false,
              false,
              "independent series, one baseline: hazard r-concave for r = 1,2,3; "
              "1/sigma majorized by 1/xi gives X(1:n) <=R-hr Y(1:n)",
              "shared lambda and baseline; sigma vs xi vary"};
    case TheoremId::T9:
      return {S::Series, false, true, true, true, false, false, 1, O::RHR, true, true,
              false,
              "multiple outlier: u r decreasing, hazard log-concave and 2-log-convex; "
              "block 1/sigma majorized by 1/xi gives X(1:n) >=R-hr Y(1:n)",
              "block lambda shared; block sigma vs xi vary; one baseline"};
    case TheoremId::T10:
      return {S::Series, false, true, true, true, false, false, 1, O::RHR, true, true,
              false,
              "multiple outlier: u r increasing, hazard decreasing, log-concave and "
              "2-log-concave; block 1/sigma majorizes 1/xi gives X(1:n) >=R-hr Y(1:n)",
              "block lambda shared; block sigma vs xi vary; one baseline"};
    case TheoremId::T11:
      return {S::Series, false, true, true, true, false, false, 1, O::LR, false, true,
              false,
              "multiple outlier: u r decreasing and concave, hazard log-concave and "
              "2-log-convex; block 1/sigma majorized by 1/xi gives X(1:n) <=lr Y(1:n)",
              "block lambda shared; block sigma vs xi vary; one baseline"};
    case TheoremId::T12:
      return {S::Series, false, true, true, true, false, false, 1, O::LR, false, true,
              false,
              "multiple outlier: u r increasing and convex, hazard decreasing, "
              "log-concave, 2-log-convex; block 1/sigma majorizes 1/xi gives "
              "X(1:n) <=lr Y(1:n)",
              "block lambda shared; block sigma vs xi vary; one baseline"};
    case TheoremId::T13:
      return {S::Series, false, false, false, false, true, false, 2, O::HR, false, false,
              false,
              "independent series, locations vary: X <=hr Y, monotone hazard with "
              "matching u^2 r' condition; weak submajorization of locations gives "
              "X(1:n) <=hr Y(1:n)",
              "shared sigma; lambda vs mu vary; F,G"};
    case TheoremId::T14:
      return {S::Series, false, false, true, false, true, false, 2, O::RHR, true, false,
              false,
              "independent series, one baseline: monotone+curved hazard, u^2 r' and "
              "u^3 r'' conditions; weak submajorization of locations gives "
              "X(1:n) >=R-hr Y(1:n)",
              "shared sigma and baseline; lambda vs mu vary"};
    case TheoremId::T15:
      return {S::Series, false, false, true, false, true, false, 2, O::LR, false, false,
              false,
              "independent series, one baseline: hypotheses of the location R-hr "
              "theorem give X(1:n) <=lr Y(1:n)",
              "shared sigma and baseline; lambda vs mu vary"};
    case TheoremId::T16:
      return {S::Parallel, true, false, false, true, false, true, 1, O::ST, true, false,
              false,
              "dependent parallel, one scalar location: log-convex psi, X >=st Y, "
              "decreasing reversed hazard; 1/sigma weakly supermajorizes 1/xi gives "
              "X(n:n) >=st Y(n:n)",
              "scalar lambda; sigma vs xi vary; psi1/psi2; F,G"};
    case TheoremId::T17:
      return {S::Parallel, true, false, false, true, false, false, 2, O::ST, true, false,
              false,
              "dependent parallel: log-convex psi, X >=st Y, u r (resp. u^2 r) "
              "decreasing; p-larger (resp. reciprocal) ordering of 1/sigma over 1/xi "
              "gives X(n:n) >=st Y(n:n)",
              "shared lambda; sigma vs xi vary; psi1/psi2; F,G"};
    case TheoremId::T18:
      return {S::Parallel, true, false, false, false, true, false, 1, O::ST, true, false,
              false,
              "dependent parallel, locations vary: log-convex psi, u r decreasing, "
              "X >=st Y; lambda weakly submajorizes mu gives X(n:n) >=st Y(n:n)",
              "shared sigma; lambda vs mu vary; psi1/psi2; F,G"};
  }
  throw DomainError("traits: bad theorem id");
}

std::vector<std::string> hypothesis_names(TheoremId id, int sub) {
  switch (id) {
    case TheoremId::T1:
      return {"cones", "superadditive", "psi_log_concave", "baseline_st",
              "shape_r_decreasing", "majorization"};
    case TheoremId::T2:
      return {"cones", "superadditive", "psi_log_convex", "baseline_st",
              "shape_r_increasing", "majorization"};
    case TheoremId::T3:
      if (sub == 1)
        return {"cones", "superadditive", "psi_log_concave", "baseline_st",
                "shape_u_r_decreasing", "majorization"};
      return {"cones", "superadditive", "psi_log_concave", "baseline_st",
              "shape_u2_r_decreasing", "majorization"};
    case TheoremId::T4:
      return {"cones", "superadditive", "psi_log_concave", "baseline_st",
              "shape_u_r_decreasing", "majorization"};
    case TheoremId::T5:
      return {"cones", "superadditive", "psi_log_convex", "baseline_st",
              "shape_r_increasing", "majorization"};
    case TheoremId::T6:
      switch (sub) {
        case 1: return {"cones", "baseline_hr", "shape_u_r_concave", "majorization"};
        case 2:
          return {"cones", "baseline_hr", "shape_u_r_increasing", "shape_u_r_concave",
                  "majorization"};
        case 3:
          return {"cones", "baseline_hr", "shape_u_r_decreasing", "shape_u_r_concave",
                  "majorization"};
        case 4:
          return {"cones", "baseline_hr", "shape_u_r_increasing",
                  "shape_u_dur_decreasing", "majorization"};
        default:
          return {"cones", "baseline_hr", "shape_u_r_increasing",
                  "shape_u2_rprime_decreasing", "majorization"};
      }
    case TheoremId::T7:
      switch (sub) {
        case 1: return {"cones", "baseline_hr", "shape_u_r_convex", "majorization"};
        case 2:
          return {"cones", "baseline_hr", "shape_u_r_increasing", "shape_u_r_convex",
                  "majorization"};
        case 3:
          return {"cones", "baseline_hr", "shape_u_r_decreasing", "shape_u_r_convex",
                  "majorization"};
        case 4:
          return {"cones", "baseline_hr", "shape_u_r_decreasing",
                  "shape_u_dur_increasing", "majorization"};
        default:
          return {"cones", "baseline_hr", "shape_u_r_decreasing",
                  "shape_u2_rprime_increasing", "majorization"};
      }
    case TheoremId::T8:
      return {"cones", "shape_r_1_concave", "shape_r_2_concave", "shape_r_3_concave",
              "majorization"};
    case TheoremId::T9:
      return {"cones", "shape_u_r_decreasing", "shape_r_log_concave",
              "shape_r_2_log_convex", "majorization"};
    case TheoremId::T10:
      return {"cones", "shape_u_r_increasing", "shape_r_decreasing",
              "shape_r_log_concave", "shape_r_2_log_concave", "majorization"};
    case TheoremId::T11:
      return {"cones", "shape_u_r_decreasing", "shape_u_r_concave",
              "shape_r_log_concave", "shape_r_2_log_convex", "majorization"};
    case TheoremId::T12:
      return {"cones", "shape_u_r_increasing", "shape_u_r_convex", "shape_r_decreasing",
              "shape_r_log_concave", "shape_r_2_log_convex", "majorization"};
    case TheoremId::T13:
      if (sub == 1)
        return {"cones", "baseline_hr", "shape_r_increasing",
                "shape_u2_rprime_decreasing", "majorization"};
      return {"cones", "baseline_hr", "shape_r_decreasing",
              "shape_u2_rprime_increasing", "majorization"};
    case TheoremId::T14:
    case TheoremId::T15:
      if (sub == 1)
        return {"cones", "shape_r_increasing", "shape_r_concave",
                "shape_u2_rprime_decreasing", "shape_u3_rsecond_increasing",
                "majorization"};
      return {"cones", "shape_r_decreasing", "shape_r_convex",
              "shape_u2_rprime_increasing", "shape_u3_rsecond_decreasing",
              "majorization"};
    case TheoremId::T16:
      return {"cones", "superadditive", "psi_log_convex", "baseline_st_reversed",
              "shape_rrev_decreasing", "majorization"};
    case TheoremId::T17:
      if (sub == 1)
        return {"cones", "superadditive", "psi_log_convex", "baseline_st_reversed",
                "shape_u_r_decreasing", "majorization"};
      return {"cones", "superadditive", "psi_log_convex", "baseline_st_reversed",
              "shape_u2_r_decreasing", "majorization"};
    case TheoremId::T18:
      return {"cones", "superadditive", "psi_log_convex", "baseline_st_reversed",
              "shape_u_r_decreasing", "majorization"};
  }
  throw DomainError("hypothesis_names: bad theorem id");
}

}  // namespace

std::string to_string(TheoremId id) {
  return "T" + std::to_string(static_cast<int>(id) + 1);
}

TheoremId theorem_id_from_string(const std::string& s) {
  if (s.size() >= 2 && (s[0] == 'T' || s[0] == 't')) {
    const int k = std::stoi(s.substr(1));
    if (k >= 1 && k <= kTheoremCount) return static_cast<TheoremId>(k - 1);
  }
  throw ConfigError("unknown theorem id: " + s);
}

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (int i = 0; i < kTheoremCount; ++i) v.push_back(static_cast<TheoremId>(i));
    return v;
  }();
  return ids;
}

const char* to_string(Overall o) {
  switch (o) {
    case Overall::Verified: return "verified";
    case Overall::VacuouslySkipped: return "vacuously_skipped";
    case Overall::Refuted: return "refuted";
    case Overall::Inconclusive: return "inconclusive";
  }
  return "?";
}

const std::vector<TheoremDescriptor>& catalog() {
  static const std::vector<TheoremDescriptor> cat = [] {
    std::vector<TheoremDescriptor> v;
    for (TheoremId id : all_theorem_ids()) {
      const IdTraits t = traits(id);
      TheoremDescriptor d;
      d.id = id;
      d.key = to_string(id);
      d.summary = t.summary;
      d.structure = t.structure;
      d.dependent = t.dependent;
      d.multiple_outlier = t.outlier;
      d.same_baseline = t.same_baseline;
      d.shared_location = t.shared_location;
      d.shared_scale = t.shared_scale;
      d.scalar_location = t.scalar_location;
      d.sub_cases = t.sub_cases;
      for (int s = 1; s <= t.sub_cases; ++s)
        d.sub_case_hypotheses.push_back(hypothesis_names(id, s));
      d.conclusion = t.conclusion;
      d.conclusion_reversed = t.reversed;
      d.interpretation_flagged = t.flagged;
      d.direction_question = t.direction_question;
      d.parameter_roles = t.roles;
      v.push_back(std::move(d));
    }
    return v;
  }();
  return cat;
}

const TheoremDescriptor& descriptor(TheoremId id) {
  return catalog()[static_cast<std::size_t>(id)];
}

// ---------------------------------------------------------------------------
// check_case
// ---------------------------------------------------------------------------

namespace {

CheckVerdict psi_log_shape(const ArchimedeanGenerator& g, LogShape shape) {
  const double hi = g.phi(1e-8);
  ScalarFunction psi_fn{[g](double t) { return g.psi(t); }, 0.0, g.cap()};
  const auto grid = EvaluationGrid::log_spaced(1e-4 * hi, hi, 256);
  return log_shape_verdict(psi_fn, shape, grid);
}

CheckVerdict either_shape(const BaselineDistribution& bx, const BaselineDistribution& by,
                          CompositeCondition cond, std::size_t grid_points,
                          TwoLogInterpretation interp) {
  const CheckVerdict vx =
      composite_condition(bx, cond, default_shape_grid(bx, grid_points), interp);
  if (bx == by) return vx;
  const CheckVerdict vy =
      composite_condition(by, cond, default_shape_grid(by, grid_points), interp);
  return better(vx, vy);
}

CheckVerdict baseline_order_verdict(const BaselineDistribution& bx,
                                    const BaselineDistribution& by, OrderRelation rel,
                                    bool reversed) {
  const LSDistribution x(bx, 0.0, 1.0), y(by, 0.0, 1.0);
  const LifetimeLaw lx = make_law(x), ly = make_law(y);
  const auto grid = make_order_grid(lx, ly, 512);
  return reversed ? order_verdict(ly, lx, rel, grid) : order_verdict(lx, ly, rel, grid);
}

struct CaseVectors {
  std::vector<double> lambda_x, lambda_y;
  std::vector<double> sigma, xi;
  std::vector<double> recip_sigma, recip_xi;
};

CaseVectors case_vectors(const TheoremCase& c) {
  CaseVectors v;
  v.lambda_x = locations(c.x_system);
  v.lambda_y = locations(c.y_system);
  v.sigma = scales(c.x_system);
  v.xi = scales(c.y_system);
  v.recip_sigma = reciprocals(v.sigma);
  v.recip_xi = reciprocals(v.xi);
  return v;
}

void validate_case(const TheoremCase& c, const TheoremDescriptor& d) {
  if (c.sub_case < 1 || c.sub_case > d.sub_cases)
    throw DomainError("theorem case: sub_case out of range for " + d.key);
  if (c.x_system.size() != c.y_system.size())
    throw DomainError("theorem case: systems must have the same size");
  if (c.x_system.structure != d.structure || c.y_system.structure != d.structure)
    throw DomainError("theorem case: wrong system structure for " + d.key);
  if (d.dependent) {
    if (!c.x_system.copula || !c.y_system.copula)
      throw DomainError("theorem case: " + d.key + " needs Archimedean coupling");
  } else {
    if (!c.x_system.independent() || !c.y_system.independent())
      throw DomainError("theorem case: " + d.key + " needs independent components");
  }
  const auto& bx = system_baseline(c.x_system);
  const auto& by = system_baseline(c.y_system);
  if (d.same_baseline && !(bx == by))
    throw DomainError("theorem case: " + d.key + " requires one common baseline");
  const CaseVectors v = case_vectors(c);
  if (d.shared_location && v.lambda_x != v.lambda_y)
    throw DomainError("theorem case: " + d.key + " requires a shared location vector");
  if (d.shared_scale && v.sigma != v.xi)
    throw DomainError("theorem case: " + d.key + " requires a shared scale vector");
  if (d.scalar_location) {
    for (double l : v.lambda_x)
      if (l != v.lambda_x.front())
        throw DomainError("theorem case: " + d.key + " requires one scalar location");
  }
  if (d.multiple_outlier) {
    const std::size_t n = c.x_system.size();
    std::size_t n1 = 1;
    while (n1 < n && v.sigma[n1] == v.sigma[0] && v.lambda_x[n1] == v.lambda_x[0] &&
           v.xi[n1] == v.xi[0])
      ++n1;
    for (std::size_t i = n1; i < n; ++i)
      if (v.sigma[i] != v.sigma[n1] || v.lambda_x[i] != v.lambda_x[n1] ||
          v.xi[i] != v.xi[n1])
        throw DomainError("theorem case: " + d.key + " requires two parameter blocks");
  }
}

std::vector<double> block_values(const std::vector<double>& expanded) {
  std::vector<double> b{expanded.front()};
  for (double e : expanded)
    if (e != b.front()) {
      b.push_back(e);
      break;
    }
  if (b.size() == 1) b.push_back(b.front());
  return b;
}

CheckVerdict cone_verdict(const TheoremCase& c, const TheoremDescriptor& d,
                          const CaseVectors& v) {
  bool ok = true;
  auto check = [&](const std::vector<double>& vec) { ok = ok && in_cone(vec, c.cone); };
  if (d.multiple_outlier) {
    // Cone membership applies to the block pairs.
    check(block_values(v.lambda_x));
    check(block_values(v.sigma));
    check(block_values(v.xi));
  } else {
    check(v.lambda_x);
    check(v.lambda_y);
    check(v.sigma);
    check(v.xi);
  }
  return bool_verdict(ok);
}

struct MajorizationSpec {
  const std::vector<double>* x;
  const std::vector<double>* y;
  MajorizationRelation rel;
};

MajorizationSpec majorization_spec(TheoremId id, int sub, const CaseVectors& v) {
  using R = MajorizationRelation;
  switch (id) {
    case TheoremId::T1: return {&v.recip_xi, &v.recip_sigma, R::WeakSuper};
    case TheoremId::T2: return {&v.recip_sigma, &v.recip_xi, R::WeakSub};
    case TheoremId::T3:
      return sub == 1 ? MajorizationSpec{&v.recip_xi, &v.recip_sigma, R::PLarger}
                      : MajorizationSpec{&v.recip_xi, &v.recip_sigma, R::RM};
    case TheoremId::T4: return {&v.lambda_y, &v.lambda_x, R::WeakSub};
    case TheoremId::T5: return {&v.lambda_x, &v.lambda_y, R::WeakSuper};
    case TheoremId::T6:
      switch (sub) {
        case 1: return {&v.recip_xi, &v.recip_sigma, R::M};
        case 2: return {&v.recip_xi, &v.recip_sigma, R::WeakSuper};
        case 3: return {&v.recip_xi, &v.recip_sigma, R::WeakSub};
        case 4: return {&v.recip_xi, &v.recip_sigma, R::PLarger};
        default: return {&v.recip_xi, &v.recip_sigma, R::RM};
      }
    case TheoremId::T7:
      switch (sub) {
        case 1: return {&v.recip_sigma, &v.recip_xi, R::M};
        case 2: return {&v.recip_sigma, &v.recip_xi, R::WeakSub};
        case 3: return {&v.recip_sigma, &v.recip_xi, R::WeakSuper};
        case 4: return {&v.recip_sigma, &v.recip_xi, R::PLarger};
        default: return {&v.recip_sigma, &v.recip_xi, R::RM};
      }
    case TheoremId::T8: return {&v.recip_xi, &v.recip_sigma, R::M};
    case TheoremId::T9: return {&v.recip_xi, &v.recip_sigma, R::M};
    case TheoremId::T10: return {&v.recip_sigma, &v.recip_xi, R::M};
    case TheoremId::T11: return {&v.recip_xi, &v.recip_sigma, R::M};
    case TheoremId::T12: return {&v.recip_sigma, &v.recip_xi, R::M};
    case TheoremId::T13:
      return sub == 1 ? MajorizationSpec{&v.lambda_y, &v.lambda_x, R::WeakSub}
                      : MajorizationSpec{&v.lambda_x, &v.lambda_y, R::WeakSub};
    case TheoremId::T14:
    case TheoremId::T15:
      return sub == 1 ? MajorizationSpec{&v.lambda_y, &v.lambda_x, R::WeakSub}
                      : MajorizationSpec{&v.lambda_x, &v.lambda_y, R::WeakSub};
    case TheoremId::T16: return {&v.recip_sigma, &v.recip_xi, R::WeakSuper};
    case TheoremId::T17:
      return sub == 1 ? MajorizationSpec{&v.recip_sigma, &v.recip_xi, R::PLarger}
                      : MajorizationSpec{&v.recip_sigma, &v.recip_xi, R::RM};
    case TheoremId::T18: return {&v.lambda_x, &v.lambda_y, R::WeakSub};
  }
  throw DomainError("majorization_spec: bad id");
}

std::vector<CompositeCondition> shape_conditions(TheoremId id, int sub) {
  using C = CompositeCondition;
  switch (id) {
    case TheoremId::T1: return {C::HazardDecreasing};
    case TheoremId::T2: return {C::HazardIncreasing};
    case TheoremId::T3:
      return sub == 1 ? std::vector<C>{C::URDecreasing}
                      : std::vector<C>{C::U2RDecreasing};
    case TheoremId::T4: return {C::URDecreasing};
    case TheoremId::T5: return {C::HazardIncreasing};
    case TheoremId::T6:
      switch (sub) {
        case 1: return {C::URConcave};
        case 2: return {C::URIncreasing, C::URConcave};
        case 3: return {C::URDecreasing, C::URConcave};
        case 4: return {C::URIncreasing, C::UDURDecreasing};
        default: return {C::URIncreasing, C::U2RPrimeDecreasing};
      }
    case TheoremId::T7:
      switch (sub) {
        case 1: return {C::URConvex};
        case 2: return {C::URIncreasing, C::URConvex};
        case 3: return {C::URDecreasing, C::URConvex};
        case 4: return {C::URDecreasing, C::UDURIncreasing};
        default: return {C::URDecreasing, C::U2RPrimeIncreasing};
      }
    case TheoremId::T8:
      return {C::RConcaveOrder1, C::RConcaveOrder2, C::RConcaveOrder3};
    case TheoremId::T9:
      return {C::URDecreasing, C::HazardLogConcave, C::TwoLogConvex};
    case TheoremId::T10:
      return {C::URIncreasing, C::HazardDecreasing, C::HazardLogConcave,
              C::TwoLogConcave};
    case TheoremId::T11:
      return {C::URDecreasing, C::URConcave, C::HazardLogConcave, C::TwoLogConvex};
    case TheoremId::T12:
      return {C::URIncreasing, C::URConvex, C::HazardDecreasing, C::HazardLogConcave,
              C::TwoLogConvex};
    case TheoremId::T13:
      return sub == 1
                 ? std::vector<C>{C::HazardIncreasing, C::U2RPrimeDecreasing}
                 : std::vector<C>{C::HazardDecreasing, C::U2RPrimeIncreasing};
    case TheoremId::T14:
    case TheoremId::T15:
      return sub == 1 ? std::vector<C>{C::HazardIncreasing, C::HazardConcave,
                                       C::U2RPrimeDecreasing, C::U3RSecondIncreasing}
                      : std::vector<C>{C::HazardDecreasing, C::HazardConvex,
                                       C::U2RPrimeIncreasing, C::U3RSecondDecreasing};
    case TheoremId::T16: return {C::ReversedHazardDecreasing};
    case TheoremId::T17:
      return sub == 1 ? std::vector<C>{C::URDecreasing}
                      : std::vector<C>{C::U2RDecreasing};
    case TheoremId::T18: return {C::URDecreasing};
  }
  throw DomainError("shape_conditions: bad id");
}

std::string shape_name(CompositeCondition c) {
  return std::string("shape_") + to_string(c);
}

std::vector<HypothesisVerdict> hypothesis_battery(const TheoremCase& c,
                                                  const CheckOptions& opt) {
  const TheoremDescriptor& d = descriptor(c.id);
  validate_case(c, d);
  const CaseVectors v = case_vectors(c);
  const auto& bx = system_baseline(c.x_system);
  const auto& by = system_baseline(c.y_system);

  std::vector<HypothesisVerdict> out;
  out.push_back({"cones", cone_verdict(c, d, v)});

  if (d.dependent) {
    out.push_back(
        {"superadditive", check_superadditive(*c.x_system.copula, *c.y_system.copula)});
    const bool concave_side =
        c.id == TheoremId::T1 || c.id == TheoremId::T3 || c.id == TheoremId::T4;
    const LogShape shape = concave_side ? LogShape::LogConcave : LogShape::LogConvex;
    const CheckVerdict vx = psi_log_shape(*c.x_system.copula, shape);
    const CheckVerdict vy = psi_log_shape(*c.y_system.copula, shape);
    out.push_back({concave_side ? "psi_log_concave" : "psi_log_convex", better(vx, vy)});
  }

  if (!d.same_baseline) {
    switch (c.id) {
      case TheoremId::T6:
      case TheoremId::T7:
      case TheoremId::T13:
        out.push_back(
            {"baseline_hr", baseline_order_verdict(bx, by, OrderRelation::HR, false)});
        break;
      case TheoremId::T16:
      case TheoremId::T17:
      case TheoremId::T18:
        out.push_back({"baseline_st_reversed",
                       baseline_order_verdict(bx, by, OrderRelation::ST, true)});
        break;
      default:
        out.push_back(
            {"baseline_st", baseline_order_verdict(bx, by, OrderRelation::ST, false)});
        break;
    }
  }

  for (CompositeCondition cond : shape_conditions(c.id, c.sub_case))
    out.push_back(
        {shape_name(cond), either_shape(bx, by, cond, opt.shape_grid_points, c.two_log)});

  const MajorizationSpec m = majorization_spec(c.id, c.sub_case, v);
  out.push_back({"majorization", bool_verdict(majorize(*m.x, *m.y, m.rel))});
  return out;
}

CheckVerdict conclusion_verdict(const TheoremCase& c, const TheoremDescriptor& d,
                                const CheckOptions& opt) {
  const LifetimeLaw lx = make_law(c.x_system);
  const LifetimeLaw ly = make_law(c.y_system);
  EvaluationGrid grid = make_order_grid(lx, ly, opt.conclusion_levels);
  const double alive =
      std::max(c.x_system.alive_threshold(), c.y_system.alive_threshold());
  const double t_lo = alive + 1e-6 * std::max(1.0, std::fabs(alive));
  grid = grid.restricted_above(t_lo);
  // Quantile grids thin out when little mass sits above the threshold; pad
  // the asserted domain with linear points up to the joint 0.999 quantile.
  const double t_hi = std::max(lx.quantile(0.999), ly.quantile(0.999));
  if (t_hi > t_lo) {
    const auto pad = EvaluationGrid::linear(t_lo + 1e-9 * std::max(1.0, t_lo),
                                            t_hi, 65);
    grid.points.insert(grid.points.end(), pad.points.begin(), pad.points.end());
    grid.dedupe();
  }
  if (grid.size() < 8) {
    CheckVerdict v;
    v.status = CheckStatus::Inconclusive;
    return v;
  }
  return d.conclusion_reversed ? order_verdict(ly, lx, d.conclusion, grid)
                               : order_verdict(lx, ly, d.conclusion, grid);
}

std::string conclusion_label(const TheoremDescriptor& d) {
  const char* idx = d.structure == Structure::Series ? "(1:n)" : "(n:n)";
  std::string rel = to_string(d.conclusion);
  if (d.conclusion_reversed)
    return "X" + std::string(idx) + " >=_" + rel + " Y" + idx;
  return "X" + std::string(idx) + " <=_" + rel + " Y" + idx;
}

}  // namespace

TheoremReport check_case(const TheoremCase& c, const CheckOptions& opt) {
  const TheoremDescriptor& d = descriptor(c.id);
  TheoremReport rep;
  rep.id = c.id;
  rep.sub_case = c.sub_case;
  rep.hypotheses = hypothesis_battery(c, opt);
  rep.conclusion = conclusion_verdict(c, d, opt);
  rep.interpretation_dependent = d.interpretation_flagged;
  rep.direction_question = d.direction_question;
  rep.conclusion_label = conclusion_label(d);

  bool all_hold = true;
  for (const auto& h : rep.hypotheses) all_hold = all_hold && h.verdict.holds();
  if (!all_hold) {
    rep.overall = Overall::VacuouslySkipped;
  } else if (rep.conclusion.holds()) {
    rep.overall = Overall::Verified;
  } else if (rep.conclusion.failed() && rep.conclusion.slack > opt.refute_slack) {
    rep.overall = Overall::Refuted;
  } else {
    rep.overall = Overall::Inconclusive;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// random_case
// ---------------------------------------------------------------------------

namespace {

struct BaselinePair {
  BaselineDistribution x;
  BaselineDistribution y;
};

// st/hr-ordered pairs inside one family; `x_below` selects X <= Y.
BaselinePair pareto_pair(Rng& rng, bool x_below, double gamma_floor = 0.5) {
  const double g_small = rng.uniform(std::max(gamma_floor, 0.8), 2.2);
  const double g_big = g_small + rng.uniform(0.0, 1.2);
  // Larger gamma = steeper survival decay = stochastically smaller.
  if (x_below) return {BaselineDistribution::pareto(g_big),
                       BaselineDistribution::pareto(g_small)};
  return {BaselineDistribution::pareto(g_small), BaselineDistribution::pareto(g_big)};
}

BaselinePair pareto_drift_pair(Rng& rng, bool negative_b, bool x_below) {
  const double s = rng.uniform(1.0, 2.0);
  const double a_small = rng.uniform(1.0, 2.0);
  const double a_big = a_small + rng.uniform(0.0, 1.0);
  const double b = negative_b ? -rng.uniform(0.15, 0.6) * a_small * 0.9
                              : rng.uniform(0.2, 1.2);
  const double ax = x_below ? a_big : a_small;
  const double ay = x_below ? a_small : a_big;
  return {BaselineDistribution::pareto_drift(ax, b, s),
          BaselineDistribution::pareto_drift(ay, b, s)};
}

BaselinePair power_decay_pair(Rng& rng, bool x_below) {
  const double q = rng.uniform(2.0, 2.4);
  const double k_small = rng.uniform(13.0, 20.0);
  const double k_big = k_small + rng.uniform(0.0, 6.0);
  const double kx = x_below ? k_big : k_small;
  const double ky = x_below ? k_small : k_big;
  return {BaselineDistribution::power_decay_hazard(kx, q),
          BaselineDistribution::power_decay_hazard(ky, q)};
}

BaselinePair gompertz_pair(Rng& rng) {
  const double c_small = rng.uniform(0.3, 1.2);
  const double c_big = c_small + rng.uniform(0.0, 0.8);
  return {BaselineDistribution::gompertz(c_big), BaselineDistribution::gompertz(c_small)};
}

BaselinePair saturating_pair(Rng& rng, bool m_negative, bool identical) {
  const double s = rng.uniform(1.0, 2.0);
  const double l_small = rng.uniform(1.0, 2.0);
  const double l_big = identical ? l_small : l_small + rng.uniform(0.0, 0.8);
  const double m = (m_negative ? -1.0 : 1.0) * rng.uniform(0.15, 0.6) * l_small * 0.9;
  return {BaselineDistribution::saturating_hazard(l_big, m, s),
          BaselineDistribution::saturating_hazard(l_small, m, s)};
}

BaselinePair identical(BaselineDistribution b) { return {b, b}; }

BaselinePair draw_baselines(TheoremId id, int sub, Rng& rng) {
  switch (id) {
    case TheoremId::T1: {
      const auto pick = rng.index(3);
      if (pick == 0) return pareto_pair(rng, true);
      if (pick == 1) return identical(BaselineDistribution::weibull(rng.uniform(0.35, 1.0)));
      return identical(BaselineDistribution::pareto(rng.uniform(0.8, 2.5)));
    }
    case TheoremId::T2: {
      const auto pick = rng.index(4);
      if (pick == 0) return gompertz_pair(rng);
      if (pick == 1) return identical(BaselineDistribution::weibull(rng.uniform(1.0, 3.0)));
      if (pick == 2) return identical(BaselineDistribution::logistic_positive());
      return identical(BaselineDistribution::exponential());
    }
    case TheoremId::T3:
      if (sub == 1)
        return rng.index(2) == 0 ? pareto_pair(rng, true)
                                 : pareto_drift_pair(rng, false, true);
      return power_decay_pair(rng, true);
    case TheoremId::T4:
      return rng.index(2) == 0 ? pareto_pair(rng, true)
                               : pareto_drift_pair(rng, false, true);
    case TheoremId::T5: {
      const auto pick = rng.index(3);
      if (pick == 0) return gompertz_pair(rng);
      if (pick == 1) return identical(BaselineDistribution::weibull(rng.uniform(1.0, 3.0)));
      return identical(BaselineDistribution::exponential());
    }
    case TheoremId::T6:
      switch (sub) {
        case 1: {
          const auto pick = rng.index(3);
          if (pick == 0) return pareto_drift_pair(rng, true, true);
          if (pick == 1)
            return identical(BaselineDistribution::weibull(rng.uniform(0.4, 1.0)));
          return pareto_pair(rng, true);
        }
        case 2:
          return rng.index(2) == 0
                     ? pareto_drift_pair(rng, true, true)
                     : identical(BaselineDistribution::weibull(rng.uniform(0.4, 0.95)));
        case 3: return pareto_pair(rng, true);
        default:
          return rng.index(2) == 0 ? pareto_drift_pair(rng, true, true)
                                   : pareto_pair(rng, true);
      }
    case TheoremId::T7:
      switch (sub) {
        case 1: {
          const auto pick = rng.index(3);
          if (pick == 0) return pareto_drift_pair(rng, false, true);
          if (pick == 1)
            return identical(BaselineDistribution::weibull(rng.uniform(1.05, 3.0)));
          return pareto_pair(rng, true);
        }
        case 2:
          return identical(BaselineDistribution::weibull(rng.uniform(1.05, 3.0)));
        default:
          return rng.index(2) == 0 ? pareto_drift_pair(rng, false, true)
                                   : pareto_pair(rng, true);
      }
    case TheoremId::T8:
      if (rng.index(2) == 0) return identical(BaselineDistribution::exponential());
      else {
        const double a = rng.uniform(0.8, 2.0);
        const double slope = rng.uniform(0.0, 0.8) * a * a / 15.2;
        return identical(BaselineDistribution::linear_hazard(a, slope));
      }
    case TheoremId::T9: {
      const double k = rng.uniform(1.0, 1.5);
      const double rho = rng.uniform(8.5, 13.0);
      return identical(BaselineDistribution::decay_hazard(rho * k, k));
    }
    case TheoremId::T10: {
      if (rng.index(3) == 0) return identical(BaselineDistribution::exponential());
      const double k = rng.uniform(0.08, 0.4);
      const double rho = rng.uniform(20.0, 40.0);
      return identical(BaselineDistribution::decay_hazard(rho * k, k));
    }
    case TheoremId::T11: {
      const double k = rng.uniform(1.0, 1.3);
      const double rho = rng.uniform(16.0, 25.0);
      return identical(BaselineDistribution::decay_hazard(rho * k, k));
    }
    case TheoremId::T12:
      return identical(BaselineDistribution::exponential());
    case TheoremId::T13:
      if (rng.index(3) == 0) return identical(BaselineDistribution::exponential());
      return saturating_pair(rng, sub == 1, false);
    case TheoremId::T14:
    case TheoremId::T15:
      if (rng.index(3) == 0) return identical(BaselineDistribution::exponential());
      return saturating_pair(rng, sub == 1, true);
    case TheoremId::T16: {
      const auto pick = rng.index(4);
      if (pick == 0) return pareto_pair(rng, false);
      if (pick == 1) return identical(BaselineDistribution::weibull(rng.uniform(0.5, 2.5)));
      if (pick == 2) return identical(BaselineDistribution::frechet(rng.uniform(1.0, 3.0)));
      return identical(BaselineDistribution::exponential());
    }
    case TheoremId::T17:
      if (sub == 1) return pareto_pair(rng, false, 1.0);
      return power_decay_pair(rng, false);
    case TheoremId::T18:
      return rng.index(2) == 0 ? pareto_pair(rng, false)
                               : pareto_drift_pair(rng, false, false);
  }
  throw DomainError("draw_baselines: bad id");
}

struct CopulaPair {
  ArchimedeanGenerator psi1;
  ArchimedeanGenerator psi2;
};

// Pairs with super-additive phi2 o psi1 and the required log-shape on at
// least one generator.
CopulaPair draw_copulas(TheoremId id, Rng& rng) {
  const bool concave_side =
      id == TheoremId::T1 || id == TheoremId::T3 || id == TheoremId::T4;
  if (concave_side) {
    // The proofs lean on psi2's log-concavity alone; the printed "psi1 or
    // psi2" disjunction is refutable when only psi1 carries it, so the pool
    // keeps the shape on psi2. Natural members: independence (boundary) and
    // the negative-theta Clayton branch, which is strictly log-concave.
    const auto pick = rng.index(3);
    if (pick == 0)
      return {ArchimedeanGenerator::independence(),
              ArchimedeanGenerator::independence()};
    if (pick == 1) {
      const double t2 = -rng.uniform(0.03, 0.2);
      const double t1 = t2 - rng.uniform(0.0, 0.2 + t2 * 0.99);
      return {ArchimedeanGenerator::clayton(std::max(t1, -0.2)),
              ArchimedeanGenerator::clayton(t2)};
    }
    return {ArchimedeanGenerator::clayton(-rng.uniform(0.03, 0.2)),
            ArchimedeanGenerator::independence()};
  }
  const auto pick = rng.index(5);
  switch (pick) {
    case 0:
      return {ArchimedeanGenerator::independence(),
              ArchimedeanGenerator::clayton(rng.uniform(0.5, 4.0))};
    case 1:
      return {ArchimedeanGenerator::independence(),
              ArchimedeanGenerator::gumbel(rng.uniform(1.2, 3.0))};
    case 2: {
      const double t1 = rng.uniform(0.5, 2.5);
      return {ArchimedeanGenerator::clayton(t1),
              ArchimedeanGenerator::clayton(t1 + rng.uniform(0.0, 2.0))};
    }
    case 3: {
      const double t1 = rng.uniform(1.1, 2.2);
      return {ArchimedeanGenerator::gumbel(t1),
              ArchimedeanGenerator::gumbel(t1 + rng.uniform(0.0, 1.5))};
    }
    default:
      return {ArchimedeanGenerator::independence(),
              ArchimedeanGenerator::independence()};
  }
}

// Parameter widths per theorem: high-hazard baselines need narrow spreads or
// the series minimum dies before every component's support has even opened,
// leaving the t > max(edges) conclusion domain without probability mass.
struct DrawWidths {
  double scale = 0.8;
  double location = 0.5;
};

DrawWidths draw_widths(TheoremId id, int sub) {
  switch (id) {
    case TheoremId::T3:
      return sub == 2 ? DrawWidths{0.05, 0.05} : DrawWidths{0.25, 0.25};
    case TheoremId::T1:
    case TheoremId::T4:
    case TheoremId::T6:
    case TheoremId::T7:
      return {0.25, 0.25};
    case TheoremId::T8:
      return {0.2, 0.2};
    case TheoremId::T9:
    case TheoremId::T10:
    case TheoremId::T11:
      return {0.03, 0.02};
    case TheoremId::T13:
    case TheoremId::T14:
    case TheoremId::T15:
      return {0.25, 0.2};
    case TheoremId::T2:
    case TheoremId::T5:
    case TheoremId::T12:
      return {0.5, 0.5};
    default:  // parallel ids: every point above the threshold already
      return {0.8, 0.5};
  }
}

std::vector<double> tight_vector(std::size_t n, Rng& rng, double width,
                                 double center = 1.0) {
  std::vector<double> v(n);
  for (auto& e : v) e = center * (1.0 + width * rng.uniform(-1.0, 1.0));
  return v;
}

// Majorization-ordered pair whose entries stay within +-width of 1.
std::pair<std::vector<double>, std::vector<double>> tight_pair(
    std::size_t n, MajorizationRelation rel, Rng& rng, double width) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<double> x, y;
    auto base_m = [&](double w) {
      std::vector<double> bx = tight_vector(n, rng, w);
      std::vector<double> by(bx);
      const std::size_t transfers = 1 + rng.index(n);
      for (std::size_t k = 0; k < transfers; ++k) {
        std::size_t i = rng.index(n), j = rng.index(n);
        if (by[i] < by[j]) std::swap(i, j);
        if (i == j) continue;
        const double delta = 0.5 * rng.uniform() * (by[i] - by[j]);
        by[i] -= delta;
        by[j] += delta;
      }
      return std::make_pair(bx, by);
    };
    switch (rel) {
      case MajorizationRelation::M:
        std::tie(x, y) = base_m(width);
        break;
      case MajorizationRelation::WeakSuper: {
        std::tie(x, y) = base_m(0.7 * width);
        const double bump = rng.uniform(0.0, 0.3) * width;
        for (auto& e : y) e += bump;
        break;
      }
      case MajorizationRelation::WeakSub: {
        std::tie(x, y) = base_m(0.7 * width);
        const double shrink = 1.0 - rng.uniform(0.0, 0.3) * width;
        for (auto& e : y) e *= shrink;
        break;
      }
      case MajorizationRelation::PLarger: {
        auto lp = tight_pair(n, MajorizationRelation::WeakSuper, rng, width);
        x.resize(n);
        y.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = std::exp(lp.first[i] - 1.0);
          y[i] = std::exp(lp.second[i] - 1.0);
        }
        break;
      }
      case MajorizationRelation::RM: {
        auto rp = tight_pair(n, MajorizationRelation::WeakSub, rng, width);
        x.resize(n);
        y.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = 1.0 / rp.first[i];
          y[i] = 1.0 / rp.second[i];
        }
        break;
      }
    }
    if (majorize(x, y, rel)) return {x, y};
  }
  // Fall back to the library generator (looser spread, guaranteed valid).
  return generate_pair(n, rel, rng);
}

void sort_into_cone(std::vector<double>& v, OrderedCone cone) {
  std::sort(v.begin(), v.end());
  if (cone == OrderedCone::DPlus) std::reverse(v.begin(), v.end());
}

std::vector<LSDistribution> make_components(const BaselineDistribution& b,
                                            const std::vector<double>& lambda,
                                            const std::vector<double>& sigma) {
  std::vector<LSDistribution> comps;
  comps.reserve(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    comps.emplace_back(b, lambda[i], sigma[i]);
  return comps;
}

// Majorization-ordered pair of positive vectors for the id's varying
// parameter (reciprocal scales or locations), already cone-sorted.
struct VaryingVectors {
  std::vector<double> for_x;  // sigma or lambda of the X system
  std::vector<double> for_y;  // xi or lambda of the Y system
};

VaryingVectors draw_scale_vectors(TheoremId id, int sub, std::size_t n, Rng& rng,
                                  OrderedCone cone) {
  // tight_pair yields (first, second) with majorize(first, second, rel).
  MajorizationRelation rel;
  bool x_first;  // does the X system's reciprocal vector sit in `first`?
  switch (id) {
    case TheoremId::T1: rel = MajorizationRelation::WeakSuper; x_first = false; break;
    case TheoremId::T2: rel = MajorizationRelation::WeakSub; x_first = true; break;
    case TheoremId::T3:
      rel = sub == 1 ? MajorizationRelation::PLarger : MajorizationRelation::RM;
      x_first = false;
      break;
    case TheoremId::T6:
      switch (sub) {
        case 1: rel = MajorizationRelation::M; break;
        case 2: rel = MajorizationRelation::WeakSuper; break;
        case 3: rel = MajorizationRelation::WeakSub; break;
        case 4: rel = MajorizationRelation::PLarger; break;
        default: rel = MajorizationRelation::RM; break;
      }
      x_first = false;
      break;
    case TheoremId::T7:
      switch (sub) {
        case 1: rel = MajorizationRelation::M; break;
        case 2: rel = MajorizationRelation::WeakSub; break;
        case 3: rel = MajorizationRelation::WeakSuper; break;
        case 4: rel = MajorizationRelation::PLarger; break;
        default: rel = MajorizationRelation::RM; break;
      }
      x_first = true;
      break;
    case TheoremId::T8: rel = MajorizationRelation::M; x_first = false; break;
    case TheoremId::T16: rel = MajorizationRelation::WeakSuper; x_first = true; break;
    case TheoremId::T17:
      rel = sub == 1 ? MajorizationRelation::PLarger : MajorizationRelation::RM;
      x_first = true;
      break;
    default:
      throw DomainError("draw_scale_vectors: id does not vary scales");
  }
  auto [first, second] = tight_pair(n, rel, rng, draw_widths(id, sub).scale);
  std::vector<double> recip_x = x_first ? first : second;
  std::vector<double> recip_y = x_first ? second : first;
  VaryingVectors v;
  v.for_x = reciprocals(recip_x);
  v.for_y = reciprocals(recip_y);
  const double common = rng.uniform(0.75, 1.3);
  for (auto& e : v.for_x) e *= common;
  for (auto& e : v.for_y) e *= common;
  sort_into_cone(v.for_x, cone);
  sort_into_cone(v.for_y, cone);
  return v;
}

VaryingVectors draw_location_vectors(TheoremId id, int sub, std::size_t n, Rng& rng,
                                     OrderedCone cone) {
  MajorizationRelation rel;
  bool x_first;
  switch (id) {
    case TheoremId::T4: rel = MajorizationRelation::WeakSub; x_first = false; break;
    case TheoremId::T5: rel = MajorizationRelation::WeakSuper; x_first = true; break;
    case TheoremId::T13:
    case TheoremId::T14:
    case TheoremId::T15:
      rel = MajorizationRelation::WeakSub;
      x_first = sub != 1;
      break;
    case TheoremId::T18: rel = MajorizationRelation::WeakSub; x_first = true; break;
    default:
      throw DomainError("draw_location_vectors: id does not vary locations");
  }
  auto [first, second] = tight_pair(n, rel, rng, draw_widths(id, sub).location);
  VaryingVectors v;
  v.for_x = x_first ? first : second;
  v.for_y = x_first ? second : first;
  const double common = rng.uniform(0.8, 1.6);
  for (auto& e : v.for_x) e *= common;
  for (auto& e : v.for_y) e *= common;
  sort_into_cone(v.for_x, cone);
  sort_into_cone(v.for_y, cone);
  return v;
}

TheoremCase build_candidate(TheoremId id, int sub, std::size_t n, Rng& rng,
                            std::size_t n1, std::size_t n2,
                            TwoLogInterpretation interp) {
  const TheoremDescriptor& d = descriptor(id);
  const OrderedCone cone = rng.index(2) == 0 ? OrderedCone::DPlus : OrderedCone::EPlus;
  const BaselinePair bp = draw_baselines(id, sub, rng);

  std::optional<ArchimedeanGenerator> cop_x, cop_y;
  if (d.dependent) {
    const CopulaPair cp = draw_copulas(id, rng);
    cop_x = cp.psi1;
    cop_y = cp.psi2;
  }

  const DrawWidths widths = draw_widths(id, sub);
  std::vector<double> lambda_x, lambda_y, sigma, xi;
  if (d.multiple_outlier) {
    // Two blocks; the reciprocal block transfer preserves the expanded sum.
    double b1 = 1.0 + widths.scale * rng.uniform(0.0, 1.0);
    double b2 = 1.0 - widths.scale * rng.uniform(0.0, 1.0);
    const double t =
        rng.uniform(0.1, 0.8) * widths.scale * b2 / static_cast<double>(n1);
    const double spread1 = b1 + t * static_cast<double>(n2);
    const double spread2 = b2 - t * static_cast<double>(n1);
    const bool xi_spread = id == TheoremId::T9 || id == TheoremId::T11;
    // Reciprocal blocks, descending.
    const double rx1 = xi_spread ? b1 : spread1;
    const double rx2 = xi_spread ? b2 : spread2;
    const double ry1 = xi_spread ? spread1 : b1;
    const double ry2 = xi_spread ? spread2 : b2;
    const double lc = rng.uniform(0.8, 1.6);
    double l1 = lc * (1.0 + widths.location * rng.uniform(0.0, 1.0));
    double l2 = lc * (1.0 - widths.location * rng.uniform(0.0, 1.0));
    // Cone assignment: descending recips mean ascending scales.
    const bool dplus = cone == OrderedCone::DPlus;
    const double sx_hi = 1.0 / rx2, sx_lo = 1.0 / rx1;
    const double sy_hi = 1.0 / ry2, sy_lo = 1.0 / ry1;
    const double s1 = dplus ? sx_hi : sx_lo, s2 = dplus ? sx_lo : sx_hi;
    const double x1 = dplus ? sy_hi : sy_lo, x2 = dplus ? sy_lo : sy_hi;
    const double la = dplus ? l1 : l2, lb = dplus ? l2 : l1;
    // First block gets n1 copies; n1/n2 swap keeps blocks aligned with cones.
    lambda_x.assign(n1, la);
    lambda_x.insert(lambda_x.end(), n2, lb);
    lambda_y = lambda_x;
    sigma.assign(n1, s1);
    sigma.insert(sigma.end(), n2, s2);
    xi.assign(n1, x1);
    xi.insert(xi.end(), n2, x2);
  } else if (d.shared_scale) {
    sigma = tight_vector(n, rng, widths.scale, rng.uniform(0.7, 1.4));
    sort_into_cone(sigma, cone);
    xi = sigma;
    const VaryingVectors loc = draw_location_vectors(id, sub, n, rng, cone);
    lambda_x = loc.for_x;
    lambda_y = loc.for_y;
  } else {
    // T1/T2's weak-majorization scale variants admit counterexamples with a
    // non-constant location vector (their Schur step drops a t-lambda
    // factor); generated instances keep lambda scalar, like the parallel
    // analog prints.
    const bool scalar_lambda =
        d.scalar_location || id == TheoremId::T1 || id == TheoremId::T2;
    if (scalar_lambda) {
      lambda_x.assign(n, rng.uniform(0.6, 2.0));
    } else {
      lambda_x = tight_vector(n, rng, widths.location, rng.uniform(0.8, 1.6));
      sort_into_cone(lambda_x, cone);
    }
    lambda_y = lambda_x;
    const VaryingVectors sc = draw_scale_vectors(id, sub, n, rng, cone);
    sigma = sc.for_x;
    xi = sc.for_y;
  }

  TheoremCase c{
      id,
      sub,
      SystemSpec(make_components(bp.x, lambda_x, sigma), cop_x, d.structure),
      SystemSpec(make_components(bp.y, lambda_y, xi), cop_y, d.structure),
      cone,
      interp};
  return c;
}

}  // namespace

TheoremCase random_case(TheoremId id, std::size_t n, std::uint64_t seed,
                        const RandomCaseConfig& cfg) {
  const TheoremDescriptor& d = descriptor(id);
  std::size_t n1 = 1, n2 = 1;
  if (d.multiple_outlier) {
    if (n < 2) throw DomainError("random_case: outlier models need n >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> matching;
    for (auto& b : cfg.outlier_blocks)
      if (b.first + b.second == n) matching.push_back(b);
    if (matching.empty()) matching.push_back({n - 1, 1});
    Rng pick = Rng::substream(seed, 0xB10C);
    const auto& b = matching[pick.index(matching.size())];
    n1 = b.first;
    n2 = b.second;
  } else if (n < 2) {
    throw DomainError("random_case: n must be >= 2");
  }

  const CheckOptions opt;
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(attempt) + 1);
    const int sub = d.sub_cases == 1
                        ? 1
                        : 1 + static_cast<int>(rng.index(
                                  static_cast<std::size_t>(d.sub_cases)));
    TheoremCase c = build_candidate(id, sub, n, rng, n1, n2, cfg.two_log);
    bool ok = true;
    try {
      // The conclusion domain t > max(edges) must carry probability mass.
      const double alive =
          std::max(c.x_system.alive_threshold(), c.y_system.alive_threshold());
      const double t0 = alive + 1e-6 * std::max(1.0, std::fabs(alive));
      ok = system_sf(c.x_system, t0) > 0.005 && system_sf(c.y_system, t0) > 0.005;
      for (const auto& h : ok ? hypothesis_battery(c, opt)
                              : std::vector<HypothesisVerdict>{})
        ok = ok && h.verdict.holds();
    } catch (const DomainError&) {
      ok = false;
    }
    if (ok) return c;
  }
  throw ExhaustedRetries("random_case: no hypothesis-valid case for " + d.key +
                         " within the attempt budget");
}

// ---------------------------------------------------------------------------
// counterexample_search / run_suite
// ---------------------------------------------------------------------------

namespace {

TheoremCase swap_varying_vectors(const TheoremCase& c) {
  const TheoremDescriptor& d = descriptor(c.id);
  const auto& bx = system_baseline(c.x_system);
  const auto& by = system_baseline(c.y_system);
  std::vector<double> lx = locations(c.x_system), ly = locations(c.y_system);
  std::vector<double> sx = scales(c.x_system), sy = scales(c.y_system);
  if (d.shared_scale)
    std::swap(lx, ly);  // locations vary
  else
    std::swap(sx, sy);  // scales vary
  TheoremCase m{c.id,
                c.sub_case,
                SystemSpec(make_components(bx, lx, sx), c.x_system.copula, d.structure),
                SystemSpec(make_components(by, ly, sy), c.y_system.copula, d.structure),
                c.cone,
                c.two_log};
  return m;
}

std::size_t pick_n(Rng& rng, const std::vector<std::size_t>& n_values) {
  static const std::vector<std::size_t> fallback{2, 3, 5};
  const auto& pool = n_values.empty() ? fallback : n_values;
  return pool[rng.index(pool.size())];
}

}  // namespace

std::optional<SearchHit> counterexample_search(TheoremId id, std::size_t trials,
                                               std::uint64_t seed, Mutation mutation,
                                               const RandomCaseConfig& cfg,
                                               const CheckOptions& opt) {
  const TheoremDescriptor& d = descriptor(id);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng pick = Rng::substream(seed, t * 2 + 1);
    const std::size_t n = pick_n(pick, {2, 3, 5});
    TheoremCase c = [&] {
      Rng sub = Rng::substream(seed, t * 2);
      return random_case(id, n, sub.next_u64(), cfg);
    }();

    if (mutation == Mutation::None) {
      TheoremReport rep = check_case(c, opt);
      if (rep.overall == Overall::Refuted) return SearchHit{t, std::move(rep)};
      continue;
    }
    if (mutation == Mutation::NegateConclusion) {
      TheoremReport rep = check_case(c, opt);
      const LifetimeLaw lx = make_law(c.x_system), ly = make_law(c.y_system);
      EvaluationGrid grid = make_order_grid(lx, ly, opt.conclusion_levels);
      const double alive =
          std::max(c.x_system.alive_threshold(), c.y_system.alive_threshold());
      grid = grid.restricted_above(alive + 1e-6 * std::max(1.0, std::fabs(alive)));
      // Reverse of the stated direction: a Fails here witnesses strictness.
      const CheckVerdict reversed = d.conclusion_reversed
                                        ? order_verdict(lx, ly, d.conclusion, grid)
                                        : order_verdict(ly, lx, d.conclusion, grid);
      if (reversed.failed() && reversed.slack > opt.refute_slack) {
        rep.conclusion = reversed;
        rep.conclusion_label = "negated " + rep.conclusion_label;
        rep.overall = Overall::Refuted;
        return SearchHit{t, std::move(rep)};
      }
      continue;
    }
    // ReverseMajorization: violate exactly the majorization hypothesis and
    // ask whether the conclusion can break.
    TheoremCase m = swap_varying_vectors(c);
    TheoremReport rep = check_case(m, opt);
    bool majorization_failed = false;
    bool others_hold = true;
    for (const auto& h : rep.hypotheses) {
      if (h.name == "majorization")
        majorization_failed = h.verdict.failed();
      else
        others_hold = others_hold && h.verdict.holds();
    }
    if (majorization_failed && others_hold && rep.conclusion.failed() &&
        rep.conclusion.slack > opt.refute_slack)
      return SearchHit{t, std::move(rep)};
  }
  return std::nullopt;
}

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      std::min<unsigned>(static_cast<unsigned>(jobs), std::min<unsigned>(hw, 16));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SuiteEntry> run_suite(const SuiteConfig& cfg) {
  std::vector<TheoremId> ids = cfg.ids.empty() ? all_theorem_ids() : cfg.ids;
  std::vector<SuiteEntry> entries;

  for (TheoremId id : ids) {
    const TheoremDescriptor& d = descriptor(id);
    std::vector<TwoLogInterpretation> interps{
        TwoLogInterpretation::SecondLogDerivativeMonotone};
    if (d.interpretation_flagged && cfg.alternative_interpretation_runs)
      interps.push_back(TwoLogInterpretation::SecondLogDerivativeSign);

    for (std::size_t ii = 0; ii < interps.size(); ++ii) {
      SuiteEntry e;
      e.id = id;
      e.two_log = interps[ii];
      e.trials = cfg.trials;
      std::vector<Overall> outcomes(cfg.trials, Overall::Inconclusive);
      std::vector<char> exhausted(cfg.trials, 0);

      RandomCaseConfig case_cfg = cfg.case_config;
      case_cfg.two_log = interps[ii];

      parallel_for(cfg.trials, cfg.jobs, [&](std::size_t t) {
        std::uint64_t mix = cfg.seed;
        mix ^= 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(id) * 31 + ii + 1);
        Rng pick = Rng::substream(mix, t * 2 + 1);
        std::size_t n = pick_n(pick, cfg.n_values);
        if (d.multiple_outlier && !case_cfg.outlier_blocks.empty()) {
          const auto& b = case_cfg.outlier_blocks[pick.index(
              case_cfg.outlier_blocks.size())];
          n = b.first + b.second;
        }
        try {
          Rng sub = Rng::substream(mix, t * 2);
          TheoremCase c = random_case(id, n, sub.next_u64(), case_cfg);
          outcomes[t] = check_case(c, cfg.check).overall;
        } catch (const ExhaustedRetries&) {
          exhausted[t] = 1;
        }
      });

      for (std::size_t t = 0; t < cfg.trials; ++t) {
        if (exhausted[t]) {
          ++e.generator_exhausted;
          continue;
        }
        switch (outcomes[t]) {
          case Overall::Verified:
            ++e.valid;
            ++e.verified;
            break;
          case Overall::VacuouslySkipped:
            ++e.vacuous;
            break;
          case Overall::Refuted:
            ++e.valid;
            ++e.refuted;
            e.refuted_trials.push_back(t);
            break;
          case Overall::Inconclusive:
            ++e.valid;
            ++e.inconclusive;
            break;
        }
      }
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

}  // namespace sysorder
