// Acceptance suite: nine release gates, one pass/fail line each. Exits with
// the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sysorder/cli.hpp"
#include "sysorder/mc.hpp"
#include "sysorder/theorems.hpp"

using namespace sysorder;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", idx,
              label, detail.c_str(), seconds);
  if (!pass) ++g_failures;
}

template <typename Fn>
void run(int idx, const char* label, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(idx, label, pass, detail, secs);
}

LSDistribution expo(double loc, double scale) {
  return LSDistribution(BaselineDistribution::exponential(), loc, scale);
}

std::vector<LSDistribution> random_components(Rng& rng, std::size_t n) {
  std::vector<LSDistribution> comps;
  for (std::size_t i = 0; i < n; ++i) {
    const auto pick = rng.index(5);
    BaselineDistribution b = BaselineDistribution::exponential();
    if (pick == 1) b = BaselineDistribution::weibull(rng.uniform(0.6, 2.5));
    if (pick == 2) b = BaselineDistribution::gompertz(rng.uniform(0.3, 1.2));
    if (pick == 3) b = BaselineDistribution::pareto(rng.uniform(1.0, 2.5));
    if (pick == 4) b = BaselineDistribution::frechet(rng.uniform(1.0, 2.5));
    comps.emplace_back(b, rng.uniform(0.0, 1.0), rng.uniform(0.5, 2.0));
  }
  return comps;
}

// --------------------------------------------------------------------------

bool independence_consistency(std::string& detail) {
  Rng rng(2024);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto comps = random_components(rng, 2 + rng.index(3));
    for (Structure st : {Structure::Series, Structure::Parallel}) {
      SystemSpec dep(comps, ArchimedeanGenerator::independence(), st);
      SystemSpec ind(comps, std::nullopt, st);
      for (int i = 0; i < 512; ++i) {
        const double p = 0.002 + 0.996 * i / 511.0;
        const double t = system_quantile(ind, p);
        worst = std::max(worst, std::fabs(system_sf(dep, t) - system_sf(ind, t)));
      }
    }
  }
  detail = "max |psi-form - product| = " + std::to_string(worst);
  return worst <= 1e-12;
}

bool closed_form_spots(std::string& detail) {
  SystemSpec clay({expo(0, 1), expo(0, 1)}, ArchimedeanGenerator::clayton(1.0),
                  Structure::Series);
  const double sf = series_sf(clay, std::log(2.0));
  SystemSpec rates({expo(0, 0.5), expo(0, 1.0 / 3.0)}, std::nullopt, Structure::Series);
  const double hz = series_hazard_independent(rates, 0.7);
  detail = "|sf - 1/3| = " + std::to_string(std::fabs(sf - 1.0 / 3.0)) +
           ", |hazard - 5| = " + std::to_string(std::fabs(hz - 5.0));
  return std::fabs(sf - 1.0 / 3.0) <= 1e-12 && std::fabs(hz - 5.0) <= 1e-12;
}

bool lemma6_numeric(std::string& detail) {
  std::vector<ArchimedeanGenerator> pool = {
      ArchimedeanGenerator::independence(), ArchimedeanGenerator::clayton(0.5),
      ArchimedeanGenerator::clayton(1.0),   ArchimedeanGenerator::clayton(2.0),
      ArchimedeanGenerator::clayton(4.0),   ArchimedeanGenerator::clayton(-0.15),
      ArchimedeanGenerator::gumbel(1.5),    ArchimedeanGenerator::gumbel(2.0),
      ArchimedeanGenerator::gumbel(3.0),    ArchimedeanGenerator::frank(1.0),
      ArchimedeanGenerator::frank(3.0),     ArchimedeanGenerator::frank(8.0)};
  std::size_t pairs = 0, implications = 0, breaks = 0;
  for (const auto& g1 : pool)
    for (const auto& g2 : pool) {
      ++pairs;
      if (!check_superadditive(g1, g2).holds()) continue;
      ++implications;
      const std::size_t dim = std::min<std::size_t>(
          3, static_cast<std::size_t>(std::min(g1.max_dim(), g2.max_dim())));
      if (!copula_dominance(g1, g2, dim, 10000, 7).holds()) ++breaks;
    }
  const bool gumbel_fails =
      check_superadditive(ArchimedeanGenerator::gumbel(2.0),
                          ArchimedeanGenerator::independence())
          .failed() &&
      copula_dominance(ArchimedeanGenerator::gumbel(2.0),
                       ArchimedeanGenerator::independence(), 2, 10000, 7)
          .failed();
  detail = std::to_string(pairs) + " pairs, " + std::to_string(implications) +
           " super-additive, " + std::to_string(breaks) + " dominance breaks";
  return pairs >= 50 && breaks == 0 && gumbel_fails;
}

bool majorization_chain(std::string& detail) {
  std::size_t violations = 0;
  for (auto rel : {MajorizationRelation::M, MajorizationRelation::WeakSuper,
                   MajorizationRelation::PLarger, MajorizationRelation::RM,
                   MajorizationRelation::WeakSub}) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
      auto [x, y] = generate_pair(2 + (s % 4), rel, 31000 + s);
      const auto rep = implication_chain_check(x, y);
      violations += rep.violations.size();
      if (rel == MajorizationRelation::M &&
          !(rep.weak_super && rep.p_larger && rep.rm))
        ++violations;
      if (rel == MajorizationRelation::WeakSuper && !(rep.p_larger && rep.rm))
        ++violations;
      if (rel == MajorizationRelation::PLarger && !rep.rm) ++violations;
    }
  }
  detail = "5000 pairs, " + std::to_string(violations) + " chain violations";
  return violations == 0;
}

bool order_chain(std::string& detail) {
  Rng rng(606);
  std::size_t lr_pairs = 0, violations = 0, attempts = 0;
  while (lr_pairs < 500 && attempts < 3000) {
    ++attempts;
    const int fam = static_cast<int>(rng.index(4));
    const double lam = rng.uniform(0.0, 0.8);
    const double s1 = rng.uniform(0.5, 1.3), s2 = s1 + rng.uniform(0.0, 1.0);
    BaselineDistribution b = BaselineDistribution::exponential();
    if (fam == 1) b = BaselineDistribution::weibull(rng.uniform(0.7, 2.5));
    if (fam == 2) b = BaselineDistribution::pareto(rng.uniform(1.0, 2.5));
    if (fam == 3) b = BaselineDistribution::gompertz(rng.uniform(0.3, 1.0));
    const auto lx = make_law(LSDistribution(b, lam, s1));
    const auto ly = make_law(LSDistribution(b, lam, s2));
    const auto rep = order_chain_check(lx, ly, make_order_grid(lx, ly, 512));
    if (!rep.verdicts.at(OrderRelation::LR).holds()) continue;
    ++lr_pairs;
    violations += rep.violations.size();
    if (!rep.verdicts.at(OrderRelation::HR).holds()) ++violations;
    if (!rep.verdicts.at(OrderRelation::RH).holds()) ++violations;
    if (!rep.verdicts.at(OrderRelation::ST).holds()) ++violations;
  }
  detail = std::to_string(lr_pairs) + " lr-ordered pairs, " +
           std::to_string(violations) + " chain violations";
  return lr_pairs >= 500 && violations == 0;
}

bool theorem_suite(std::string& detail) {
  SuiteConfig cfg;
  cfg.trials = 100;
  cfg.seed = 20240801;
  cfg.jobs = 2;
  const auto entries = run_suite(cfg);
  std::size_t refuted = 0, exhausted = 0, short_entries = 0;
  for (const auto& e : entries) {
    refuted += e.refuted;
    exhausted += e.generator_exhausted;
    if (e.valid < 100) ++short_entries;
  }
  detail = std::to_string(entries.size()) + " entries (18 theorems + " +
           "alternative 2-log runs), refuted = " + std::to_string(refuted) +
           ", exhausted = " + std::to_string(exhausted);
  return refuted == 0 && exhausted == 0 && short_entries == 0 && entries.size() == 22;
}

bool mc_corroboration(std::string& detail) {
  std::vector<std::optional<ArchimedeanGenerator>> gens;
  gens.emplace_back(ArchimedeanGenerator::independence());
  gens.emplace_back(ArchimedeanGenerator::clayton(0.5));
  gens.emplace_back(ArchimedeanGenerator::clayton(1.0));
  gens.emplace_back(ArchimedeanGenerator::clayton(2.0));
  gens.emplace_back(ArchimedeanGenerator::gumbel(1.5));
  gens.emplace_back(ArchimedeanGenerator::gumbel(2.0));
  Rng rng(909);
  std::size_t runs = 0, failures = 0;
  for (const auto& g : gens) {
    for (int k = 0; k < 10; ++k) {
      const auto comps = random_components(rng, 2 + rng.index(2));
      const Structure st = (k % 2 == 0) ? Structure::Series : Structure::Parallel;
      SystemSpec spec(comps, g, st);
      const auto sim = simulate_system(spec, 20000, 5000 + 100 * runs);
      if (!ks_compare(sim, spec, 0.01).pass) ++failures;
      ++runs;
    }
  }
  detail = std::to_string(runs) + " runs, " + std::to_string(failures) +
           " KS failures (<= 1 tolerated)";
  return runs == 60 && failures <= 1;
}

bool numerical_hygiene(std::string& detail) {
  std::vector<BaselineDistribution> cat = {
      BaselineDistribution::exponential(),
      BaselineDistribution::weibull(0.5),
      BaselineDistribution::weibull(2.3),
      BaselineDistribution::logistic_positive(),
      BaselineDistribution::gompertz(0.8),
      BaselineDistribution::half_normal(),
      BaselineDistribution::pareto(1.7),
      BaselineDistribution::frechet(1.4),
      BaselineDistribution::pareto_drift(1.5, -0.6, 1.3),
      BaselineDistribution::pareto_drift(1.5, 0.8, 1.3),
      BaselineDistribution::power_decay_hazard(14.0, 2.2),
      BaselineDistribution::decay_hazard(12.0, 1.1),
      BaselineDistribution::saturating_hazard(1.5, -0.7, 1.2),
      BaselineDistribution::saturating_hazard(1.5, 0.7, 1.0),
      BaselineDistribution::linear_hazard(1.2, 0.05)};
  Rng rng(111);
  double worst_rt = 0.0, worst_hz = 0.0;
  for (const auto& b : cat) {
    const LSDistribution d(b, rng.uniform(-0.5, 1.0), rng.uniform(0.4, 2.2));
    for (int i = 0; i < 1000; ++i) {
      const double p = rng.uniform(0.001, 0.999);
      worst_rt = std::max(worst_rt, std::fabs(ls_cdf(d, ls_quantile(d, p)) - p));
    }
    for (int i = 0; i < 512; ++i) {
      const double p = 0.002 + 0.996 * i / 511.0;
      const double t = d.quantile(p);
      const double h = 1e-6 * std::max(t - d.support_left(), 1e-3);
      const double fd = -(std::log(d.sf(t + h)) - std::log(d.sf(t - h))) / (2.0 * h);
      const double hz = d.hazard(t);
      if (hz > 0.0) worst_hz = std::max(worst_hz, std::fabs(fd - hz) / hz);
    }
  }
  // Derivative accuracy on the polynomial suite.
  const double c[5] = {0.3, -1.2, 0.7, 0.4, -0.15};
  ScalarFunction poly{[&c](double u) {
                        return c[0] + u * (c[1] + u * (c[2] + u * (c[3] + u * c[4])));
                      },
                      0.0, std::numeric_limits<double>::infinity()};
  double worst_d[4] = {0, 0, 0, 0};
  for (double u : {0.5, 1.0, 2.0, 3.5}) {
    const double d1 = c[1] + u * (2 * c[2] + u * (3 * c[3] + u * 4 * c[4]));
    const double d2 = 2 * c[2] + u * (6 * c[3] + u * 12 * c[4]);
    const double d3 = 6 * c[3] + 24 * c[4] * u;
    worst_d[1] = std::max(worst_d[1], std::fabs(numeric_derivative(poly, u, 1) - d1));
    worst_d[2] = std::max(worst_d[2], std::fabs(numeric_derivative(poly, u, 2) - d2));
    worst_d[3] = std::max(worst_d[3], std::fabs(numeric_derivative(poly, u, 3) - d3));
  }
  detail = "roundtrip " + std::to_string(worst_rt) + ", hazard " +
           std::to_string(worst_hz) + ", derivs " + std::to_string(worst_d[1]) + "/" +
           std::to_string(worst_d[2]) + "/" + std::to_string(worst_d[3]);
  return worst_rt <= 1e-9 && worst_hz <= 1e-5 && worst_d[1] <= 1e-6 &&
         worst_d[2] <= 1e-4 && worst_d[3] <= 1e-2;
}

bool determinism(std::string& detail) {
  const std::string cfg = R"({"command":"suite","seed":424242,"jobs":2,
    "params":{"trials":8}})";
  std::string a, b;
  const int ca = cli::run_text(cfg, {}, &a);
  const int cb = cli::run_text(cfg, {}, &b);
  if (ca != 0 || cb != 0) {
    detail = "suite runs exited nonzero";
    return false;
  }
  nlohmann::json ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(b);
  ja.erase("meta");
  jb.erase("meta");
  const bool same = ja.dump() == jb.dump();
  detail = same ? "byte-identical excluding the timestamp metadata field"
                : "reports differ";
  return same;
}

}  // namespace

int main() {
  std::printf("sysorder acceptance suite (version %s)\n", kArtifactVersion);
  run(1, "independence consistency", independence_consistency);
  run(2, "closed-form spot checks", closed_form_spots);
  run(3, "super-additivity => dominance", lemma6_numeric);
  run(4, "majorization chain", majorization_chain);
  run(5, "stochastic order chain", order_chain);
  run(6, "theorem suite", theorem_suite);
  run(7, "monte carlo corroboration", mc_corroboration);
  run(8, "numerical hygiene", numerical_hygiene);
  run(9, "report determinism", determinism);
  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures;
}
