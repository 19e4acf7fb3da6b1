#include "sysorder/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sysorder/mc.hpp"
#include "sysorder/theorems.hpp"

namespace sysorder::cli {

namespace {

using nlohmann::json;

struct Resolved {
  std::string command;
  std::uint64_t seed = 20240801;
  std::string tolerance_profile = "default";
  std::string out_dir;
  int jobs = 1;
  json params;
};

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError(path + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError(path + ": unknown field '" + it.key() + "'");
}

double need_number(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(path + ": missing field '" + key + "'");
  if (!obj[key].is_number()) throw ConfigError(path + "." + key + ": expected a number");
  return obj[key].get<double>();
}

double opt_number(const json& obj, const std::string& path, const std::string& key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw ConfigError(path + "." + key + ": expected a number");
  return obj[key].get<double>();
}

BaselineDistribution parse_baseline(const json& obj, const std::string& path) {
  if (!obj.is_object() || !obj.contains("family"))
    throw ConfigError(path + ": expected an object with a 'family' field");
  const std::string fam = obj["family"].get<std::string>();
  auto num = [&](const char* key) { return need_number(obj, path, key); };
  try {
    if (fam == "exponential") {
      require_keys(obj, path, {"family", "location", "scale"});
      return BaselineDistribution::exponential();
    }
    if (fam == "weibull") {
      require_keys(obj, path, {"family", "shape", "location", "scale"});
      return BaselineDistribution::weibull(num("shape"));
    }
    if (fam == "logistic_positive") {
      require_keys(obj, path, {"family", "location", "scale"});
      return BaselineDistribution::logistic_positive();
    }
    if (fam == "gompertz") {
      require_keys(obj, path, {"family", "shape", "location", "scale"});
      return BaselineDistribution::gompertz(num("shape"));
    }
    if (fam == "half_normal") {
      require_keys(obj, path, {"family", "location", "scale"});
      return BaselineDistribution::half_normal();
    }
    if (fam == "pareto") {
      require_keys(obj, path, {"family", "gamma", "location", "scale"});
      return BaselineDistribution::pareto(num("gamma"));
    }
    if (fam == "frechet") {
      require_keys(obj, path, {"family", "beta", "location", "scale"});
      return BaselineDistribution::frechet(num("beta"));
    }
    if (fam == "pareto_drift") {
      require_keys(obj, path, {"family", "a", "b", "s", "location", "scale"});
      return BaselineDistribution::pareto_drift(num("a"), num("b"), num("s"));
    }
    if (fam == "power_decay_hazard") {
      require_keys(obj, path, {"family", "k", "q", "location", "scale"});
      return BaselineDistribution::power_decay_hazard(num("k"), num("q"));
    }
    if (fam == "decay_hazard") {
      require_keys(obj, path, {"family", "c", "k", "location", "scale"});
      return BaselineDistribution::decay_hazard(num("c"), num("k"));
    }
    if (fam == "saturating_hazard") {
      require_keys(obj, path, {"family", "level", "m", "s", "location", "scale"});
      return BaselineDistribution::saturating_hazard(num("level"), num("m"), num("s"));
    }
    if (fam == "linear_hazard") {
      require_keys(obj, path, {"family", "a", "slope", "location", "scale"});
      return BaselineDistribution::linear_hazard(num("a"), num("slope"));
    }
  } catch (const DomainError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  throw ConfigError(path + ".family: unknown family '" + fam + "'");
}

LSDistribution parse_ls(const json& obj, const std::string& path) {
  const BaselineDistribution b = parse_baseline(obj, path);
  const double loc = opt_number(obj, path, "location", 0.0);
  const double scale = opt_number(obj, path, "scale", 1.0);
  if (!(scale > 0.0)) throw ConfigError(path + ".scale: must be > 0");
  return LSDistribution(b, loc, scale);
}

ArchimedeanGenerator parse_copula(const json& obj, const std::string& path) {
  if (!obj.is_object() || !obj.contains("family"))
    throw ConfigError(path + ": expected an object with a 'family' field");
  const std::string fam = obj["family"].get<std::string>();
  try {
    if (fam == "independence") {
      require_keys(obj, path, {"family"});
      return ArchimedeanGenerator::independence();
    }
    require_keys(obj, path, {"family", "theta"});
    const double theta = need_number(obj, path, "theta");
    if (fam == "clayton") return ArchimedeanGenerator::clayton(theta);
    if (fam == "gumbel") return ArchimedeanGenerator::gumbel(theta);
    if (fam == "frank") return ArchimedeanGenerator::frank(theta);
  } catch (const DomainError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  throw ConfigError(path + ".family: unknown copula family '" + fam + "'");
}

SystemSpec parse_system(const json& obj, const std::string& path) {
  require_keys(obj, path, {"structure", "copula", "components"});
  if (!obj.contains("structure") || !obj.contains("components"))
    throw ConfigError(path + ": needs 'structure' and 'components'");
  const std::string st = obj["structure"].get<std::string>();
  Structure structure;
  if (st == "series")
    structure = Structure::Series;
  else if (st == "parallel")
    structure = Structure::Parallel;
  else
    throw ConfigError(path + ".structure: expected 'series' or 'parallel'");
  std::optional<ArchimedeanGenerator> cop;
  if (obj.contains("copula") && !obj["copula"].is_null())
    cop = parse_copula(obj["copula"], path + ".copula");
  std::vector<LSDistribution> comps;
  if (!obj["components"].is_array() || obj["components"].empty())
    throw ConfigError(path + ".components: expected a nonempty array");
  for (std::size_t i = 0; i < obj["components"].size(); ++i)
    comps.push_back(parse_ls(obj["components"][i],
                             path + ".components[" + std::to_string(i) + "]"));
  return SystemSpec(std::move(comps), std::move(cop), structure);
}

std::vector<double> parse_vector(const json& obj, const std::string& path,
                                 const std::string& key, std::size_t n) {
  if (!obj.contains(key)) throw ConfigError(path + ": missing field '" + key + "'");
  const json& arr = obj[key];
  std::vector<double> v;
  if (arr.is_number()) {
    v.assign(n, arr.get<double>());
    return v;
  }
  if (!arr.is_array() || arr.empty())
    throw ConfigError(path + "." + key + ": expected a number array");
  for (const auto& e : arr) {
    if (!e.is_number()) throw ConfigError(path + "." + key + ": expected numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

json verdict_to_json(const CheckVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["slack"] = v.slack;
  j["tolerance"] = v.tolerance;
  json w = json::array();
  for (std::size_t i = 0; i < v.witnesses.size() && i < 3; ++i)
    w.push_back({{"point", v.witnesses[i].point},
                 {"lhs", v.witnesses[i].lhs},
                 {"rhs", v.witnesses[i].rhs}});
  j["witnesses"] = w;
  return j;
}

json report_to_json(const TheoremReport& r) {
  json j;
  j["id"] = to_string(r.id);
  j["sub_case"] = r.sub_case;
  j["conclusion_label"] = r.conclusion_label;
  json hyps = json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back({{"name", h.name}, {"verdict", verdict_to_json(h.verdict)}});
  j["hypotheses"] = hyps;
  j["conclusion"] = verdict_to_json(r.conclusion);
  j["overall"] = to_string(r.overall);
  j["interpretation_dependent"] = r.interpretation_dependent;
  j["direction_question"] = r.direction_question;
  return j;
}

const char* interp_name(TwoLogInterpretation i) {
  return i == TwoLogInterpretation::SecondLogDerivativeMonotone ? "default"
                                                                : "alternative";
}

TwoLogInterpretation parse_interp(const std::string& s, const std::string& path) {
  if (s == "default") return TwoLogInterpretation::SecondLogDerivativeMonotone;
  if (s == "alternative") return TwoLogInterpretation::SecondLogDerivativeSign;
  throw ConfigError(path + ": expected 'default' or 'alternative'");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Command implementations. Each returns the results object and sets `failed`
// when an asserted check did not pass.
// ---------------------------------------------------------------------------

json run_check_order(const Resolved& cfg, bool strict, bool& failed) {
  const json& p = cfg.params;
  require_keys(p, "params",
               {"x", "y", "relations", "grid_count", "assert_holds", "curves"});
  if (!p.contains("x") || !p.contains("y"))
    throw ConfigError("params: check-order needs 'x' and 'y' distributions");
  const LSDistribution x = parse_ls(p["x"], "params.x");
  const LSDistribution y = parse_ls(p["y"], "params.y");
  const std::size_t grid_count =
      static_cast<std::size_t>(opt_number(p, "params", "grid_count", 512));
  std::vector<OrderRelation> rels;
  if (!p.contains("relations") || p["relations"] == "all") {
    rels = {OrderRelation::ST, OrderRelation::HR, OrderRelation::RH, OrderRelation::LR,
            OrderRelation::RHR};
  } else {
    for (const auto& e : p["relations"])
      rels.push_back(order_relation_from_string(e.get<std::string>()));
  }
  const bool assert_holds =
      !p.contains("assert_holds") || p["assert_holds"].get<bool>();

  const LifetimeLaw lx = make_law(x), ly = make_law(y);
  const EvaluationGrid grid = make_order_grid(lx, ly, grid_count);
  json out;
  json verdicts;
  for (OrderRelation r : rels) {
    const CheckVerdict v = order_verdict(lx, ly, r, grid);
    verdicts[to_string(r)] = verdict_to_json(v);
    if (assert_holds) {
      if (v.failed()) failed = true;
      if (strict && v.status == CheckStatus::Inconclusive) failed = true;
    }
  }
  out["verdicts"] = verdicts;
  out["grid_points"] = grid.size();

  if (p.contains("curves") && p["curves"].get<bool>() && !cfg.out_dir.empty()) {
    std::ostringstream csv;
    csv << "t,sf_x,sf_y,hazard_x,hazard_y\n";
    for (double t : grid.points) {
      const double hx = t > x.support_left() ? x.hazard(t) : 0.0;
      const double hy = t > y.support_left() ? y.hazard(t) : 0.0;
      csv << t << "," << x.sf(t) << "," << y.sf(t) << "," << hx << "," << hy << "\n";
    }
    std::filesystem::path f = std::filesystem::path(cfg.out_dir) / "curves.csv";
    std::ofstream os(f);
    if (!os) throw std::ios_base::failure("cannot write " + f.string());
    os << csv.str();
    out["curves_file"] = f.string();
  }
  return out;
}

json run_check_theorem(const Resolved& cfg, bool strict, bool& failed) {
  const json& p = cfg.params;
  require_keys(p, "params",
               {"id", "sub_case", "cone", "baseline_x", "baseline_y", "copula_x",
                "copula_y", "lambda", "mu", "sigma", "xi", "two_log_interpretation"});
  if (!p.contains("id")) throw ConfigError("params: check-theorem needs 'id'");
  const TheoremId id = theorem_id_from_string(p["id"].get<std::string>());
  const TheoremDescriptor& d = descriptor(id);

  TheoremCase c{id,
                static_cast<int>(opt_number(p, "params", "sub_case", 1)),
                SystemSpec({LSDistribution(BaselineDistribution::exponential(), 0, 1)},
                           std::nullopt, d.structure),
                SystemSpec({LSDistribution(BaselineDistribution::exponential(), 0, 1)},
                           std::nullopt, d.structure),
                OrderedCone::DPlus,
                TwoLogInterpretation::SecondLogDerivativeMonotone};
  if (p.contains("cone")) {
    const std::string cone = p["cone"].get<std::string>();
    if (cone == "D+")
      c.cone = OrderedCone::DPlus;
    else if (cone == "E+")
      c.cone = OrderedCone::EPlus;
    else
      throw ConfigError("params.cone: expected 'D+' or 'E+'");
  }
  if (p.contains("two_log_interpretation"))
    c.two_log = parse_interp(p["two_log_interpretation"].get<std::string>(),
                             "params.two_log_interpretation");

  if (!p.contains("baseline_x"))
    throw ConfigError("params: check-theorem needs 'baseline_x'");
  const BaselineDistribution bx = parse_baseline(p["baseline_x"], "params.baseline_x");
  const BaselineDistribution by =
      p.contains("baseline_y") ? parse_baseline(p["baseline_y"], "params.baseline_y")
                               : bx;

  std::vector<double> lambda_x, lambda_y, sigma, xi;
  if (d.shared_scale) {
    // sigma shared, locations vary.
    lambda_x = parse_vector(p, "params", "lambda", 2);
    lambda_y = parse_vector(p, "params", "mu", lambda_x.size());
    sigma = parse_vector(p, "params", "sigma", lambda_x.size());
    xi = sigma;
  } else {
    sigma = parse_vector(p, "params", "sigma", 2);
    xi = parse_vector(p, "params", "xi", sigma.size());
    lambda_x = parse_vector(p, "params", "lambda", sigma.size());
    lambda_y = lambda_x;
  }
  const std::size_t n = sigma.size();
  if (xi.size() != n || lambda_x.size() != n || lambda_y.size() != n)
    throw ConfigError("params: lambda/mu/sigma/xi must have one common length");

  std::optional<ArchimedeanGenerator> cop_x, cop_y;
  if (d.dependent) {
    if (!p.contains("copula_x") || !p.contains("copula_y"))
      throw ConfigError("params: " + d.key + " needs 'copula_x' and 'copula_y'");
    cop_x = parse_copula(p["copula_x"], "params.copula_x");
    cop_y = parse_copula(p["copula_y"], "params.copula_y");
  }

  std::vector<LSDistribution> comps_x, comps_y;
  for (std::size_t i = 0; i < n; ++i) {
    comps_x.emplace_back(bx, lambda_x[i], sigma[i]);
    comps_y.emplace_back(by, lambda_y[i], xi[i]);
  }
  c.x_system = SystemSpec(std::move(comps_x), cop_x, d.structure);
  c.y_system = SystemSpec(std::move(comps_y), cop_y, d.structure);

  CheckOptions opt;
  if (strict) opt.refute_slack = 1e-10;
  TheoremReport rep;
  try {
    rep = check_case(c, opt);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("check-theorem: ") + e.what());
  }
  if (rep.overall == Overall::Refuted) failed = true;
  json out;
  out["report"] = report_to_json(rep);
  out["two_log_interpretation"] = interp_name(c.two_log);
  return out;
}

json run_suite_cmd(const Resolved& cfg, bool strict, bool& failed) {
  const json& p = cfg.params;
  require_keys(p, "params",
               {"theorems", "trials", "n_values", "outlier_blocks",
                "alternative_interpretations"});
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.jobs = cfg.jobs;
  if (p.contains("theorems") && p["theorems"] != "all")
    for (const auto& e : p["theorems"])
      sc.ids.push_back(theorem_id_from_string(e.get<std::string>()));
  sc.trials = static_cast<std::size_t>(opt_number(p, "params", "trials", 100));
  if (p.contains("n_values")) {
    sc.n_values.clear();
    for (const auto& e : p["n_values"])
      sc.n_values.push_back(e.get<std::size_t>());
  }
  if (p.contains("outlier_blocks")) {
    sc.case_config.outlier_blocks.clear();
    for (const auto& e : p["outlier_blocks"])
      sc.case_config.outlier_blocks.push_back(
          {e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  if (p.contains("alternative_interpretations"))
    sc.alternative_interpretation_runs = p["alternative_interpretations"].get<bool>();
  if (strict) sc.check.refute_slack = 1e-10;

  const auto entries = run_suite(sc);
  json out;
  json arr = json::array();
  for (const auto& e : entries) {
    if (e.refuted > 0) failed = true;
    json je;
    je["id"] = to_string(e.id);
    je["two_log_interpretation"] = interp_name(e.two_log);
    je["trials"] = e.trials;
    je["valid"] = e.valid;
    je["verified"] = e.verified;
    je["vacuously_skipped"] = e.vacuous;
    je["refuted"] = e.refuted;
    je["inconclusive"] = e.inconclusive;
    je["generator_exhausted"] = e.generator_exhausted;
    je["refuted_trials"] = e.refuted_trials;
    arr.push_back(je);
  }
  out["entries"] = arr;
  return out;
}

json run_search(const Resolved& cfg, bool strict, bool& failed) {
  const json& p = cfg.params;
  require_keys(p, "params", {"id", "trials", "mutation"});
  if (!p.contains("id")) throw ConfigError("params: search needs 'id'");
  const TheoremId id = theorem_id_from_string(p["id"].get<std::string>());
  const std::size_t trials =
      static_cast<std::size_t>(opt_number(p, "params", "trials", 200));
  Mutation mutation = Mutation::None;
  if (p.contains("mutation")) {
    const std::string m = p["mutation"].get<std::string>();
    if (m == "none")
      mutation = Mutation::None;
    else if (m == "negate-conclusion")
      mutation = Mutation::NegateConclusion;
    else if (m == "reverse-majorization")
      mutation = Mutation::ReverseMajorization;
    else
      throw ConfigError("params.mutation: unknown mutation '" + m + "'");
  }
  CheckOptions opt;
  if (strict) opt.refute_slack = 1e-10;
  json out;
  out["id"] = to_string(id);
  out["trials"] = trials;
  out["mutation"] = p.contains("mutation") ? p["mutation"].get<std::string>() : "none";
  if (trials == 0) {
    out["status"] = "inconclusive";
    out["found"] = false;
    return out;
  }
  const auto hit = counterexample_search(id, trials, cfg.seed, mutation, {}, opt);
  out["found"] = hit.has_value();
  if (hit) {
    out["trial_index"] = hit->trial_index;
    out["report"] = report_to_json(hit->report);
    // An unmutated find means the harness contradicts a theorem: that is a
    // release-blocking failure, not a mathematical discovery.
    if (mutation == Mutation::None) failed = true;
  }
  out["status"] = hit ? "witness_found" : "none_found";
  return out;
}

json run_simulate(const Resolved& cfg, bool strict, bool& failed) {
  (void)strict;
  const json& p = cfg.params;
  require_keys(p, "params", {"system", "count", "ks_alpha", "curves", "assert_ks"});
  if (!p.contains("system")) throw ConfigError("params: simulate needs 'system'");
  const SystemSpec spec = parse_system(p["system"], "params.system");
  const std::size_t count =
      static_cast<std::size_t>(opt_number(p, "params", "count", 20000));
  const double alpha = opt_number(p, "params", "ks_alpha", 0.01);
  const bool assert_ks = !p.contains("assert_ks") || p["assert_ks"].get<bool>();

  SimulationResult sim;
  try {
    sim = simulate_system(spec, count, cfg.seed);
  } catch (const UnsupportedFamily& e) {
    throw ConfigError(std::string("simulate: ") + e.what());
  }
  const KsResult ks = ks_compare(sim, spec, alpha);
  if (assert_ks && !ks.pass) failed = true;

  double mean = 0.0;
  for (double t : sim.lifetimes) mean += t;
  mean /= static_cast<double>(sim.count);

  json out;
  out["count"] = sim.count;
  out["empirical_mean"] = mean;
  out["ks"] = {{"statistic", ks.statistic},
               {"critical", ks.critical},
               {"alpha", ks.alpha},
               {"pass", ks.pass}};

  if (p.contains("curves") && p["curves"].get<bool>() && !cfg.out_dir.empty()) {
    std::vector<double> sorted(sim.lifetimes);
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream csv;
    csv << "t,sf_analytic,sf_empirical\n";
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); i += std::max<std::size_t>(1, count / 512)) {
      const double t = sorted[i];
      csv << t << "," << system_sf(spec, t) << ","
          << 1.0 - (static_cast<double>(i) + 1.0) / n << "\n";
    }
    std::filesystem::path f = std::filesystem::path(cfg.out_dir) / "simulate_curves.csv";
    std::ofstream os(f);
    if (!os) throw std::ios_base::failure("cannot write " + f.string());
    os << csv.str();
    out["curves_file"] = f.string();
  }
  return out;
}

json run_catalog(const Resolved&) {
  json arr = json::array();
  for (const auto& d : catalog()) {
    json jd;
    jd["id"] = d.key;
    jd["summary"] = d.summary;
    jd["structure"] = to_string(d.structure);
    jd["dependent"] = d.dependent;
    jd["multiple_outlier"] = d.multiple_outlier;
    jd["same_baseline"] = d.same_baseline;
    jd["sub_cases"] = d.sub_cases;
    jd["hypotheses"] = d.sub_case_hypotheses;
    jd["conclusion"] = std::string(to_string(d.conclusion));
    jd["conclusion_reversed"] = d.conclusion_reversed;
    jd["interpretation_flagged"] = d.interpretation_flagged;
    jd["direction_question"] = d.direction_question;
    jd["parameter_roles"] = d.parameter_roles;
    arr.push_back(jd);
  }
  json out;
  out["theorems"] = arr;
  return out;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_atomically(const std::filesystem::path& target, const std::string& text) {
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open " + tmp.string());
    os << text;
    if (!os) throw std::ios_base::failure("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

int run_resolved(const Resolved& cfg, std::string* report_out) {
  const bool strict = cfg.tolerance_profile == "strict";
  if (!cfg.out_dir.empty()) std::filesystem::create_directories(cfg.out_dir);
  bool failed = false;
  json results;
  if (cfg.command == "check-order")
    results = run_check_order(cfg, strict, failed);
  else if (cfg.command == "check-theorem")
    results = run_check_theorem(cfg, strict, failed);
  else if (cfg.command == "suite")
    results = run_suite_cmd(cfg, strict, failed);
  else if (cfg.command == "search")
    results = run_search(cfg, strict, failed);
  else if (cfg.command == "simulate")
    results = run_simulate(cfg, strict, failed);
  else if (cfg.command == "catalog")
    results = run_catalog(cfg);
  else
    throw ConfigError("command: unknown command '" + cfg.command + "'");

  json report;
  report["artifact_version"] = kArtifactVersion;
  report["command"] = cfg.command;
  report["seed"] = cfg.seed;
  report["tolerance_profile"] = cfg.tolerance_profile;
  report["jobs"] = cfg.jobs;
  json resolved_cfg;
  resolved_cfg["command"] = cfg.command;
  resolved_cfg["seed"] = cfg.seed;
  resolved_cfg["tolerance_profile"] = cfg.tolerance_profile;
  resolved_cfg["out_dir"] = cfg.out_dir;
  resolved_cfg["jobs"] = cfg.jobs;
  resolved_cfg["params"] = cfg.params;
  report["resolved_config"] = resolved_cfg;
  report["results"] = results;
  report["status"] = failed ? "failed" : "passed";
  report["content_fingerprint"] = fnv1a(report.dump());
  report["meta"] = {{"timestamp", timestamp_utc()}};

  const std::string text = report.dump(2) + "\n";
  if (report_out) *report_out = text;
  if (!cfg.out_dir.empty()) {
    write_atomically(std::filesystem::path(cfg.out_dir) / "report.json", text);
  } else if (!report_out) {
    std::cout << text;
  }
  return failed ? 1 : 0;
}

Resolved resolve(const json& root, const Overrides& o) {
  require_keys(root, "config",
               {"command", "seed", "tolerance_profile", "out_dir", "jobs", "params"});
  if (!root.contains("command") || !root["command"].is_string())
    throw ConfigError("config: missing 'command'");
  Resolved cfg;
  cfg.command = root["command"].get<std::string>();
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned())
      throw ConfigError("config.seed: expected an unsigned integer");
    cfg.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("tolerance_profile"))
    cfg.tolerance_profile = root["tolerance_profile"].get<std::string>();
  if (root.contains("out_dir")) cfg.out_dir = root["out_dir"].get<std::string>();
  if (root.contains("jobs")) cfg.jobs = root["jobs"].get<int>();
  cfg.params = root.contains("params") ? root["params"] : json::object();

  if (o.seed) cfg.seed = *o.seed;
  if (o.out_dir) cfg.out_dir = *o.out_dir;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.tolerance_profile) cfg.tolerance_profile = *o.tolerance_profile;
  if (cfg.tolerance_profile != "default" && cfg.tolerance_profile != "strict")
    throw ConfigError("config.tolerance_profile: expected 'default' or 'strict'");
  if (cfg.jobs < 1) throw ConfigError("config.jobs: must be >= 1");
  return cfg;
}

}  // namespace

int run_text(const std::string& config_json, const Overrides& o,
             std::string* report_out) {
  try {
    json root;
    try {
      root = json::parse(config_json);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return run_resolved(resolve(root, o), report_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_file(const std::string& config_path, const Overrides& o) {
  std::ifstream is(config_path);
  if (!is) {
    std::cerr << "io error: cannot read config file " << config_path << "\n";
    return 3;
  }
  std::stringstream buf;
  buf << is.rdbuf();
  return run_text(buf.str(), o, nullptr);
}

}  // namespace sysorder::cli
