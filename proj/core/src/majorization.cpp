#include "sysorder/majorization.hpp"

#include <algorithm>
#include <cmath>

namespace sysorder {

namespace {

constexpr double kRelTol = 1e-12;

std::vector<double> ascending(const std::vector<double>& v) {
  std::vector<double> s(v);
  std::sort(s.begin(), s.end());
  return s;
}

void require_same_length(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw LengthMismatch("majorize: vectors differ in length");
  if (x.empty()) throw LengthMismatch("majorize: vectors must be nonempty");
}

void require_positive(const std::vector<double>& v, const char* what) {
  for (double e : v)
    if (!(e > 0.0)) throw PositivityError(std::string(what) + ": entries must be > 0");
}

bool leq_tol(double a, double b, double scale) {
  return a <= b + kRelTol * std::max({std::fabs(a), std::fabs(b), scale});
}

}  // namespace

const char* to_string(MajorizationRelation r) {
  switch (r) {
    case MajorizationRelation::M: return "m";
    case MajorizationRelation::WeakSuper: return "weak_super";
    case MajorizationRelation::WeakSub: return "weak_sub";
    case MajorizationRelation::PLarger: return "p";
    case MajorizationRelation::RM: return "rm";
  }
  return "?";
}

const char* to_string(OrderedCone c) {
  return c == OrderedCone::DPlus ? "D+" : "E+";
}

bool in_cone(const std::vector<double>& x, OrderedCone cone) {
  for (double e : x)
    if (!(e > 0.0)) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (cone == OrderedCone::DPlus && x[i] < x[i + 1]) return false;
    if (cone == OrderedCone::EPlus && x[i] > x[i + 1]) return false;
  }
  return true;
}

bool majorize(const std::vector<double>& x, const std::vector<double>& y,
              MajorizationRelation rel) {
  require_same_length(x, y);
  if (rel == MajorizationRelation::PLarger || rel == MajorizationRelation::RM) {
    require_positive(x, "majorize(p/rm)");
    require_positive(y, "majorize(p/rm)");
  }
  const std::vector<double> xs = ascending(x), ys = ascending(y);
  const std::size_t n = xs.size();

  switch (rel) {
    case MajorizationRelation::M: {
      double sx = 0.0, sy = 0.0;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        sx += xs[j];
        sy += ys[j];
        if (!leq_tol(sx, sy, 1.0)) return false;
      }
      sx += xs[n - 1];
      sy += ys[n - 1];
      return std::fabs(sx - sy) <= kRelTol * std::max({std::fabs(sx), std::fabs(sy), 1.0});
    }
    case MajorizationRelation::WeakSuper: {
      double sx = 0.0, sy = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        sx += xs[j];
        sy += ys[j];
        if (!leq_tol(sx, sy, 1.0)) return false;
      }
      return true;
    }
    case MajorizationRelation::WeakSub: {
      double sx = 0.0, sy = 0.0;
      for (std::size_t j = n; j-- > 0;) {
        sx += xs[j];
        sy += ys[j];
        if (!leq_tol(sy, sx, 1.0)) return false;
      }
      return true;
    }
    case MajorizationRelation::PLarger: {
      bool tiny = false;
      for (double e : xs) tiny = tiny || e < 1e-100;
      for (double e : ys) tiny = tiny || e < 1e-100;
      if (tiny) {
        double sx = 0.0, sy = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          sx += std::log(xs[j]);
          sy += std::log(ys[j]);
          if (!leq_tol(sx, sy, 1.0)) return false;
        }
        return true;
      }
      double px = 1.0, py = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        px *= xs[j];
        py *= ys[j];
        if (!leq_tol(px, py, 1.0)) return false;
      }
      return true;
    }
    case MajorizationRelation::RM: {
      double sx = 0.0, sy = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        sx += 1.0 / xs[j];
        sy += 1.0 / ys[j];
        if (!leq_tol(sy, sx, 1.0)) return false;
      }
      return true;
    }
  }
  return false;
}

ImplicationChainReport implication_chain_check(const std::vector<double>& x,
                                               const std::vector<double>& y) {
  ImplicationChainReport rep;
  rep.m = majorize(x, y, MajorizationRelation::M);
  rep.weak_super = majorize(x, y, MajorizationRelation::WeakSuper);
  rep.weak_sub = majorize(x, y, MajorizationRelation::WeakSub);
  rep.p_larger = majorize(x, y, MajorizationRelation::PLarger);
  rep.rm = majorize(x, y, MajorizationRelation::RM);
  if (rep.m && !rep.weak_super) rep.violations.push_back("m => weak_super broken");
  if (rep.m && !rep.weak_sub) rep.violations.push_back("m => weak_sub broken");
  if (rep.weak_super && !rep.p_larger) rep.violations.push_back("weak_super => p broken");
  if (rep.p_larger && !rep.rm) rep.violations.push_back("p => rm broken");
  return rep;
}

namespace {

// Robin Hood transfers applied to x produce a y that x majorizes.
std::pair<std::vector<double>, std::vector<double>> m_pair(std::size_t n, Rng& rng) {
  std::vector<double> x(n);
  for (auto& e : x) e = rng.uniform(0.3, 3.0);
  std::vector<double> y(x);
  const std::size_t transfers = 1 + rng.index(n);
  for (std::size_t k = 0; k < transfers; ++k) {
    std::size_t i = rng.index(n), j = rng.index(n);
    if (y[i] < y[j]) std::swap(i, j);
    if (i == j) continue;
    const double delta = 0.5 * rng.uniform() * (y[i] - y[j]);
    y[i] -= delta;
    y[j] += delta;
  }
  return {x, y};
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> generate_pair(
    std::size_t n, MajorizationRelation rel, Rng& rng, std::optional<OrderedCone> cone) {
  if (n < 2) throw DomainError("generate_pair: n must be >= 2");
  std::vector<double> x, y;
  switch (rel) {
    case MajorizationRelation::M: {
      auto [a, b] = m_pair(n, rng);
      x = std::move(a);
      y = std::move(b);
      break;
    }
    case MajorizationRelation::WeakSuper: {
      // x m-majorizes y0; inflating y keeps every partial sum dominating.
      auto [a, b] = m_pair(n, rng);
      x = std::move(a);
      y = std::move(b);
      const double bump = rng.uniform(0.0, 0.5);
      for (auto& e : y) e += bump;
      break;
    }
    case MajorizationRelation::WeakSub: {
      auto [a, b] = m_pair(n, rng);
      x = std::move(a);
      y = std::move(b);
      const double shrink = rng.uniform(0.5, 1.0);
      for (auto& e : y) e *= shrink;
      break;
    }
    case MajorizationRelation::PLarger: {
      // p-larger is weak supermajorization of the logs.
      auto lp = generate_pair(n, MajorizationRelation::WeakSuper, rng, std::nullopt);
      x.resize(n);
      y.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::exp(lp.first[i] - 1.5);
        y[i] = std::exp(lp.second[i] - 1.5);
      }
      break;
    }
    case MajorizationRelation::RM: {
      // rm is weak submajorization of the reciprocals.
      auto rp = generate_pair(n, MajorizationRelation::WeakSub, rng, std::nullopt);
      x.resize(n);
      y.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = 1.0 / rp.first[i];
        y[i] = 1.0 / rp.second[i];
      }
      break;
    }
  }
  if (cone) {
    const bool desc = *cone == OrderedCone::DPlus;
    auto sorter = [desc](std::vector<double>& v) {
      std::sort(v.begin(), v.end());
      if (desc) std::reverse(v.begin(), v.end());
    };
    sorter(x);
    sorter(y);
  }
  if (!majorize(x, y, rel))
    throw ConvergenceError("generate_pair: postcondition failed (internal bug)");
  return {x, y};
}

std::pair<std::vector<double>, std::vector<double>> generate_pair(
    std::size_t n, MajorizationRelation rel, std::uint64_t seed,
    std::optional<OrderedCone> cone) {
  Rng rng(seed);
  return generate_pair(n, rel, rng, cone);
}

CheckVerdict schur_verdict(const std::function<double(const std::vector<double>&)>& f,
                           std::size_t n, std::optional<OrderedCone> cone,
                           std::size_t trials, std::uint64_t seed, SchurMode mode) {
  VerdictAccumulator acc(1e-10, 1e-12);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, t);
    auto [x, y] = generate_pair(n, MajorizationRelation::M, rng, cone);
    const double fx = f(x), fy = f(y);
    const double scale = std::max({std::fabs(fx), std::fabs(fy), 1.0});
    const double tol = 1e-10 * scale;
    if (mode == SchurMode::Convex)
      acc.observe(static_cast<double>(t), fy, fx, tol, tol);
    else
      acc.observe(static_cast<double>(t), fx, fy, tol, tol);
  }
  return acc.finish();
}

}  // namespace sysorder
