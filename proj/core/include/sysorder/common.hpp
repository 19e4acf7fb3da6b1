#ifndef SYSORDER_COMMON_HPP
#define SYSORDER_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sysorder {

inline constexpr const char* kArtifactVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

class LengthMismatch : public std::invalid_argument {
public:
  explicit LengthMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

class PositivityError : public std::invalid_argument {
public:
  explicit PositivityError(const std::string& msg) : std::invalid_argument(msg) {}
};

class MissingEvaluator : public std::logic_error {
public:
  explicit MissingEvaluator(const std::string& msg) : std::logic_error(msg) {}
};

class UnsupportedFamily : public std::logic_error {
public:
  explicit UnsupportedFamily(const std::string& msg) : std::logic_error(msg) {}
};

class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

class ExhaustedRetries : public std::runtime_error {
public:
  explicit ExhaustedRetries(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Four-valued numerical verdicts
// ---------------------------------------------------------------------------

enum class CheckStatus { Holds, HoldsWithEquality, Fails, Inconclusive };

const char* to_string(CheckStatus s);

/// One offending sample: the input point together with both sides of the
/// inequality that broke there.
struct Witness {
  double point = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckVerdict {
  CheckStatus status = CheckStatus::Inconclusive;
  std::vector<Witness> witnesses;  // nonempty iff status == Fails
  double slack = 0.0;              // max signed violation observed (<=0: none)
  double tolerance = 0.0;          // tolerance the verdict was issued under

  bool holds() const {
    return status == CheckStatus::Holds || status == CheckStatus::HoldsWithEquality;
  }
  bool failed() const { return status == CheckStatus::Fails; }
};

/// Folds a stream of inequality checks `lhs <= rhs` into a CheckVerdict.
/// Violations inside (tolerance, noise_band] become Inconclusive instead of
/// Fails; a run whose every |lhs-rhs| stays below equality_eps is promoted to
/// HoldsWithEquality.
class VerdictAccumulator {
public:
  VerdictAccumulator(double tolerance, double equality_eps, double noise_band = -1.0)
      : tol_(tolerance), eq_eps_(equality_eps),
        noise_(noise_band < tolerance ? tolerance : noise_band) {}

  void observe(double point, double lhs, double rhs);
  void observe(double point, double lhs, double rhs, double local_tol, double local_noise);
  std::size_t count() const { return n_; }
  CheckVerdict finish() const;

private:
  double tol_, eq_eps_, noise_;
  std::size_t n_ = 0;
  double max_violation_ = -1e308;
  double max_abs_gap_ = 0.0;
  bool any_beyond_noise_ = false;
  bool any_in_band_ = false;
  Witness worst_{};
};

// ---------------------------------------------------------------------------
// Deterministic RNG: splitmix64-seeded xoshiro256**, with per-index substream
// derivation so parallel trials are schedule independent.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  /// Independent stream for trial/row `index` under a master seed.
  static Rng substream(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t sm = master_seed ^ (0xD1B54A32D192ED03ull * (index + 1));
    return Rng(splitmix64(sm));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform draw strictly inside (0,1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double exponential() ;            // unit rate
  double normal();                  // standard normal, via quantile transform
  double gamma(double shape, double scale);
  /// Positive stable law with Laplace transform exp(-s^alpha), 0 < alpha < 1.
  double positive_stable(double alpha);

  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % static_cast<std::uint64_t>(n));
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

/// Standard normal quantile (Wichura's AS241, double precision).
double normal_quantile(double p);
/// Standard normal cdf.
double normal_cdf(double x);

}  // namespace sysorder

#endif
