#ifndef SYSORDER_COPULAS_HPP
#define SYSORDER_COPULAS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sysorder/common.hpp"

namespace sysorder {

enum class GeneratorFamily { Independence, Clayton, Gumbel, Frank };

const char* to_string(GeneratorFamily f);

/// Archimedean generator psi with right-continuous inverse phi. All four
/// families are completely monotone in their admitted parameter ranges, so
/// any dimension is valid; max_dim() reports the asserted bound.
class ArchimedeanGenerator {
public:
  static ArchimedeanGenerator independence();
  static ArchimedeanGenerator clayton(double theta);  // theta in (0, 10]
  static ArchimedeanGenerator gumbel(double theta);   // theta in [1, 10]
  static ArchimedeanGenerator frank(double theta);    // theta in (0, 30]

  double psi(double t) const;  // [0, inf] -> [0, 1]
  double phi(double u) const;  // [0, 1] -> [0, inf]; +inf at u = 0

  /// Finite stand-in for phi(0): psi(cap) ~ 1e-30. Sums of phi values clamp
  /// here so deep-tail evaluation degrades to ~0 without NaNs.
  double cap() const { return cap_; }
  int max_dim() const { return max_dim_; }

  GeneratorFamily family() const { return family_; }
  double theta() const { return theta_; }
  std::string name() const;

  bool operator==(const ArchimedeanGenerator& o) const {
    return family_ == o.family_ && theta_ == o.theta_;
  }

private:
  ArchimedeanGenerator(GeneratorFamily f, double theta);

  GeneratorFamily family_;
  double theta_;
  double cap_;
  int max_dim_;
};

double psi_eval(const ArchimedeanGenerator& g, double t);
double phi_eval(const ArchimedeanGenerator& g, double u);

/// psi(sum of clamped phi values). DimensionError if u.size() > max_dim.
double copula_eval(const ArchimedeanGenerator& g, const std::vector<double>& u);

struct SuperAdditivityOptions {
  std::size_t grid = 200;            // grid x grid log-spaced pairs
  std::size_t random_pairs = 10000;  // extra random pairs
  std::uint64_t seed = 17;
  double t_hi = -1.0;                // auto: half of phi1(1e-20)
};

/// Lemma hypothesis: is f = phi2 o psi1 super-additive on the sampled domain?
CheckVerdict check_superadditive(const ArchimedeanGenerator& g1,
                                 const ArchimedeanGenerator& g2,
                                 const SuperAdditivityOptions& opt = {});

/// Lemma conclusion: C_psi1(u) <= C_psi2(u) on sampled u in [0,1]^dim.
CheckVerdict copula_dominance(const ArchimedeanGenerator& g1,
                              const ArchimedeanGenerator& g2, std::size_t dim,
                              std::size_t samples, std::uint64_t seed);

/// Sign-alternation of finite-difference derivatives up to order 4.
CheckVerdict check_d_monotone(const ArchimedeanGenerator& g, int max_order = 4);

/// Frailty sampler (Marshall-Olkin): count x dim row-major uniforms whose
/// joint law has copula C_psi. UnsupportedFamily for Frank.
std::vector<double> sample_copula(const ArchimedeanGenerator& g, std::size_t dim,
                                  std::size_t count, std::uint64_t seed);

}  // namespace sysorder

#endif
