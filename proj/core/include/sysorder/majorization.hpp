#ifndef SYSORDER_MAJORIZATION_HPP
#define SYSORDER_MAJORIZATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sysorder/common.hpp"

namespace sysorder {

/// The five vector preorders, evaluated on increasing rearrangements exactly
/// as defined: partial sums (M, WeakSuper, WeakSub), partial products
/// (PLarger) and reciprocal partial sums (RM).
enum class MajorizationRelation { M, WeakSuper, WeakSub, PLarger, RM };

enum class OrderedCone { DPlus, EPlus };

const char* to_string(MajorizationRelation r);
const char* to_string(OrderedCone c);

/// x1 >= x2 >= ... >= xn > 0 for DPlus; 0 < x1 <= ... <= xn for EPlus.
bool in_cone(const std::vector<double>& x, OrderedCone cone);

/// True iff x stands in the given relation to y ("x majorizes y" for M, etc.).
bool majorize(const std::vector<double>& x, const std::vector<double>& y,
              MajorizationRelation rel);

struct ImplicationChainReport {
  bool m = false, weak_super = false, weak_sub = false, p_larger = false, rm = false;
  /// Chain breaks (stronger relation holds, weaker fails). Always a bug.
  std::vector<std::string> violations;
};

ImplicationChainReport implication_chain_check(const std::vector<double>& x,
                                               const std::vector<double>& y);

/// A random pair with majorize(x, y, rel) guaranteed (postcondition is
/// rechecked). When a cone is requested both vectors are sorted into it.
std::pair<std::vector<double>, std::vector<double>> generate_pair(
    std::size_t n, MajorizationRelation rel, std::uint64_t seed,
    std::optional<OrderedCone> cone = std::nullopt);

std::pair<std::vector<double>, std::vector<double>> generate_pair(
    std::size_t n, MajorizationRelation rel, Rng& rng,
    std::optional<OrderedCone> cone = std::nullopt);

enum class SchurMode { Convex, Concave };

/// Samples M-ordered pairs and tests f(x) >= f(y) (Convex) or <= (Concave).
CheckVerdict schur_verdict(const std::function<double(const std::vector<double>&)>& f,
                           std::size_t n, std::optional<OrderedCone> cone,
                           std::size_t trials, std::uint64_t seed,
                           SchurMode mode = SchurMode::Convex);

}  // namespace sysorder

#endif
