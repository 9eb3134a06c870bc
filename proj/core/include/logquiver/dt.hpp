#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logquiver/catalog.hpp"
#include "logquiver/geometry.hpp"
#include "logquiver/half_laurent.hpp"
#include "logquiver/rational_function.hpp"

namespace logquiver {

/// Linear stability weights on the vertices.
struct Stability {
  std::vector<Rational> theta;

  static Stability from_integers(const std::vector<long>& values);
  /// theta . e / sum(e); e must be nonzero.
  Rational slope(const std::vector<long>& e) const;
  std::vector<long> as_integers() const;  // throws if some weight is not integral
};

/// Raised when refined_dt cannot produce an invariant; diagnostics say why.
struct DtError : std::runtime_error {
  DtError(const std::string& what, std::vector<std::string> diagnostics)
      : std::runtime_error(what), diagnostics(std::move(diagnostics)) {}
  std::vector<std::string> diagnostics;
};

struct DtResult {
  HalfLaurent omega;
  long moduli_dimension = 0;
  Polynomial moduli_count;
  Stability theta;
  bool generic = true;
  std::vector<std::string> diagnostics;
};

/// <d,e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j
long euler_form(const Quiver& q, const std::vector<long>& d, const std::vector<long>& e);

/// Automorphism-weighted count of all representations: q^{sum_a d_i d_j} / prod |GL_{d_i}|.
RationalFunctionQ stack_count(const Quiver& q, const DimensionVector& d);

/// Harder-Narasimhan recursion for the semistable stack count.
///
/// Caches both the semistable counts and the partial sums over HN types keyed
/// on (dimension vector, slope bound). One instance per (quiver, stability).
class HnRecursion {
 public:
  HnRecursion(Quiver q, Stability theta, bool use_cache = true);
  RationalFunctionQ semistable_count(const std::vector<long>& d);
  const Quiver& quiver() const { return q_; }
  const Stability& stability() const { return theta_; }
  size_t cache_size() const { return ss_cache_.size() + tail_cache_.size(); }

  /// Seeds or exports the semistable part of the cache (for spilling to disk).
  const std::map<std::vector<long>, RationalFunctionQ>& semistable_cache() const { return ss_cache_; }
  void seed(const std::vector<long>& d, RationalFunctionQ value);

 private:
  RationalFunctionQ tail(const std::vector<long>& d, const Rational& bound);
  RationalFunctionQ all_count(const std::vector<long>& d);

  Quiver q_;
  Stability theta_;
  bool use_cache_;
  std::map<std::vector<long>, RationalFunctionQ> ss_cache_;
  std::map<std::pair<std::vector<long>, Rational>, RationalFunctionQ> tail_cache_;
};

RationalFunctionQ hn_semistable_count(const Quiver& q, const DimensionVector& d, const Stability& theta,
                                      bool use_cache = true);

/// Proper subdimension vectors 0 < e < d with slope equal to that of d.
std::vector<std::vector<long>> genericity_check(const Quiver& q, const DimensionVector& d,
                                                const Stability& theta);

/// True when the vertices with positive dimension span a connected subquiver.
bool has_connected_support(const Quiver& q, const DimensionVector& d);

/// theta_{v_k} = -k^2 along the topological order v_1..v_n.
Stability default_stability(const Quiver& q);

/// Default stability if it is generic with nonempty semistable locus, otherwise
/// the first strictly decreasing integer stability (|theta| <= 4 n^2) that is.
/// Throws DtError if the bounded search fails.
Stability calibrated_stability(const Quiver& q, const DimensionVector& d);

DtResult refined_dt(const Quiver& q, const DimensionVector& d, const Stability& theta);

/// Result of evaluating the quiver side on a catalog class.
struct ClassOmega {
  HalfLaurent omega;
  bool zero_rule = false;  // dimension vector had a negative entry
  std::optional<DtResult> dt;
  Quiver quiver;
  DimensionVector dims;
};

/// Builds the quiver of the class and returns its refined invariant under the
/// calibrated stability, or 0 for invalid dimension vectors. An explicit
/// stability overrides calibration. Cyclic quivers raise HypothesisError.
ClassOmega omega_for_class(const CatalogInstance& instance, const std::optional<Stability>& theta = std::nullopt);
ClassOmega omega_for_model(const ToricModel& model, const std::optional<Stability>& theta = std::nullopt);

}  // namespace logquiver
