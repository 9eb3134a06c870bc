#pragma once

#include <vector>

#include "logquiver/dt.hpp"

namespace logquiver {

struct BruteForceCount {
  /// |R^ss(F_p)| / |G(F_p)|, to be compared with the HN count at q = p.
  Rational semistable;
  /// Number of stable isomorphism classes, |R^st(F_p)| (p - 1) / |G(F_p)|.
  Rational stable_orbits;
  long representations = 0;
};

/// Largest number of representations brute_force_semistable_count will enumerate.
inline constexpr long kBruteForceGuard = 10'000'000;

/// True when p^(dimension of the representation space) is within the guard.
bool brute_force_feasible(const Quiver& q, const DimensionVector& d, long p);

/// Enumerates every representation of dimension d over F_p and tests
/// (semi)stability by searching all invariant subspace tuples. Throws
/// std::invalid_argument when p is not a small prime or the guard is exceeded.
BruteForceCount brute_force_semistable_count(const Quiver& q, const DimensionVector& d, const Stability& theta,
                                             long p);

/// All e-dimensional subspaces of F_p^n, each as the rows of its reduced echelon basis.
std::vector<std::vector<std::vector<int>>> subspaces(int n, int e, long p);

}  // namespace logquiver
