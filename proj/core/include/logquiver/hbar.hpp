#pragma once

#include <vector>

#include "logquiver/half_laurent.hpp"

namespace logquiver {

/// Genus expansion of a bar-invariant Laurent polynomial.
///
/// Returns N_0..N_gmax with
///   sum_g N_g hbar^{2g-1} = (-1)^{ell+1} P(e^{i hbar/2}) / (2 sin(hbar/2)),
/// all in exact arithmetic. Throws std::domain_error if P is not bar-invariant.
std::vector<Rational> hbar_expand(const HalfLaurent& p, int ell, int gmax);

/// Coefficients of hbar^{2n}, n = 0..order, of P(e^{i hbar/2}) for bar-invariant P.
std::vector<Rational> cosine_expansion(const HalfLaurent& p, int order);

/// Coefficients of hbar^{2n}, n = 0..order, of 2 sin(hbar/2) / hbar.
std::vector<Rational> sine_series(int order);

}  // namespace logquiver
