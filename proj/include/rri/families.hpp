#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rri/poly.hpp"

namespace rri {

enum class Family { mignotte, wilkinson, chebyshev, random_poly };

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family family);

/* Deterministic benchmark instances.
 *   mignotte:  x^n - 2*(a*x - 1)^2 with a = 2^(ceil(tau/2) - 1); the close
 *              root pair makes the subdivision depth scale with tau.
 *              Square-freeness is verified at generation.
 *   wilkinson: (x-1)(x-2)...(x-n), ignores tau and seed.
 *   chebyshev: T_n by the three-term recurrence, ignores tau and seed.
 *   random:    coefficients uniform over (-2^tau, 2^tau), redrawn until the
 *              degree is exactly n and the polynomial is square-free; fully
 *              reproducible from the seed.
 * Requires n >= 2, and tau >= 2 for mignotte and random. */
BigIntPoly generate_family(Family family, int n, int tau, std::uint64_t seed);

}  // namespace rri
