#pragma once

#include <gmpxx.h>

#include <span>

#include "rri/interval.hpp"
#include "rri/poly.hpp"

namespace rri {

/* Sign changes in the sequence after dropping zero entries. */
int sign_var_count(std::span<const mpz_class> coeffs);

/* Descartes variation count of f on the open interval I: the number of
 * coefficient sign changes of (x+1)^n * f((a + b*x)/(1 + x)), computed as
 * sign_var_count(taylor_shift_1(reverse_coeffs(compose_affine(f, a, b-a)))).
 * Bounds the number of real roots of f in I from above and matches its
 * parity.  Requires deg f >= 1. */
int var(const BigIntPoly& f, const OpenInterval& I);

}  // namespace rri
