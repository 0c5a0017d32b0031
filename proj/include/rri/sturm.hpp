#pragma once

#include <vector>

#include "rri/interval.hpp"
#include "rri/poly.hpp"

namespace rri {

/* Signed-remainder chain p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i),
 * each element reduced by a positive constant factor only, so the sign of
 * every p_i(x) agrees with the rational chain everywhere. */
struct SturmChain {
    std::vector<BigIntPoly> polys;
};

/* Requires deg f >= 1. */
SturmChain sturm_chain(const BigIntPoly& f);

/* Sign variations of the chain evaluated at x; throws std::domain_error if
 * the leading chain element vanishes at x. */
int sturm_variations(const SturmChain& chain, const Dyadic& x);

/* Number of distinct real roots of f in the open interval I.  Requires
 * f(lower) != 0 and f(upper) != 0; throws std::domain_error otherwise. */
int sturm_count(const SturmChain& chain, const OpenInterval& I);
int sturm_count(const BigIntPoly& f, const OpenInterval& I);

}  // namespace rri
