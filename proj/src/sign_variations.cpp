#include "rri/sign_variations.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rri {

int sign_var_count(std::span<const mpz_class> coeffs) {
    int count = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int var(const BigIntPoly& f, const OpenInterval& I) {
    if (f.degree() < 1) throw std::invalid_argument("var: degree must be at least 1");
    const BigIntPoly g = compose_affine(f, I.lower(), I.width());
    /* full length-(n+1) sequence: reverse, then shift by one */
    std::vector<mpz_class> seq(g.coeffs());
    std::reverse(seq.begin(), seq.end());
    taylor_shift_1_inplace(seq);
    return sign_var_count(seq);
}

}  // namespace rri
