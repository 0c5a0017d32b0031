#include "rri/sturm.hpp"

#include <stdexcept>

namespace rri {

namespace {

/* -(p rem q) scaled by a positive constant and stripped to primitive form.
 * Pseudo-division multiplies p by lc(q)^(delta+1); an extra factor of lc(q)
 * makes the total power even (positive) when delta+1 is odd, which is the
 * "leading coefficient squared" scaling that keeps every sign intact. */
BigIntPoly negated_remainder(const BigIntPoly& p, const BigIntPoly& q) {
    const std::size_t qn = static_cast<std::size_t>(q.degree());
    const mpz_class& lc = q.leading_coeff();
    std::vector<mpz_class> r(p.coeffs());
    long e = static_cast<long>(r.size()) - 1 - static_cast<long>(qn) + 1;
    while (true) {
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        if (r.size() <= qn) break;
        const mpz_class top = r.back();
        const std::size_t shift = r.size() - 1 - qn;
        for (auto& x : r) x *= lc;
        for (std::size_t j = 0; j <= qn; ++j) r[shift + j] -= top * q.coeff(j);
        --e;
    }
    BigIntPoly rem{std::move(r)};
    if (rem.is_zero()) return rem;
    for (; e > 0; --e) rem = lc * rem;
    const long applied = static_cast<long>(p.degree()) - static_cast<long>(qn) + 1;
    if (applied % 2 != 0 && sgn(lc) < 0) rem = -rem;
    return -primitive_part(rem);
}

}  // namespace

SturmChain sturm_chain(const BigIntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("sturm_chain: degree must be at least 1");
    SturmChain chain;
    chain.polys.push_back(f);
    chain.polys.push_back(poly_derivative(f));
    while (!chain.polys.back().is_zero()) {
        const BigIntPoly& prev = chain.polys[chain.polys.size() - 2];
        const BigIntPoly& cur = chain.polys.back();
        if (cur.degree() == 0) break;
        BigIntPoly next = negated_remainder(prev, cur);
        if (next.is_zero()) break;
        chain.polys.push_back(std::move(next));
    }
    return chain;
}

int sturm_variations(const SturmChain& chain, const Dyadic& x) {
    if (poly_eval(chain.polys.front(), x).is_zero())
        throw std::domain_error("sturm_variations: x is a root of f");
    int count = 0;
    int last = 0;
    for (const auto& p : chain.polys) {
        const int s = poly_eval(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int sturm_count(const SturmChain& chain, const OpenInterval& I) {
    const int va = sturm_variations(chain, I.lower());
    const int vb = sturm_variations(chain, I.upper());
    if (va < vb) throw std::logic_error("sturm_count: variation count increased");
    return va - vb;
}

int sturm_count(const BigIntPoly& f, const OpenInterval& I) {
    return sturm_count(sturm_chain(f), I);
}

}  // namespace rri
