#include "rri/families.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace rri {

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "mignotte") return Family::mignotte;
    if (name == "wilkinson") return Family::wilkinson;
    if (name == "chebyshev") return Family::chebyshev;
    if (name == "random") return Family::random_poly;
    return std::nullopt;
}

std::string family_name(Family family) {
    switch (family) {
        case Family::mignotte: return "mignotte";
        case Family::wilkinson: return "wilkinson";
        case Family::chebyshev: return "chebyshev";
        case Family::random_poly: return "random";
    }
    throw std::logic_error("family_name: bad enum value");
}

namespace {

BigIntPoly mignotte(int n, int tau) {
    const int half = (tau + 1) / 2;
    mpz_class a = 1;
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(half - 1));
    /* x^n - 2*(a*x - 1)^2 */
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c[0] = -2;
    c[1] = 4 * a;
    c[2] = -2 * a * a;
    c[static_cast<std::size_t>(n)] += 1;
    BigIntPoly f{std::move(c)};
    if (square_free_part(f).degree() != n)
        throw std::logic_error("mignotte: generated polynomial is not square-free");
    return f;
}

BigIntPoly wilkinson(int n) {
    BigIntPoly f{1};
    for (int i = 1; i <= n; ++i) f = f * BigIntPoly{-i, 1};
    return f;
}

BigIntPoly chebyshev(int n) {
    BigIntPoly prev{1};
    BigIntPoly cur{0, 1};
    const BigIntPoly two_x{0, 2};
    for (int i = 2; i <= n; ++i) {
        BigIntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/* uniform integer in [0, 2^bits - 1], built from 32-bit draws */
mpz_class random_bits(std::mt19937_64& rng, int bits) {
    mpz_class r = 0;
    for (int got = 0; got < bits; got += 32) {
        const int take = std::min(32, bits - got);
        const auto chunk = static_cast<unsigned long>(rng() >> (64 - take));
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(take));
        r += chunk;
    }
    return r;
}

/* uniform over the 2^(tau+1) - 1 integers in (-2^tau, 2^tau), by rejection */
mpz_class random_coefficient(std::mt19937_64& rng, int tau) {
    mpz_class top = 1;
    mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(tau + 1));
    --top;  /* 2^(tau+1) - 1 admissible values */
    while (true) {
        mpz_class u = random_bits(rng, tau + 1);
        if (u >= top) continue;
        mpz_class bound = 1;
        mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(tau));
        return u - (bound - 1);
    }
}

BigIntPoly random_square_free(int n, int tau, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
        for (auto& x : c) x = random_coefficient(rng, tau);
        BigIntPoly f{std::move(c)};
        if (f.degree() != n) continue;
        if (square_free_part(f).degree() != n) continue;
        return f;
    }
}

}  // namespace

BigIntPoly generate_family(Family family, int n, int tau, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generate_family: requires n >= 2");
    const bool needs_tau = family == Family::mignotte || family == Family::random_poly;
    if (needs_tau && tau < 2)
        throw std::invalid_argument("generate_family: requires tau >= 2 for this family");
    switch (family) {
        case Family::mignotte: return mignotte(n, tau);
        case Family::wilkinson: return wilkinson(n);
        case Family::chebyshev: return chebyshev(n);
        case Family::random_poly: return random_square_free(n, tau, seed);
    }
    throw std::logic_error("generate_family: bad enum value");
}

}  // namespace rri
