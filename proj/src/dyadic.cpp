#include "rri/dyadic.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace rri {

namespace {

/* bits in |z|; 0 for z == 0 */
std::size_t bit_length(const mpz_class& z) {
    if (sgn(z) == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent)
    : man_(std::move(mantissa)), exp_(exponent) {
    if (sgn(man_) == 0) {
        exp_ = 0;
        return;
    }
    if (mpz_odd_p(man_.get_mpz_t())) return;
    /* trailing zero count is the same for m and -m */
    const mp_bitcnt_t shift = mpz_scan1(man_.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), shift);
    exp_ += static_cast<std::int64_t>(shift);
}

Dyadic Dyadic::times_pow2(std::int64_t k) const {
    if (is_zero()) return Dyadic();
    Dyadic r(*this);
    r.exp_ += k;
    return r;
}

mpz_class Dyadic::to_integer() const {
    if (!is_integer()) throw std::logic_error("Dyadic::to_integer: not an integer");
    mpz_class r;
    mpz_mul_2exp(r.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
    return r;
}

Dyadic Dyadic::operator-() const {
    Dyadic r(*this);
    r.man_ = -r.man_;
    return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const std::int64_t e = std::min(exp_, rhs.exp_);
    mpz_class a, b;
    mpz_mul_2exp(a.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_ - e));
    mpz_mul_2exp(b.get_mpz_t(), rhs.man_.get_mpz_t(), static_cast<mp_bitcnt_t>(rhs.exp_ - e));
    return *this = Dyadic(a + b, e);
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = Dyadic();
    /* odd * odd stays odd, no renormalization needed */
    man_ *= rhs.man_;
    exp_ += rhs.exp_;
    return *this;
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    const int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    /* |x| lies in [2^(e+L-1), 2^(e+L)); disjoint ranges decide without shifting */
    const std::int64_t la = a.exp_ + static_cast<std::int64_t>(bit_length(a.man_));
    const std::int64_t lb = b.exp_ + static_cast<std::int64_t>(bit_length(b.man_));
    if (la != lb) {
        const int mag = la < lb ? -1 : 1;
        return sa > 0 ? mag : -mag;
    }
    const std::int64_t e = std::min(a.exp_, b.exp_);
    mpz_class ma, mb;
    mpz_mul_2exp(ma.get_mpz_t(), a.man_.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp_ - e));
    mpz_mul_2exp(mb.get_mpz_t(), b.man_.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp_ - e));
    return mpz_cmp(ma.get_mpz_t(), mb.get_mpz_t());
}

std::string Dyadic::to_string() const {
    if (is_zero()) return "0";
    if (exp_ >= 0) return to_integer().get_str();
    return man_.get_str() + "*2^" + std::to_string(exp_);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

}  // namespace rri
