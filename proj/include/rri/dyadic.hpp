#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rri {

/* Exact binary rational m * 2^e.  Canonical form: m odd, or m == 0 with
 * e == 0.  All arithmetic is exact; there is no rounding anywhere. */
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(mpz_class mantissa, std::int64_t exponent);
    explicit Dyadic(long value) : Dyadic(mpz_class(value), 0) {}
    explicit Dyadic(const mpz_class& value) : Dyadic(value, 0) {}

    static Dyadic power_of_two(std::int64_t e) { return Dyadic(mpz_class(1), e); }

    const mpz_class& mantissa() const { return man_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return sgn(man_) == 0; }
    int sign() const { return sgn(man_); }
    bool is_integer() const { return exp_ >= 0; }
    bool is_power_of_two() const { return man_ == 1; }

    /* value * 2^k, exact */
    Dyadic times_pow2(std::int64_t k) const;

    /* requires is_integer() */
    mpz_class to_integer() const;

    Dyadic operator-() const;
    Dyadic& operator+=(const Dyadic& rhs);
    Dyadic& operator-=(const Dyadic& rhs);
    Dyadic& operator*=(const Dyadic& rhs);

    friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
    friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
    friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }

    static int cmp(const Dyadic& a, const Dyadic& b);

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.man_ == b.man_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

    /* Exact textual form: plain decimal when the value is an integer,
     * "m*2^e" otherwise.  Never a rounded decimal fraction. */
    std::string to_string() const;

private:
    mpz_class man_{0};
    std::int64_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace rri
