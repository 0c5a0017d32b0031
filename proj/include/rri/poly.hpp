#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "rri/dyadic.hpp"

namespace rri {

/* Univariate polynomial over Z, coefficients stored ascending by degree.
 * Canonical form: no trailing zero coefficients; the zero polynomial is the
 * empty vector, with degree() == -1. */
class BigIntPoly {
public:
    BigIntPoly() = default;
    explicit BigIntPoly(std::vector<mpz_class> coeffs);
    BigIntPoly(std::initializer_list<long> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /* zero beyond the degree */
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading_coeff() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    BigIntPoly operator-() const;
    friend BigIntPoly operator+(const BigIntPoly& a, const BigIntPoly& b);
    friend BigIntPoly operator-(const BigIntPoly& a, const BigIntPoly& b);
    friend BigIntPoly operator*(const BigIntPoly& a, const BigIntPoly& b);
    friend BigIntPoly operator*(const mpz_class& c, const BigIntPoly& a);

    friend bool operator==(const BigIntPoly& a, const BigIntPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BigIntPoly& a, const BigIntPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BigIntPoly& f);

BigIntPoly poly_derivative(const BigIntPoly& f);

Dyadic poly_eval(const BigIntPoly& f, const Dyadic& x);
mpz_class poly_eval(const BigIntPoly& f, const mpz_class& x);

/* Integer image of f under x -> a + w*x: returns C * f(a + w*x) where
 * C = 2^(n*k), n = deg f, k = max(0, -exp(a), -exp(w)).  C is the minimal
 * power of two of that shape clearing the dyadic denominators.  Requires
 * w > 0.  Degree is preserved (the leading coefficient picks up a positive
 * power of two). */
BigIntPoly compose_affine(const BigIntPoly& f, const Dyadic& a, const Dyadic& w);

/* x^n * f(1/x) at the stored degree n */
BigIntPoly reverse_coeffs(const BigIntPoly& f);

/* f(x + 1) */
BigIntPoly taylor_shift_1(const BigIntPoly& f);

/* In-place f(x+1) on a raw coefficient sequence of any length; leading zero
 * entries stay in place, so the full length-(n+1) pipeline form is kept. */
void taylor_shift_1_inplace(std::vector<mpz_class>& coeffs);

/* gcd of the coefficients, >= 0; zero only for the zero polynomial */
mpz_class content(const BigIntPoly& f);

/* f divided by its (positive) content; sign of the leading coefficient kept */
BigIntPoly primitive_part(const BigIntPoly& f);

/* exact quotient f / d; throws if d does not divide f */
BigIntPoly divide_exact(const BigIntPoly& f, const BigIntPoly& d);

/* primitive gcd with positive leading coefficient (Euclidean on primitive
 * parts with pseudo-remainders; adequate at the degrees handled here) */
BigIntPoly gcd_primitive(const BigIntPoly& f, const BigIntPoly& g);

/* f / gcd(f, f'), content removed, leading coefficient positive */
BigIntPoly square_free_part(const BigIntPoly& f);

/* smallest tau >= 1 with max |coeff| < 2^tau */
int coefficient_bitsize(const BigIntPoly& f);

}  // namespace rri
