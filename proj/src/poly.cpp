#include "rri/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rri {

namespace {

void trim(std::vector<mpz_class>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

const mpz_class zero_constant{0};

}  // namespace

BigIntPoly::BigIntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

BigIntPoly::BigIntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim(coeffs_);
}

const mpz_class& BigIntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_constant;
}

const mpz_class& BigIntPoly::leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

BigIntPoly BigIntPoly::operator-() const {
    std::vector<mpz_class> c(coeffs_);
    for (auto& x : c) x = -x;
    return BigIntPoly(std::move(c));
}

BigIntPoly operator+(const BigIntPoly& a, const BigIntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return BigIntPoly(std::move(c));
}

BigIntPoly operator-(const BigIntPoly& a, const BigIntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return BigIntPoly(std::move(c));
}

BigIntPoly operator*(const BigIntPoly& a, const BigIntPoly& b) {
    if (a.is_zero() || b.is_zero()) return BigIntPoly();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BigIntPoly(std::move(c));
}

BigIntPoly operator*(const mpz_class& c, const BigIntPoly& a) {
    if (sgn(c) == 0) return BigIntPoly();
    std::vector<mpz_class> r(a.coeffs_);
    for (auto& x : r) x *= c;
    return BigIntPoly(std::move(r));
}

std::string BigIntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        mpz_class m = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (i == 0 || m != 1) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BigIntPoly& f) { return os << f.to_string(); }

BigIntPoly poly_derivative(const BigIntPoly& f) {
    if (f.degree() < 1) return BigIntPoly();
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mpz_class(static_cast<unsigned long>(i + 1)) * f.coeff(i + 1);
    return BigIntPoly(std::move(c));
}

Dyadic poly_eval(const BigIntPoly& f, const Dyadic& x) {
    Dyadic r;
    for (int i = f.degree(); i >= 0; --i)
        r = r * x + Dyadic(f.coeff(static_cast<std::size_t>(i)));
    return r;
}

mpz_class poly_eval(const BigIntPoly& f, const mpz_class& x) {
    mpz_class r = 0;
    for (int i = f.degree(); i >= 0; --i) r = r * x + f.coeff(static_cast<std::size_t>(i));
    return r;
}

BigIntPoly compose_affine(const BigIntPoly& f, const Dyadic& a, const Dyadic& w) {
    if (w.sign() <= 0) throw std::invalid_argument("compose_affine: width must be positive");
    if (f.is_zero()) return f;
    const std::int64_t k = std::max<std::int64_t>({0, -a.exponent(), -w.exponent()});
    /* a + w*x = 2^-k * (A + B*x) with A, B integers */
    mpz_class A, B;
    mpz_mul_2exp(A.get_mpz_t(), a.mantissa().get_mpz_t(),
                 static_cast<mp_bitcnt_t>(a.exponent() + k));
    mpz_mul_2exp(B.get_mpz_t(), w.mantissa().get_mpz_t(),
                 static_cast<mp_bitcnt_t>(w.exponent() + k));
    /* Horner: r <- r*(A + B*x) + a_i * 2^(k*(n-i)), i = n..0 */
    const int n = f.degree();
    std::vector<mpz_class> r;
    r.reserve(static_cast<std::size_t>(n) + 1);
    mpz_class scale = 1;
    for (int i = n; i >= 0; --i) {
        if (i < n) {
            r.push_back(0);
            for (std::size_t j = r.size() - 1; j > 0; --j) r[j] = r[j] * A + r[j - 1] * B;
            r[0] *= A;
        }
        if (r.empty()) r.push_back(0);
        r[0] += f.coeff(static_cast<std::size_t>(i)) * scale;
        if (i > 0 && k > 0) mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(),
                                         static_cast<mp_bitcnt_t>(k));
    }
    return BigIntPoly(std::move(r));
}

BigIntPoly reverse_coeffs(const BigIntPoly& f) {
    std::vector<mpz_class> c(f.coeffs());
    std::reverse(c.begin(), c.end());
    return BigIntPoly(std::move(c));
}

void taylor_shift_1_inplace(std::vector<mpz_class>& coeffs) {
    if (coeffs.size() < 2) return;
    const std::size_t n = coeffs.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j > i; --j) coeffs[j - 1] += coeffs[j];
}

BigIntPoly taylor_shift_1(const BigIntPoly& f) {
    std::vector<mpz_class> c(f.coeffs());
    taylor_shift_1_inplace(c);
    return BigIntPoly(std::move(c));
}

mpz_class content(const BigIntPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BigIntPoly primitive_part(const BigIntPoly& f) {
    if (f.is_zero()) return f;
    const mpz_class c = content(f);
    if (c == 1) return f;
    std::vector<mpz_class> r(f.coeffs());
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return BigIntPoly(std::move(r));
}

BigIntPoly divide_exact(const BigIntPoly& f, const BigIntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (f.is_zero()) return f;
    if (f.degree() < d.degree()) throw std::invalid_argument("divide_exact: not divisible");
    std::vector<mpz_class> rem(f.coeffs());
    const std::size_t dn = static_cast<std::size_t>(d.degree());
    std::vector<mpz_class> q(static_cast<std::size_t>(f.degree()) - dn + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class& top = rem[i + dn];
        if (!mpz_divisible_p(top.get_mpz_t(), d.leading_coeff().get_mpz_t()))
            throw std::invalid_argument("divide_exact: not divisible");
        mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), d.leading_coeff().get_mpz_t());
        for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= q[i] * d.coeff(j);
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw std::invalid_argument("divide_exact: not divisible");
    return BigIntPoly(std::move(q));
}

namespace {

/* lc(d)^(deg r - deg d + 1) * r mod d, textbook pseudo-division */
BigIntPoly pseudo_rem(const BigIntPoly& r0, const BigIntPoly& d) {
    std::vector<mpz_class> r(r0.coeffs());
    const std::size_t dn = static_cast<std::size_t>(d.degree());
    const mpz_class& lc = d.leading_coeff();
    long e = static_cast<long>(r.size()) - 1 - static_cast<long>(dn) + 1;
    while (r.size() > dn) {
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        if (r.size() <= dn) break;
        const mpz_class top = r.back();
        const std::size_t shift = r.size() - 1 - dn;
        for (auto& x : r) x *= lc;
        for (std::size_t j = 0; j <= dn; ++j) r[shift + j] -= top * d.coeff(j);
        --e;
    }
    BigIntPoly rem{std::move(r)};
    for (; e > 0; --e) rem = lc * rem;
    return rem;
}

}  // namespace

BigIntPoly gcd_primitive(const BigIntPoly& f, const BigIntPoly& g) {
    auto normalize = [](const BigIntPoly& p) {
        BigIntPoly q = primitive_part(p);
        return q.is_zero() || sgn(q.leading_coeff()) > 0 ? q : -q;
    };
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    BigIntPoly a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        BigIntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return sgn(a.leading_coeff()) > 0 ? a : -a;
}

BigIntPoly square_free_part(const BigIntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
    if (f.degree() == 0) return BigIntPoly{1};
    const BigIntPoly g = gcd_primitive(f, poly_derivative(f));
    BigIntPoly pf = primitive_part(f);
    BigIntPoly sf = g.degree() == 0 ? std::move(pf) : divide_exact(pf, g);
    return sgn(sf.leading_coeff()) > 0 ? sf : -sf;
}

int coefficient_bitsize(const BigIntPoly& f) {
    std::size_t bits = 1;
    for (const auto& c : f.coeffs()) {
        if (sgn(c) == 0) continue;
        bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    return static_cast<int>(bits);
}

}  // namespace rri
