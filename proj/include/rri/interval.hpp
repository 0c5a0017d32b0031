#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "rri/dyadic.hpp"

namespace rri {

/* Open interval (lower, upper) with exact dyadic endpoints, lower < upper.
 * The isolator only ever creates intervals whose width is a power of two;
 * the type itself allows any positive width (the sign-variation properties
 * are exercised on arbitrary dyadic intervals). */
class OpenInterval {
public:
    OpenInterval(Dyadic lower, Dyadic upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (!(lower_ < upper_))
            throw std::invalid_argument("OpenInterval: requires lower < upper");
    }

    const Dyadic& lower() const { return lower_; }
    const Dyadic& upper() const { return upper_; }

    Dyadic width() const { return upper_ - lower_; }
    Dyadic midpoint() const { return (lower_ + upper_).times_pow2(-1); }

    bool contains(const Dyadic& x) const { return lower_ < x && x < upper_; }

    friend bool operator==(const OpenInterval& a, const OpenInterval& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }
    friend bool operator!=(const OpenInterval& a, const OpenInterval& b) { return !(a == b); }

    std::string to_string() const {
        return "(" + lower_.to_string() + ", " + upper_.to_string() + ")";
    }

private:
    Dyadic lower_, upper_;
};

inline std::ostream& operator<<(std::ostream& os, const OpenInterval& I) {
    return os << I.to_string();
}

}  // namespace rri
