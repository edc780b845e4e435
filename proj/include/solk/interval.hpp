#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

#include "solk/errors.hpp"

namespace solk {

// Closed rational interval [lo, hi].  All certified numeric output of the
// library goes through this type; a degenerate interval (lo == hi) is an
// exact value.
struct RationalInterval {
    mpq_class lo;
    mpq_class hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(mpq_class v) : lo(v), hi(std::move(v)) {}
    RationalInterval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
        if (this->lo > this->hi) throw DomainError("interval with lo > hi");
    }

    bool exact() const { return lo == hi; }
    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
    bool contains(const mpq_class& q) const { return lo <= q && q <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }

    // Certified sign: +1, -1, or 0 for "straddles zero".
    int sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
// Throws DomainError if b contains zero.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

RationalInterval interval_scale(const RationalInterval& a, const mpq_class& c);
// a^k for integer k; a must be positive when k < 0.
RationalInterval interval_pow(const RationalInterval& a, long k);
RationalInterval interval_hull(const RationalInterval& a, const RationalInterval& b);

// Decimal rendering of a rational with the given number of significant
// digits (display only; used for the "decimal" JSON field).
std::string decimal_string(const mpq_class& q, int sig_digits = 20);

} // namespace solk
