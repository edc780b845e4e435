#include "solk/interval.hpp"

#include <algorithm>
#include <sstream>

namespace solk {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) throw DomainError("interval division by interval containing zero");
    mpq_class p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RationalInterval interval_scale(const RationalInterval& a, const mpq_class& c) {
    if (sgn(c) >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

RationalInterval interval_pow(const RationalInterval& a, long k) {
    if (k == 0) return RationalInterval(mpq_class(1));
    if (k < 0) {
        if (a.contains_zero()) throw DomainError("negative power of interval containing zero");
        RationalInterval inv{mpq_class(1) / a.hi, mpq_class(1) / a.lo};
        return interval_pow(inv, -k);
    }
    // a >= 0 in every use here (lambda, measures); guard anyway.
    if (sgn(a.lo) < 0) throw DomainError("interval_pow expects nonnegative base");
    mpq_class lo = 1, hi = 1;
    for (long i = 0; i < k; ++i) { lo *= a.lo; hi *= a.hi; }
    return {lo, hi};
}

RationalInterval interval_hull(const RationalInterval& a, const RationalInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::string decimal_string(const mpq_class& q, int sig_digits) {
    if (sgn(q) == 0) return "0";
    mpq_class a = abs(q);
    // Find exponent e with 10^(e-1) <= a < 10^e.
    int e = 0;
    mpq_class t = a;
    while (t >= 1) { t /= 10; ++e; }
    while (t < mpq_class(1, 10)) { t *= 10; --e; }
    // digits = round(a * 10^(sig - e))
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned>(std::abs(sig_digits - e)));
    mpq_class scaled = (sig_digits - e >= 0) ? mpq_class(a * scale) : mpq_class(a / scale);
    mpz_class digits = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string ds = digits.get_str();
    if (static_cast<int>(ds.size()) > sig_digits) { ds.resize(sig_digits); ++e; }
    std::ostringstream out;
    if (sgn(q) < 0) out << '-';
    out << "0." << ds << "e" << e;
    return out.str();
}

} // namespace solk
