#include "solk/polynomial.hpp"

namespace solk {

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.square()) throw DomainError("char_poly expects a square matrix");
    int n = m.rows();
    std::vector<mpz_class> c(n + 1);
    c[n] = 1; // leading coefficient of x^n
    IntMatrix ak = m;
    mpz_class ck;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix shifted = ak;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
            ak = m * shifted;
        }
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += ak.at(i, i);
        mpz_class t = -tr;
        mpz_class kk = k;
        mpz_divexact(ck.get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = ck;
    }
    return IntPolynomial(std::move(c));
}

IntMatrix eval_at_matrix(const IntPolynomial& p, const IntMatrix& m) {
    if (!m.square()) throw DomainError("matrix argument must be square");
    int n = m.rows();
    IntMatrix acc = IntMatrix::zero(n);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
    coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) coeffs.emplace_back(c);
    trim();
}

mpq_class RatPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPolynomial RatPolynomial::derivative() const {
    if (coeffs.size() <= 1) return RatPolynomial{};
    std::vector<mpq_class> d(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = coeffs[i] * mpq_class(static_cast<long>(i));
    return RatPolynomial(std::move(d));
}

namespace {

// Remainder of a by b over Q.
RatPolynomial poly_rem(RatPolynomial a, const RatPolynomial& b) {
    if (b.zero()) throw DomainError("polynomial division by zero");
    while (!a.zero() && a.degree() >= b.degree()) {
        mpq_class factor = a.coeffs.back() / b.coeffs.back();
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i) a.coeffs[i + shift] -= factor * b.coeffs[i];
        a.trim();
    }
    return a;
}

RatPolynomial poly_gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.zero()) {
        RatPolynomial r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.zero()) {
        mpq_class lead = a.coeffs.back();
        for (auto& c : a.coeffs) c /= lead; // monic
    }
    return a;
}

RatPolynomial poly_div_exact(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<mpq_class> q(a.degree() - b.degree() + 1, 0);
    RatPolynomial rem = a;
    while (!rem.zero() && rem.degree() >= b.degree()) {
        mpq_class factor = rem.coeffs.back() / b.coeffs.back();
        int shift = rem.degree() - b.degree();
        q[shift] = factor;
        for (int i = 0; i <= b.degree(); ++i) rem.coeffs[i + shift] -= factor * b.coeffs[i];
        rem.trim();
    }
    if (!rem.zero()) throw DomainError("non-exact polynomial division");
    return RatPolynomial(std::move(q));
}

} // namespace

RatPolynomial squarefree_part(const RatPolynomial& p) {
    if (p.zero() || p.degree() == 0) return p;
    RatPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return poly_div_exact(p, g);
}

SturmChain::SturmChain(const RatPolynomial& squarefree) {
    chain.push_back(squarefree);
    if (squarefree.degree() >= 1) {
        chain.push_back(squarefree.derivative());
        while (chain.back().degree() >= 1) {
            RatPolynomial r = poly_rem(chain[chain.size() - 2], chain.back());
            if (r.zero()) break;
            for (auto& c : r.coeffs) c = -c;
            chain.push_back(std::move(r));
        }
    }
}

int SturmChain::variations(const mpq_class& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
    if (a >= b) return 0;
    return variations(a) - variations(b);
}

} // namespace solk
