#pragma once

#include <gmpxx.h>
#include <vector>

#include "solk/matrix.hpp"

namespace solk {

// Integer polynomial, coefficients in ascending degree order.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpq_class eval(const mpq_class& x) const;

    bool operator==(const IntPolynomial& o) const = default;
};

// det(xI - M) with exact integer coefficients (Faddeev-LeVerrier; the
// divisions are exact over Z).
IntPolynomial char_poly(const IntMatrix& m);

// Evaluate p at a matrix argument (Cayley-Hamilton check).
IntMatrix eval_at_matrix(const IntPolynomial& p, const IntMatrix& m);

// Rational polynomial machinery for Sturm counting.
struct RatPolynomial {
    std::vector<mpq_class> coeffs; // ascending

    explicit RatPolynomial(std::vector<mpq_class> c = {}) : coeffs(std::move(c)) { trim(); }
    RatPolynomial(const IntPolynomial& p);

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpq_class eval(const mpq_class& x) const;
    RatPolynomial derivative() const;
};

// Square-free part p / gcd(p, p').
RatPolynomial squarefree_part(const RatPolynomial& p);

// Sturm chain of a square-free polynomial.
struct SturmChain {
    std::vector<RatPolynomial> chain;

    explicit SturmChain(const RatPolynomial& squarefree);
    // Number of distinct real roots in (a, b]; requires p(a) != 0.
    int count_roots(const mpq_class& a, const mpq_class& b) const;

private:
    int variations(const mpq_class& x) const;
};

} // namespace solk
