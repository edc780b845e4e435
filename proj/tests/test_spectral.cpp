#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solk/oracle.hpp"
#include "solk/perron.hpp"
#include "solk/polynomial.hpp"

using namespace solk;

namespace {
const mpq_class kEps12 = mpq_class(1, mpz_class("1000000000000"));
}

TEST_CASE("characteristic polynomial frozen values") {
    // x^2 - 3x + 1
    CHECK(char_poly(IntMatrix{{2, 1}, {1, 1}}) ==
          IntPolynomial({mpz_class(1), mpz_class(-3), mpz_class(1)}));
    CHECK(char_poly(IntMatrix{{3}}) == IntPolynomial({mpz_class(-3), mpz_class(1)}));
    // x^3 for the nilpotent shift
    CHECK(char_poly(IntMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}) ==
          IntPolynomial({mpz_class(0), mpz_class(0), mpz_class(0), mpz_class(1)}));
}

TEST_CASE("cayley-hamilton on random matrices") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        IntMatrix a = oracle::random_matrix(rng, n, -9, 9);
        CHECK(eval_at_matrix(char_poly(a), a).is_zero());
    }
}

TEST_CASE("char poly constant term is the determinant up to sign") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix a = oracle::random_matrix(rng, n, -6, 6);
        IntPolynomial p = char_poly(a);
        mpz_class c0 = p.coeffs.empty() ? mpz_class(0) : p.coeffs[0];
        mpz_class expect = determinant(a);
        if (n % 2 == 1) expect = -expect;
        CHECK(c0 == expect);
    }
}

TEST_CASE("squarefree part and sturm counting") {
    // (x-1)^2 (x-2) -> squarefree has roots exactly {1, 2}
    RatPolynomial p({mpq_class(-2), mpq_class(5), mpq_class(-4), mpq_class(1)});
    RatPolynomial sf = squarefree_part(p);
    CHECK(sf.degree() == 2);
    SturmChain chain(sf);
    CHECK(chain.count_roots(0, 3) == 2);
    CHECK(chain.count_roots(mpq_class(3, 2), 3) == 1);
    CHECK(chain.count_roots(0, mpq_class(1, 2)) == 0);
    // (a, b] convention: root at the right endpoint counts
    CHECK(chain.count_roots(mpq_class(1, 2), 1) == 1);

    SturmChain fib(RatPolynomial({mpq_class(1), mpq_class(-3), mpq_class(1)}));
    CHECK(fib.count_roots(2, 3) == 1);
    CHECK(fib.count_roots(0, 1) == 1);
}

TEST_CASE("perron root enclosures") {
    // golden-mean square: lambda = (3+sqrt(5))/2 = 2.6180339887498948482...
    RationalInterval lam = perron_root(IntMatrix{{2, 1}, {1, 1}}, kEps12);
    CHECK(lam.width() <= kEps12);
    CHECK(lam.contains(mpq_class("2618033988749894848/1000000000000000000")));

    // integer roots come out exact
    RationalInterval three = perron_root(IntMatrix{{3}}, kEps12);
    CHECK(three.exact());
    CHECK(three.lo == 3);
    RationalInterval swap = perron_root(IntMatrix{{0, 2}, {2, 0}}, kEps12);
    CHECK(swap.exact());
    CHECK(swap.lo == 2);

    CHECK_THROWS_AS(perron_root(IntMatrix{{1, -1}, {1, 1}}, kEps12), DomainError);
    CHECK_THROWS_AS(perron_root(IntMatrix{{1, 0}, {0, 1}}, kEps12), DomainError);
}

TEST_CASE("perron vectors frozen golden-mean values") {
    IntMatrix m{{2, 1}, {1, 1}};
    PerronData pd = perron_vectors(m, kEps12);
    // v = ((lambda-1)/lambda, 1/lambda) = (0.61803..., 0.38196...)
    CHECK(pd.v[0].contains(mpq_class("61803398874989484820/100000000000000000000")));
    CHECK(pd.v[1].contains(mpq_class("38196601125010515180/100000000000000000000")));
    // symmetric matrix: left and right eigenvectors agree
    for (int i = 0; i < 2; ++i) CHECK(pd.v[i].overlaps(pd.w[i]));
}

TEST_CASE("perron vector residuals on random irreducible matrices") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix m = oracle::random_irreducible_nonneg(rng, n, 5);
        PerronData pd = perron_vectors(m, kEps12);
        // residual (Mv - lambda v)_i must contain 0, same for the left side
        RationalInterval sum_v(mpq_class(0)), sum_w(mpq_class(0));
        for (int i = 0; i < n; ++i) {
            RationalInterval res_v(mpq_class(0)), res_w(mpq_class(0));
            for (int j = 0; j < n; ++j) {
                res_v = res_v + interval_scale(pd.v[j], mpq_class(m.at(i, j)));
                res_w = res_w + interval_scale(pd.w[j], mpq_class(m.at(j, i)));
            }
            res_v = res_v - pd.lambda * pd.v[i];
            res_w = res_w - pd.lambda * pd.w[i];
            CHECK(res_v.contains_zero());
            CHECK(res_w.contains_zero());
            CHECK(pd.v[i].sign() == 1);
            CHECK(pd.w[i].sign() == 1);
            sum_v = sum_v + pd.v[i];
            sum_w = sum_w + pd.w[i];
        }
        CHECK(sum_v.contains(1));
        CHECK(sum_w.contains(1));
        // enclosure brackets the row-sum bounds on lambda
        mpz_class lo = m.row_sum(0), hi = m.row_sum(0);
        for (int i = 1; i < n; ++i) {
            lo = std::min(lo, m.row_sum(i));
            hi = std::max(hi, m.row_sum(i));
        }
        CHECK(pd.lambda.hi >= mpq_class(lo));
        CHECK(pd.lambda.lo <= mpq_class(hi));
    }
}

TEST_CASE("expansion test") {
    CHECK(is_expanding(IntMatrix{{2, 1}, {1, 1}}));
    CHECK(is_expanding(IntMatrix{{2}}));
    CHECK_FALSE(is_expanding(IntMatrix{{1}}));
    CHECK_FALSE(is_expanding(IntMatrix{{0, 1}, {1, 0}})); // lambda = 1
}
