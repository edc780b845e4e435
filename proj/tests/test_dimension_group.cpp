#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solk/dimension_group.hpp"
#include "solk/oracle.hpp"

using namespace solk;

namespace {
const IntMatrix kFib{{2, 1}, {1, 1}};
}

TEST_CASE("limit equality and the connecting map") {
    DimensionGroup dg(kFib);
    DGElement g{{1, 0}, 0};
    DGElement mg = dg.connect(g);
    CHECK(mg.stage == 1);
    CHECK(mg.vector == IntVector{2, 1});
    CHECK(dg.equal(g, mg));
    CHECK(dg.equal(mg, g));
    CHECK_FALSE(dg.equal(g, DGElement{{0, 1}, 0}));
    CHECK(dg.equal(DGElement{{0, 0}, 0}, DGElement{{0, 0}, 5}));

    // [g, k] = [Mg, k+1] at any stage
    DGElement deep{{3, -2}, 7};
    CHECK(dg.equal(deep, dg.connect(dg.connect(deep))));
}

TEST_CASE("delta is the shift automorphism") {
    DimensionGroup dg(kFib);
    DGElement g{{1, 1}, 0};
    DGElement up = dg.delta(g, 1);
    CHECK(dg.equal(up, DGElement{{3, 2}, 0}));
    DGElement down = dg.delta(g, -1);
    // delta^{-1} delta = id
    CHECK(dg.equal(dg.delta(down, 1), g));
    CHECK(dg.equal(dg.delta(dg.delta(g, 3), -3), g));
    CHECK(dg.equal(dg.delta(g, 0), g));
}

TEST_CASE("addition respects stages") {
    DimensionGroup dg(kFib);
    DGElement a{{1, 0}, 0}, b{{0, 1}, 2};
    DGElement s = dg.add(a, b);
    CHECK(s.stage == 2);
    // [ (1,0), 0 ] = [ M^2 (1,0), 2 ] = [ (5,3), 2 ]
    CHECK(s.vector == IntVector{5, 4});
    CHECK(dg.equal(dg.add(a, b), dg.add(b, a)));
}

TEST_CASE("state is normalized and stage-consistent") {
    DimensionGroup dg(kFib);
    // unit class: sum of the generators at stage 0
    RationalInterval unit = dg.state({{1, 1}, 0});
    CHECK(unit.contains(1));
    CHECK(unit.width() <= 2 * dg.precision());

    RationalInterval zero = dg.state({{0, 0}, 3});
    CHECK(zero.exact());
    CHECK(zero.lo == 0);

    // frozen value: state([(1,0),0]) = w_a = (lambda-1)/lambda = 0.6180339...
    RationalInterval s = dg.state({{1, 0}, 0});
    CHECK(s.lo > mpq_class("618033988749894848/1000000000000000000"));
    CHECK(s.hi < mpq_class("618033988749894849/1000000000000000000"));
}

TEST_CASE("state is invariant under the connecting map") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        DimensionGroup dg(oracle::random_irreducible_nonneg(rng, n, 4));
        for (int t = 0; t < 100; ++t) {
            IntVector g(n);
            for (auto& e : g) e = dist(rng);
            DGElement x{g, static_cast<long>(rng() % 4)};
            RationalInterval s1 = dg.state(x);
            RationalInterval s2 = dg.state(dg.connect(x));
            CHECK(s1.overlaps(s2));
            CHECK(s1.width() <= 2 * dg.precision());
        }
    }
}

TEST_CASE("doubling map state is exactly dyadic") {
    DimensionGroup dg(IntMatrix{{2}});
    for (long k = 0; k <= 6; ++k) {
        RationalInterval s = dg.state({{1}, k});
        CHECK(s.exact());
        CHECK(s.lo == mpq_class(1, 1L << k));
    }
    // delta scales the state by lambda = 2
    RationalInterval up = dg.state(dg.delta({{1}, 3}, 1));
    CHECK(up.exact());
    CHECK(up.lo == mpq_class(1, 4));
}

TEST_CASE("positivity agrees with long iteration") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> dist(-5, 5);
    std::vector<IntMatrix> mats{kFib, oracle::random_primitive_generic(rng, 3, 3),
                                oracle::random_primitive_generic(rng, 3, 3)};
    for (const auto& m : mats) {
        DimensionGroup dg(m);
        int decided = 0, total = 1000;
        for (int t = 0; t < total; ++t) {
            IntVector g(m.rows());
            for (auto& e : g) e = dist(rng);
            Positivity fast = dg.positive({g, 0});
            Positivity brute = oracle::positivity_bruteforce(m, g, 60);
            if (fast != Positivity::undecided) ++decided;
            if (fast != Positivity::undecided && brute != Positivity::undecided)
                CHECK(fast == brute);
        }
        CHECK(decided >= total * 99 / 100);
    }
}

TEST_CASE("positivity fixed examples") {
    DimensionGroup dg(kFib);
    CHECK(dg.positive({{1, 0}, 0}) == Positivity::positive);
    CHECK(dg.positive({{-1, 0}, 0}) == Positivity::negative);
    CHECK(dg.positive({{0, 0}, 0}) == Positivity::zero);
    // (1,-1): <w,g> = (2 lambda - 3)/(lambda - 1)... sign of lambda*1 - ... ;
    // iterate: M(1,-1) = (1,0) > 0, so positive
    CHECK(dg.positive({{1, -1}, 0}) == Positivity::positive);
    CHECK(dg.positive({{-1, 2}, 0}) == Positivity::positive);
    CHECK(dg.positive({{1, -2}, 0}) == Positivity::negative);
}

TEST_CASE("dimension group rejects bad input") {
    CHECK_THROWS_AS(DimensionGroup(IntMatrix{{1, 1}, {0, 1}}), DomainError);
    DimensionGroup dg(kFib);
    CHECK_THROWS_AS(dg.state({{1}, 0}), DomainError);
}
