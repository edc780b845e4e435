#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solk/smale.hpp"

using namespace solk;

namespace {

const std::string kCorpus = SOLK_CORPUS_DIR;

Solenoid make_fib() {
    GraphPresentation p = load_presentation(kCorpus + "/fib.sol");
    return Solenoid(
        p, perron_vectors(adjacency_matrix(p), mpq_class(1, mpz_class("1000000000000000000"))));
}

} // namespace

TEST_CASE("geometry of the realization") {
    Solenoid sol = make_fib();
    CHECK(sol.edge_count() == 2);
    CHECK(sol.lambda() == doctest::Approx(2.6180339887498949).epsilon(1e-12));
    CHECK(sol.measure(0) + sol.measure(1) == doctest::Approx(1.0).epsilon(1e-15));
    // eigenvector equation in measure coordinates: lambda * v = M v
    CHECK(static_cast<double>(sol.lambda() * sol.measure(0)) ==
          doctest::Approx(2 * sol.measure(0) + sol.measure(1)).epsilon(1e-12));
}

TEST_CASE("apply_f inverts every preimage") {
    Solenoid sol = make_fib();
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 2000; ++t) {
        int edge = static_cast<int>(rng() % 2);
        GraphPoint p{edge, static_cast<long double>(unit(rng)) * sol.measure(edge)};
        auto pre = sol.preimages(p);
        // total preimage count = column sum of M over the target edge
        CHECK(static_cast<int>(pre.size()) == (edge == 0 ? 3 : 2));
        for (const auto& q : pre) CHECK(sol.d0(sol.apply_f(q), p) < 1e-15L);
    }
}

TEST_CASE("wedge metric d0") {
    Solenoid sol = make_fib();
    long double va = sol.measure(0);
    CHECK(sol.d0({0, 0.1L}, {0, 0.1L}) == 0.0L);
    CHECK(sol.d0({0, 0.1L}, {0, 0.2L}) == doctest::Approx(0.1).epsilon(1e-12));
    // near-opposite ends of the same circle: going around is shorter
    CHECK(sol.d0({0, 0.001L}, {0, va - 0.001L}) == doctest::Approx(0.002).epsilon(1e-9));
    // cross-edge distance runs through the branch point
    CHECK(sol.d0({0, 0.01L}, {1, 0.02L}) == doctest::Approx(0.03).epsilon(1e-9));
    // symmetry
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 500; ++t) {
        GraphPoint a{static_cast<int>(rng() % 2), 0.0L}, b{static_cast<int>(rng() % 2), 0.0L};
        a.pos = static_cast<long double>(unit(rng)) * sol.measure(a.edge);
        b.pos = static_cast<long double>(unit(rng)) * sol.measure(b.edge);
        CHECK(sol.d0(a, b) == sol.d0(b, a));
        CHECK(sol.d0(a, b) >= 0.0L);
        CHECK(sol.d0(a, b) <= 0.5L + 1e-12L);
    }
}

TEST_CASE("random points are consistent chains and shifts act correctly") {
    Solenoid sol = make_fib();
    std::mt19937_64 rng(71);
    for (int t = 0; t < 200; ++t) {
        SolenoidPoint x = sol.random_point(rng, 12);
        CHECK(x.depth() == 12);
        CHECK(sol.consistent(x));
        SolenoidPoint fx = sol.shift_forward(x);
        CHECK(sol.consistent(fx));
        CHECK(fx.depth() == x.depth());
        // shift_backward . shift_forward drops the deepest refinement only
        SolenoidPoint back = sol.shift_backward(sol.shift_forward(x));
        for (int i = 0; i <= back.depth(); ++i)
            CHECK(sol.d0(back.coords[i], x.coords[i]) < 1e-15L);
    }
}

TEST_CASE("metric bounds and symmetry") {
    Solenoid sol = make_fib();
    std::mt19937_64 rng(73);
    for (int t = 0; t < 200; ++t) {
        SolenoidPoint x = sol.random_point(rng, 15);
        SolenoidPoint y = sol.random_point(rng, 15);
        DistBound d = sol.metric(x, y);
        CHECK(d.lo <= d.hi);
        CHECK(d.hi - d.lo == doctest::Approx(static_cast<double>(sol.tail_bound(15))));
        DistBound rev = sol.metric(y, x);
        CHECK(d.lo == rev.lo);
        DistBound self = sol.metric(x, x);
        CHECK(self.lo == 0.0L);
    }
}

TEST_CASE("bracket identities on certified pairs") {
    Solenoid sol = make_fib();
    std::mt19937_64 rng(79);
    const int depth = 20;
    long double tol = 10.0L * sol.tail_bound(depth);
    int certified = 0;
    for (int t = 0; t < 600 && certified < 300; ++t) {
        SolenoidPoint x = sol.random_point(rng, depth);
        SolenoidPoint y = sol.random_nearby(x, rng, sol.lambda0() / 4.0L);
        SolenoidPoint z = sol.random_nearby(x, rng, sol.lambda0() / 4.0L);

        BracketResult xx = sol.bracket(x, x);
        BracketResult xy = sol.bracket(x, y);
        BracketResult xz = sol.bracket(x, z);
        if (xx.certified_depth < depth || xy.certified_depth < depth ||
            xz.certified_depth < depth)
            continue;
        ++certified;

        // [x, x] = x
        CHECK(sol.metric(xx.point, x).hi <= tol);
        // bracket output is a genuine point of the inverse limit
        CHECK(sol.consistent(xy.point, 1e-9L));
        // [[x,y], z] = [x, z]
        BracketResult left = sol.bracket(xy.point, z);
        if (left.certified_depth == depth) CHECK(sol.metric(left.point, xz.point).hi <= tol);
        // [x, [y,z]] = [x, z]
        BracketResult yz = sol.bracket(y, z);
        if (yz.certified_depth == depth) {
            BracketResult right = sol.bracket(x, yz.point);
            if (right.certified_depth == depth)
                CHECK(sol.metric(right.point, xz.point).hi <= tol);
        }
    }
    CHECK(certified >= 300);
}

TEST_CASE("bracket head and tail selection") {
    Solenoid sol = make_fib();
    std::mt19937_64 rng(83);
    for (int t = 0; t < 100; ++t) {
        SolenoidPoint x = sol.random_point(rng, 15);
        SolenoidPoint y = sol.random_nearby(x, rng, sol.lambda0() / 8.0L);
        BracketResult b = sol.bracket(x, y);
        // z_0 = x_0 by definition
        CHECK(sol.d0(b.point.coords[0], x.coords[0]) < 1e-15L);
        // z_n stays in the lambda0^(n+1) certification ball of y_n
        long double r = sol.lambda0();
        for (int n = 1; n <= b.certified_depth; ++n) {
            r *= sol.lambda0();
            CHECK(sol.d0(b.point.coords[n], y.coords[n]) <= r * (1.0L + 1e-6L));
        }
    }
}

TEST_CASE("stable pairs contract at rate 1/lambda") {
    Solenoid sol = make_fib();
    std::mt19937_64 rng(89);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        SolenoidPoint x = sol.random_point(rng, 25);
        SolenoidPoint y = sol.random_stable_companion(x, rng, 0);
        ContractionReport r = sol.stable_contraction(x, y, 12);
        if (r.coincident) continue;
        ++checked;
        CHECK(r.max_ratio <= sol.lambda0() + 1e-6L);
    }
    CHECK(checked > 200);
}

TEST_CASE("bracket precondition is enforced") {
    Solenoid sol = make_fib();
    // heads on far apart edges of the wedge at distance > 2/lambda is
    // impossible here (diameter 1/2 < 2/lambda), so check the throw via the
    // explicit distance guard instead: construct points at distance ~0.5
    // which is below the threshold -> no throw expected.
    SolenoidPoint x{{{0, 0.3L}}}, y{{{1, 0.19L}}};
    CHECK_NOTHROW(sol.bracket(x, y));
}

TEST_CASE("construction guards") {
    GraphPresentation p = load_presentation(kCorpus + "/nonorient.sol");
    PerronData pd = perron_vectors(adjacency_matrix(p), mpq_class(1, 1000000));
    CHECK_THROWS_AS(Solenoid(p, pd), DomainError);
}
