#include "solk/perron.hpp"

#include <algorithm>

namespace solk {

namespace {

void validate(const IntMatrix& m) {
    if (!m.square()) throw DomainError("Perron theory expects a square matrix");
    if (!m.is_nonnegative()) throw DomainError("matrix has a negative entry");
    if (!is_irreducible(m)) throw DomainError("matrix is reducible");
}

mpz_class min_row_sum(const IntMatrix& m) {
    mpz_class s = m.row_sum(0);
    for (int i = 1; i < m.rows(); ++i) s = std::min(s, m.row_sum(i));
    return s;
}

mpz_class max_row_sum(const IntMatrix& m) {
    mpz_class s = m.row_sum(0);
    for (int i = 1; i < m.rows(); ++i) s = std::max(s, m.row_sum(i));
    return s;
}

// Exact rational GE solve; throws DomainError on a singular system.
std::vector<mpq_class> solve_exact(std::vector<std::vector<mpq_class>> a,
                                   std::vector<mpq_class> b) {
    int n = static_cast<int>(b.size());
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (sgn(a[i][k]) != 0) { pivot = i; break; }
        if (pivot < 0) throw DomainError("singular system");
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (int i = k + 1; i < n; ++i) {
            if (sgn(a[i][k]) == 0) continue;
            mpq_class f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<mpq_class> x(n);
    for (int k = n - 1; k >= 0; --k) {
        mpq_class s = b[k];
        for (int j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

// Interval GE solve; throws DomainError when no pivot interval is clear of 0
// (caller refines and retries).
std::vector<RationalInterval> solve_interval(std::vector<std::vector<RationalInterval>> a,
                                             std::vector<RationalInterval> b) {
    int n = static_cast<int>(b.size());
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        mpq_class best = 0;
        for (int i = k; i < n; ++i) {
            if (a[i][k].contains_zero()) continue;
            mpq_class mig = std::min(abs(a[i][k].lo), abs(a[i][k].hi));
            if (pivot < 0 || mig > best) { pivot = i; best = mig; }
        }
        if (pivot < 0) throw DomainError("no usable interval pivot");
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].contains_zero() && a[i][k].exact()) continue;
            RationalInterval f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            b[i] = b[i] - f * b[k];
        }
    }
    std::vector<RationalInterval> x(n);
    for (int k = n - 1; k >= 0; --k) {
        RationalInterval s = b[k];
        for (int j = k + 1; j < n; ++j) s = s - a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

// Solve (M - lambda I) v = 0 with v_0 pinned to 1, lambda as an interval
// (possibly degenerate), then normalize to coordinate sum 1.
std::vector<RationalInterval> eigenvector_enclosure(const IntMatrix& m,
                                                    const RationalInterval& lambda) {
    int n = m.rows();
    if (n == 1) return {RationalInterval(mpq_class(1))};
    std::vector<std::vector<RationalInterval>> a(
        n - 1, std::vector<RationalInterval>(n - 1));
    std::vector<RationalInterval> rhs(n - 1);
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            RationalInterval e(mpq_class(m.at(i, j)));
            if (i == j) e = e - lambda;
            a[i - 1][j - 1] = e;
        }
        rhs[i - 1] = RationalInterval(mpq_class(-m.at(i, 0)));
    }
    std::vector<RationalInterval> tail = solve_interval(std::move(a), std::move(rhs));
    std::vector<RationalInterval> v(n);
    v[0] = RationalInterval(mpq_class(1));
    for (int i = 1; i < n; ++i) v[i] = tail[i - 1];
    RationalInterval sum = v[0];
    for (int i = 1; i < n; ++i) sum = sum + v[i];
    for (auto& c : v) c = c / sum;
    return v;
}

bool positive_and_tight(const std::vector<RationalInterval>& v, const mpq_class& eps) {
    for (const auto& c : v)
        if (sgn(c.lo) <= 0 || c.width() > eps) return false;
    return true;
}

} // namespace

RationalInterval perron_root(const IntMatrix& m, const mpq_class& eps) {
    validate(m);
    if (eps <= 0) throw DomainError("eps must be positive");
    IntPolynomial p = char_poly(m);
    RatPolynomial sf = squarefree_part(RatPolynomial(p));
    SturmChain sturm(sf);

    mpz_class lo0 = min_row_sum(m), hi0 = max_row_sum(m);

    // Rational-root fast path: the char poly is monic, so a rational Perron
    // root is an integer in [min row sum, max row sum].
    if (hi0 - lo0 <= 4096) {
        for (mpz_class d = hi0; d >= lo0; --d) {
            if (sgn(p.eval(mpq_class(d))) != 0) continue;
            if (sturm.count_roots(mpq_class(d), mpq_class(hi0 + 1)) == 0)
                return RationalInterval(mpq_class(d));
            break; // an integer root below lambda; bisection takes over
        }
    }

    mpq_class lo = mpq_class(lo0) - 1, hi = hi0;
    long max_iter = 256 + static_cast<long>(mpz_sizeinbase(hi0.get_mpz_t(), 2));
    {
        // eps can be tiny; allow enough bisections to get there.
        mpq_class range = hi - lo;
        while (range > eps && max_iter < 100000) { range /= 2; ++max_iter; }
    }
    for (long it = 0; it < max_iter; ++it) {
        if (hi - lo <= eps && sturm.count_roots(lo, hi) == 1) return {lo, hi};
        mpq_class mid = (lo + hi) / 2;
        if (sgn(sf.eval(mid)) == 0) mid += (hi - lo) / 4;
        if (sturm.count_roots(mid, hi) >= 1) lo = mid;
        else hi = mid;
    }
    throw ResourceError("perron_root: bisection cap reached at width " +
                        decimal_string(hi - lo, 6));
}

PerronData perron_vectors(const IntMatrix& m, const mpq_class& eps) {
    validate(m);
    if (eps <= 0) throw DomainError("eps must be positive");
    PerronData out;

    RationalInterval lam = perron_root(m, eps);
    if (lam.exact()) {
        // Exact rational eigenvectors.
        out.lambda = lam;
        out.exact = true;
        out.v = eigenvector_enclosure(m, lam);
        out.w = eigenvector_enclosure(m.transpose(), lam);
        return out;
    }

    mpq_class eps_lam = eps;
    mpq_class achieved = -1;
    for (int attempt = 0; attempt < 48; ++attempt) {
        lam = perron_root(m, eps_lam);
        try {
            auto v = eigenvector_enclosure(m, lam);
            auto w = eigenvector_enclosure(m.transpose(), lam);
            if (positive_and_tight(v, eps) && positive_and_tight(w, eps)) {
                out.lambda = lam;
                out.v = std::move(v);
                out.w = std::move(w);
                out.exact = false;
                return out;
            }
            mpq_class wd = 0;
            for (const auto& c : v) wd = std::max(wd, c.width());
            for (const auto& c : w) wd = std::max(wd, c.width());
            if (achieved < 0 || wd < achieved) achieved = wd;
        } catch (const DomainError&) {
            // pivot straddled zero; refine lambda
        }
        eps_lam /= mpz_class(1) << 24;
    }
    throw ResourceError("perron_vectors: requested width " + decimal_string(eps, 4) +
                        " unattainable; achieved " +
                        (achieved < 0 ? std::string("none") : decimal_string(achieved, 4)));
}

bool is_expanding(const IntMatrix& m) {
    validate(m);
    IntPolynomial p = char_poly(m);
    SturmChain sturm(squarefree_part(RatPolynomial(p)));
    mpq_class hi = mpq_class(max_row_sum(m)) + 1;
    return sturm.count_roots(mpq_class(1), hi) >= 1;
}

} // namespace solk
