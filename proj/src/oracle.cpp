#include "solk/oracle.hpp"

#include <algorithm>
#include <set>

#include "solk/polynomial.hpp"

namespace solk::oracle {

namespace {

// All k-subsets of [0, n).
void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

mpz_class minor_det(const IntMatrix& a, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    IntMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
    return determinant(sub);
}

} // namespace

std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& a) {
    int n = std::min(a.rows(), a.cols());
    std::vector<mpz_class> dd(n + 1);
    dd[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> rsets, csets;
        subsets(a.rows(), k, rsets);
        subsets(a.cols(), k, csets);
        mpz_class g = 0;
        for (const auto& rs : rsets)
            for (const auto& cs : csets) {
                mpz_class m = abs(minor_det(a, rs, cs));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
                if (g == 1) break;
            }
        dd[k] = g;
        if (g == 0) break; // all larger minors vanish too
    }
    std::vector<mpz_class> factors(n);
    for (int k = 1; k <= n; ++k) {
        if (dd[k] == 0) factors[k - 1] = 0;
        else factors[k - 1] = dd[k] / dd[k - 1];
    }
    return factors;
}

std::optional<mpz_class> coset_count(const IntMatrix& a, long box_cap) {
    if (!a.square()) return std::nullopt;
    int n = a.rows();
    mpz_class det = abs(determinant(a));
    if (det == 0) return std::nullopt;
    if (!det.fits_slong_p()) return std::nullopt;
    long d = det.get_si();
    double volume = 1.0;
    for (int i = 0; i < n; ++i) volume *= static_cast<double>(d);
    if (volume > static_cast<double>(box_cap)) return std::nullopt;

    IntMatrix adj = adjugate(a);
    std::set<std::vector<long>> keys;
    std::vector<long> x(n, 0);
    while (true) {
        std::vector<long> key(n);
        for (int i = 0; i < n; ++i) {
            mpz_class s = 0;
            for (int j = 0; j < n; ++j) s += adj.at(i, j) * x[j];
            mpz_class r;
            mpz_class dz = d;
            mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), dz.get_mpz_t());
            key[i] = r.get_si();
        }
        keys.insert(std::move(key));
        int pos = 0;
        while (pos < n && ++x[pos] == d) x[pos++] = 0;
        if (pos == n) break;
    }
    return mpz_class(static_cast<long>(keys.size()));
}

bool orientable_bruteforce(const GraphPresentation& p) {
    int n = p.size();
    if (n > 20) throw DomainError("brute-force orientability capped at 20 edges");
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int si = (mask >> i) & 1 ? -1 : 1;
            for (const auto& letter : p.words[i]) {
                int se = (mask >> letter.edge) & 1 ? -1 : 1;
                if (si * letter.sign * se != 1) { ok = false; break; }
            }
        }
        if (ok) return true;
    }
    return false;
}

Positivity positivity_bruteforce(const IntMatrix& m, const IntVector& g, int steps) {
    IntVector cur = g;
    for (int j = 0; j <= steps; ++j) {
        bool pos = false, neg = false;
        for (const auto& x : cur) {
            if (sgn(x) > 0) pos = true;
            if (sgn(x) < 0) neg = true;
        }
        if (!pos && !neg) return Positivity::zero;
        if (pos && !neg) return Positivity::positive;
        if (neg && !pos) return Positivity::negative;
        cur = m * cur;
    }
    return Positivity::undecided;
}

IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

IntMatrix random_irreducible_nonneg(std::mt19937_64& rng, int n, int max_entry) {
    for (int tries = 0; tries < 10000; ++tries) {
        IntMatrix m = random_matrix(rng, n, 0, max_entry);
        if (is_irreducible(m) && !m.is_zero()) {
            bool row_ok = true;
            for (int i = 0; i < n; ++i)
                if (m.row_sum(i) == 0) row_ok = false;
            if (row_ok) return m;
        }
    }
    throw ResourceError("could not sample an irreducible matrix");
}

IntMatrix random_primitive_nonneg(std::mt19937_64& rng, int n, int max_entry) {
    for (int tries = 0; tries < 10000; ++tries) {
        IntMatrix m = random_matrix(rng, n, 0, max_entry);
        if (is_primitive(m)) return m;
    }
    throw ResourceError("could not sample a primitive matrix");
}

IntMatrix random_primitive_generic(std::mt19937_64& rng, int n, int max_entry) {
    if (n > 3) throw DomainError("genericity test covers degree <= 3 only");
    for (int tries = 0; tries < 10000; ++tries) {
        IntMatrix m = random_primitive_nonneg(rng, n, max_entry);
        IntPolynomial p = char_poly(m);
        mpz_class c0 = p.coeffs.empty() ? mpz_class(0) : p.coeffs[0];
        if (c0 == 0) continue; // root at 0
        // monic integer polynomial: rational roots are integer divisors of c0
        bool has_root = false;
        mpz_class bound = abs(c0);
        for (mpz_class d = 1; d <= bound && !has_root; ++d) {
            if (c0 % d != 0) continue;
            if (p.eval(mpq_class(d)) == 0 || p.eval(mpq_class(-d)) == 0) has_root = true;
        }
        // degree <= 3 without a rational root is irreducible over Q
        if (!has_root) return m;
    }
    throw ResourceError("could not sample a generic primitive matrix");
}

} // namespace solk::oracle
