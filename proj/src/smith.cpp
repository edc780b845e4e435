#include "solk/smith.hpp"

#include <algorithm>
#include <sstream>

namespace solk {

std::vector<mpz_class> SmithDecomposition::diagonal() const {
    int r = std::min(d.rows(), d.cols());
    std::vector<mpz_class> diag(r);
    for (int i = 0; i < r; ++i) diag[i] = d.at(i, i);
    return diag;
}

FGAbelianGroup::FGAbelianGroup(int rank, std::vector<mpz_class> tors) : free_rank(rank) {
    for (auto& t : tors) {
        if (sgn(t) < 0) t = -t;
        if (t == 0) throw DomainError("torsion entry 0; use free_rank");
        if (t > 1) torsion.push_back(t);
    }
    for (size_t i = 0; i + 1 < torsion.size(); ++i)
        if (!mpz_divisible_p(torsion[i + 1].get_mpz_t(), torsion[i].get_mpz_t()))
            throw DomainError("torsion list violates divisibility chain");
}

mpz_class FGAbelianGroup::order() const {
    if (free_rank > 0) return 0;
    mpz_class o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
}

std::string FGAbelianGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank == 1) { out << "Z"; first = false; }
    else if (free_rank > 1) { out << "Z^" << free_rank; first = false; }
    for (const auto& t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t.get_str();
        first = false;
    }
    return out.str();
}

namespace {

struct SnfWork {
    IntMatrix b, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < b.cols(); ++c) std::swap(b.at(i, c), b.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < b.rows(); ++r) std::swap(b.at(r, i), b.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row_i += q * row_j
    void add_row(int i, int j, const mpz_class& q) {
        for (int c = 0; c < b.cols(); ++c) b.at(i, c) += q * b.at(j, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
    }
    // col_i += q * col_j
    void add_col(int i, int j, const mpz_class& q) {
        for (int r = 0; r < b.rows(); ++r) b.at(r, i) += q * b.at(r, j);
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < b.cols(); ++c) b.at(i, c) = -b.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

// Round-to-nearest quotient keeps intermediate entries small.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += 1;
    return q;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    int m = a.rows(), n = a.cols();
    SnfWork w{a, IntMatrix::identity(m), IntMatrix::identity(n)};
    int r = std::min(m, n);

    for (int t = 0; t < r; ++t) {
        // Pivot: nonzero entry of minimal absolute value in the trailing block.
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const mpz_class& e = w.b.at(i, j);
                if (sgn(e) == 0) continue;
                if (pi < 0 || abs(e) < best) { pi = i; pj = j; best = abs(e); }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            // Clear column t.
            for (int i = t + 1; i < m; ++i) {
                if (sgn(w.b.at(i, t)) == 0) continue;
                mpz_class q = nearest_quotient(w.b.at(i, t), w.b.at(t, t));
                w.add_row(i, t, -q);
                if (sgn(w.b.at(i, t)) != 0) {
                    w.swap_rows(t, i); // remainder is smaller; restart with it
                    clean = false;
                }
            }
            if (!clean) continue;
            // Clear row t.
            for (int j = t + 1; j < n; ++j) {
                if (sgn(w.b.at(t, j)) == 0) continue;
                mpz_class q = nearest_quotient(w.b.at(t, j), w.b.at(t, t));
                w.add_col(j, t, -q);
                if (sgn(w.b.at(t, j)) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide the trailing block for the divisibility chain.
            for (int i = t + 1; i < m && clean; ++i)
                for (int j = t + 1; j < n && clean; ++j)
                    if (!mpz_divisible_p(w.b.at(i, j).get_mpz_t(), w.b.at(t, t).get_mpz_t())) {
                        w.add_row(t, i, 1);
                        clean = false;
                    }
        }
        if (sgn(w.b.at(t, t)) < 0) w.negate_row(t);
    }

    // Exact replay check before returning.
    IntMatrix check = w.u * a * w.v;
    if (!(check == w.b)) throw DomainError("SNF internal check failed: U*A*V != D");
    if (abs(determinant(w.u)) != 1 || abs(determinant(w.v)) != 1)
        throw DomainError("SNF internal check failed: transform not unimodular");
    auto diag = SmithDecomposition{w.u, w.b, w.v}.diagonal();
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        if (diag[i] != 0 && !mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()))
            throw DomainError("SNF internal check failed: divisibility chain");

    return {w.u, w.b, w.v};
}

FGAbelianGroup cokernel(const IntMatrix& a) {
    if (!a.square()) throw DomainError("cokernel expects a square matrix");
    auto diag = smith_normal_form(a).diagonal();
    int zeros = 0;
    std::vector<mpz_class> torsion;
    for (const auto& d : diag) {
        if (d == 0) ++zeros;
        else if (d > 1) torsion.push_back(d);
    }
    return FGAbelianGroup(zeros, std::move(torsion));
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
    if (!a.square()) throw DomainError("kernel_basis expects a square matrix");
    SmithDecomposition snf = smith_normal_form(a);
    auto diag = snf.diagonal();
    std::vector<IntVector> basis;
    for (int j = 0; j < static_cast<int>(diag.size()); ++j) {
        if (diag[j] != 0) continue;
        IntVector col(a.rows());
        for (int i = 0; i < a.rows(); ++i) col[i] = snf.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

FGAbelianGroup hom_to_Z(const FGAbelianGroup& g) { return FGAbelianGroup(g.free_rank, {}); }

FGAbelianGroup ext_to_Z(const FGAbelianGroup& g) { return FGAbelianGroup(0, g.torsion); }

FGAbelianGroup direct_sum(const FGAbelianGroup& g, const FGAbelianGroup& h) {
    std::vector<mpz_class> all = g.torsion;
    all.insert(all.end(), h.torsion.begin(), h.torsion.end());
    if (all.empty()) return FGAbelianGroup(g.free_rank + h.free_rank, {});
    // Renormalize to a divisibility chain via SNF of the diagonal matrix.
    int k = static_cast<int>(all.size());
    IntMatrix d(k, k);
    for (int i = 0; i < k; ++i) d.at(i, i) = all[i];
    FGAbelianGroup tors = cokernel(d);
    return FGAbelianGroup(g.free_rank + h.free_rank, tors.torsion);
}

bool group_iso_eq(const FGAbelianGroup& g, const FGAbelianGroup& h) {
    return g.free_rank == h.free_rank && g.torsion == h.torsion;
}

} // namespace solk
