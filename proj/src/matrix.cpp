#include "solk/matrix.hpp"

#include <algorithm>

namespace solk {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    if (rows_ == 0) throw DomainError("empty initializer");
    cols_ = static_cast<int>(init.begin()->size());
    entries_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw DomainError("ragged initializer");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const mpz_class& e) { return sgn(e) >= 0; });
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const mpz_class& e) { return sgn(e) == 0; });
}

mpz_class IntMatrix::row_sum(int i) const {
    mpz_class s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j);
    return s;
}

mpz_class IntMatrix::col_sum(int j) const {
    mpz_class s = 0;
    for (int i = 0; i < rows_; ++i) s += at(i, j);
    return s;
}

mpz_class IntMatrix::entry_sum() const {
    mpz_class s = 0;
    for (const auto& e : entries_) s += e;
    return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("dimension mismatch in product");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("dimension mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("dimension mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != static_cast<int>(v.size())) throw DomainError("dimension mismatch");
    IntVector r(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class s = 0;
        for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned k) {
    if (!a.square()) throw DomainError("power of non-square matrix");
    IntMatrix result = IntMatrix::identity(a.rows());
    IntMatrix base = a;
    while (k) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

mpz_class determinant(const IntMatrix& a) {
    if (!a.square()) throw DomainError("determinant of non-square matrix");
    int n = a.rows();
    IntMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(m.at(k, k)) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(m.at(i, k)) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& a) {
    if (!a.square()) throw DomainError("adjugate of non-square matrix");
    int n = a.rows();
    if (n == 1) {
        IntMatrix r(1, 1);
        r.at(0, 0) = 1;
        return r;
    }
    IntMatrix adj(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = a.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            mpz_class cof = determinant(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : mpz_class(-cof);
        }
    return adj;
}

int rank_q(const IntMatrix& a) {
    int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (sgn(m[i][col]) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            if (sgn(m[i][col]) == 0) continue;
            mpq_class factor = m[i][col] / m[rank][col];
            for (int j = col; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::vector<bool>> bool_mat(const IntMatrix& a) {
    int n = a.rows();
    std::vector<std::vector<bool>> b(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = sgn(a.at(i, j)) > 0;
    return b;
}

std::vector<std::vector<bool>> bool_mul(const std::vector<std::vector<bool>>& x,
                                        const std::vector<std::vector<bool>>& y) {
    int n = static_cast<int>(x.size());
    std::vector<std::vector<bool>> z(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (x[i][k])
                for (int j = 0; j < n; ++j)
                    if (y[k][j]) z[i][j] = true;
    return z;
}

bool all_true(const std::vector<std::vector<bool>>& m) {
    for (const auto& row : m)
        for (bool v : row)
            if (!v) return false;
    return true;
}

} // namespace

bool is_irreducible(const IntMatrix& a) {
    if (!a.square()) throw DomainError("irreducibility of non-square matrix");
    int n = a.rows();
    auto b = bool_mat(a);
    // Reachability closure: (I + B)^(n-1) all-positive iff strongly connected.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) reach[i][i] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b[i][j]) reach[i][j] = true;
    for (int step = 1; step < n; step <<= 1) reach = bool_mul(reach, reach);
    return all_true(reach);
}

bool is_primitive(const IntMatrix& a) {
    if (!is_irreducible(a)) return false;
    int n = a.rows();
    long bound = static_cast<long>(n) * n - 2L * n + 2;
    auto b = bool_mat(a);
    auto p = b;
    for (long k = 1; k <= bound; ++k) {
        if (all_true(p)) return true;
        p = bool_mul(p, b);
    }
    return all_true(p);
}

} // namespace solk
