#pragma once

#include <gmpxx.h>
#include <vector>

#include "solk/errors.hpp"

namespace solk {

using IntVector = std::vector<mpz_class>;

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
    }
    IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
        if (entries_.size() != static_cast<size_t>(rows) * cols)
            throw DomainError("entry count does not match dimensions");
    }
    // Convenience for tests: nested initializer rows.
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(int n);
    static IntMatrix zero(int n) { return IntMatrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    mpz_class& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }
    const std::vector<mpz_class>& entries() const { return entries_; }

    IntMatrix transpose() const;
    bool is_nonnegative() const;
    bool is_zero() const;
    mpz_class row_sum(int i) const;
    mpz_class col_sum(int j) const;
    mpz_class entry_sum() const;

    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

IntMatrix mat_pow(const IntMatrix& a, unsigned k);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& a);

// Adjugate matrix, adj(A)*A = det(A)*I.  Used by the coset-enumeration oracle.
IntMatrix adjugate(const IntMatrix& a);

// Rank over Q.
int rank_q(const IntMatrix& a);

// Strong connectivity of the digraph i -> j when a(i,j) > 0.
bool is_irreducible(const IntMatrix& a);
// Irreducible and aperiodic, decided via boolean powers up to the Wielandt
// bound n^2 - 2n + 2.
bool is_primitive(const IntMatrix& a);

} // namespace solk
