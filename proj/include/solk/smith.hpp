#pragma once

#include <vector>

#include "solk/matrix.hpp"

namespace solk {

// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_r),
// d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::vector<mpz_class> diagonal() const;
};

// Finitely generated abelian group in invariant-factor form.  Unit factors
// are dropped on construction; torsion entries satisfy t_i | t_{i+1}.
struct FGAbelianGroup {
    int free_rank = 0;
    std::vector<mpz_class> torsion;

    FGAbelianGroup() = default;
    FGAbelianGroup(int rank, std::vector<mpz_class> tors);

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    // |G| for finite G; 0 denotes infinite.
    mpz_class order() const;
    std::string to_string() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Z^n / A Z^n for square A.
FGAbelianGroup cokernel(const IntMatrix& a);

// Basis of the integer kernel of square A, read off the columns of V at
// zero diagonal positions.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

FGAbelianGroup hom_to_Z(const FGAbelianGroup& g);
FGAbelianGroup ext_to_Z(const FGAbelianGroup& g);
FGAbelianGroup direct_sum(const FGAbelianGroup& g, const FGAbelianGroup& h);
bool group_iso_eq(const FGAbelianGroup& g, const FGAbelianGroup& h);

} // namespace solk
