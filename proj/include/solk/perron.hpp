#pragma once

#include <vector>

#include "solk/interval.hpp"
#include "solk/matrix.hpp"
#include "solk/polynomial.hpp"

namespace solk {

// Certified Perron eigenvalue and eigenvector data of an irreducible
// nonnegative integer matrix.  v is the right eigenvector, w the left one,
// both normalized to coordinate sum 1; every component has a positive
// lower bound.  exact means lambda (and then v, w) are exact rationals.
struct PerronData {
    RationalInterval lambda;
    std::vector<RationalInterval> v;
    std::vector<RationalInterval> w;
    bool exact = false;
};

// Enclosure of width <= eps of the Perron root; degenerate (exact) when the
// root is an integer.  Isolation by Sturm counting plus rational bisection.
RationalInterval perron_root(const IntMatrix& m, const mpq_class& eps);

PerronData perron_vectors(const IntMatrix& m, const mpq_class& eps);

// lambda > 1, decided exactly via Sturm counting on (1, max row sum + 1].
bool is_expanding(const IntMatrix& m);

} // namespace solk
