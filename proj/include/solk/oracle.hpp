#pragma once

#include <optional>
#include <random>

#include "solk/dimension_group.hpp"
#include "solk/matrix.hpp"
#include "solk/presentation.hpp"
#include "solk/smith.hpp"

// Independent brute-force routes for the main computations.  Nothing here
// shares code with the implementation path it checks.

namespace solk::oracle {

// Invariant factors via determinantal divisors: d_k = D_k / D_{k-1} with
// D_k the gcd of all k x k minors.
std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& a);

// |Z^n / A Z^n| by coset enumeration over the box [0, |det A|)^n using the
// adjugate key adj(A) x mod det.  nullopt when det = 0 or the box exceeds
// the cap (oracle exhausted, not a failure).
std::optional<mpz_class> coset_count(const IntMatrix& a, long box_cap = 5000000);

// Exhaustive search over all 2^n sign assignments.
bool orientable_bruteforce(const GraphPresentation& p);

// Long iteration search for eventual signed images.
Positivity positivity_bruteforce(const IntMatrix& m, const IntVector& g, int steps);

IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi);
IntMatrix random_irreducible_nonneg(std::mt19937_64& rng, int n, int max_entry);
IntMatrix random_primitive_nonneg(std::mt19937_64& rng, int n, int max_entry);
// Primitive with irreducible characteristic polynomial (n <= 3): then the
// left Perron functional vanishes on no nonzero integer vector, so every
// nonzero element of the dimension group has a decidable sign.
IntMatrix random_primitive_generic(std::mt19937_64& rng, int n, int max_entry);

} // namespace solk::oracle
