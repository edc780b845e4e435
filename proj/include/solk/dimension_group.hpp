#pragma once

#include <vector>

#include "solk/interval.hpp"
#include "solk/matrix.hpp"
#include "solk/perron.hpp"

namespace solk {

// Element [g, stage] of the stationary direct limit of Z^n under g -> Mg.
struct DGElement {
    IntVector vector;
    long stage = 0;
};

enum class Positivity { positive, negative, zero, undecided };

// Stationary dimension group of an irreducible nonnegative matrix, with the
// canonical automorphism and the unique state.
class DimensionGroup {
public:
    DimensionGroup(IntMatrix m, mpq_class precision = default_precision());

    static mpq_class default_precision() { return mpq_class(1, mpz_class("1" + std::string(30, '0'))); }

    int dim() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    const PerronData& perron() const { return perron_; }
    mpq_class precision() const { return precision_; }

    DGElement connect(const DGElement& a) const;            // [g,k] -> [Mg,k+1]
    bool equal(const DGElement& a, const DGElement& b) const;
    Positivity positive(const DGElement& a, int j_max = 64) const;
    DGElement delta(const DGElement& a, long power) const;  // delta_M^power
    // State value lambda^(-stage) * <w, g>, w the left Perron functional
    // normalized so the unit class has state 1.  Interval width <= eps.
    RationalInterval state(const DGElement& a, const mpq_class& eps) const;
    RationalInterval state(const DGElement& a) const { return state(a, precision_); }

    DGElement add(const DGElement& a, const DGElement& b) const;

private:
    void check(const DGElement& a) const;
    IntVector pow_apply(const IntVector& g, long k) const;

    IntMatrix m_;
    mpq_class precision_;
    PerronData perron_;
};

} // namespace solk
