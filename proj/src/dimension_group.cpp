#include "solk/dimension_group.hpp"

#include <algorithm>

namespace solk {

DimensionGroup::DimensionGroup(IntMatrix m, mpq_class precision)
    : m_(std::move(m)), precision_(std::move(precision)),
      perron_(perron_vectors(m_, precision_)) {
    if (!m_.square() || !m_.is_nonnegative())
        throw DomainError("dimension group needs a square nonnegative matrix");
}

void DimensionGroup::check(const DGElement& a) const {
    if (static_cast<int>(a.vector.size()) != dim())
        throw DomainError("element length does not match group dimension");
    if (a.stage < 0) throw DomainError("negative stage");
}

IntVector DimensionGroup::pow_apply(const IntVector& g, long k) const {
    IntVector r = g;
    for (long i = 0; i < k; ++i) r = m_ * r;
    return r;
}

DGElement DimensionGroup::connect(const DGElement& a) const {
    check(a);
    return {m_ * a.vector, a.stage + 1};
}

bool DimensionGroup::equal(const DGElement& a, const DGElement& b) const {
    check(a);
    check(b);
    // Push both to stage max(j,k)+n; the integer kernels of M^t stabilize
    // within n steps, so agreement there decides equality in the limit.
    long m = std::max(a.stage, b.stage) + dim();
    return pow_apply(a.vector, m - a.stage) == pow_apply(b.vector, m - b.stage);
}

DGElement DimensionGroup::delta(const DGElement& a, long power) const {
    check(a);
    if (power >= 0) return {pow_apply(a.vector, power), a.stage};
    return {a.vector, a.stage - power};
}

DGElement DimensionGroup::add(const DGElement& a, const DGElement& b) const {
    check(a);
    check(b);
    long m = std::max(a.stage, b.stage);
    IntVector va = pow_apply(a.vector, m - a.stage);
    IntVector vb = pow_apply(b.vector, m - b.stage);
    for (int i = 0; i < dim(); ++i) va[i] += vb[i];
    return {std::move(va), m};
}

namespace {

// componentwise sign summary: +1 all >= 0 with some > 0, -1 mirror,
// 0 zero vector, 2 mixed
int vector_sign(const IntVector& g) {
    bool pos = false, neg = false;
    for (const auto& x : g) {
        if (sgn(x) > 0) pos = true;
        if (sgn(x) < 0) neg = true;
    }
    if (pos && neg) return 2;
    if (pos) return 1;
    if (neg) return -1;
    return 0;
}

} // namespace

Positivity DimensionGroup::positive(const DGElement& a, int j_max) const {
    check(a);
    // Certified sign of the left Perron functional decides generic elements.
    RationalInterval pairing(mpq_class(0));
    for (int i = 0; i < dim(); ++i)
        pairing = pairing + interval_scale(perron_.w[i], mpq_class(a.vector[i]));
    if (pairing.sign() > 0) return Positivity::positive;
    if (pairing.sign() < 0) return Positivity::negative;

    // Near the Perron-kernel boundary: look for an eventually signed image.
    IntVector g = a.vector;
    for (int j = 0; j <= j_max; ++j) {
        switch (vector_sign(g)) {
            case 1: return Positivity::positive;
            case -1: return Positivity::negative;
            case 0: return Positivity::zero;
            default: break;
        }
        g = m_ * g;
    }
    if (equal(a, DGElement{IntVector(dim(), 0), 0})) return Positivity::zero;
    return Positivity::undecided;
}

RationalInterval DimensionGroup::state(const DGElement& a, const mpq_class& eps) const {
    check(a);
    if (eps <= 0) throw DomainError("eps must be positive");
    bool zero_vec = vector_sign(a.vector) == 0;

    const PerronData* pd = &perron_;
    PerronData refined;
    mpq_class eps_try = std::min(eps, precision_);
    for (int attempt = 0; attempt < 12; ++attempt) {
        RationalInterval pairing(mpq_class(0));
        for (int i = 0; i < dim(); ++i)
            pairing = pairing + interval_scale(pd->w[i], mpq_class(a.vector[i]));
        RationalInterval value =
            pairing * interval_pow(pd->lambda, -a.stage);
        if (zero_vec) return RationalInterval(mpq_class(0));
        if (pd->exact || value.width() <= eps) return value;
        eps_try /= mpz_class(1) << 32;
        refined = perron_vectors(m_, eps_try);
        pd = &refined;
    }
    throw ResourceError("state: requested precision unattainable");
}

} // namespace solk
