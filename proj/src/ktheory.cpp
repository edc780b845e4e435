#include "solk/ktheory.hpp"

#include <sstream>

namespace solk {

UnstableKData k_unstable(const IntMatrix& m) {
    int n = m.rows();
    StationaryDescriptor d;
    d.n = n;
    d.matrix = m;
    d.eventual_rank = rank_q(mat_pow(m, static_cast<unsigned>(n)));
    std::ostringstream text;
    if (n == 1 && m.at(0, 0) >= 2) {
        text << "Z[1/" << m.at(0, 0).get_str() << "]";
    } else if (abs(determinant(m)) == 1) {
        text << (n == 1 ? "Z" : "Z^" + std::to_string(n));
    } else {
        text << "lim(Z^" << n << ", g -> Mg), eventual rank " << d.eventual_rank;
    }
    d.text = text.str();
    return {std::move(d), FGAbelianGroup(1, {})};
}

KGroups k_ruelle_unstable(const IntMatrix& m) {
    IntMatrix id_minus = IntMatrix::identity(m.rows()) - m;
    FGAbelianGroup coker = cokernel(id_minus);
    int ker_rank = static_cast<int>(kernel_basis(id_minus).size());
    FGAbelianGroup z(1, {});
    return {direct_sum(z, coker), FGAbelianGroup(1 + ker_rank, {})};
}

KGroups k_ruelle_stable_from(const KGroups& ru) {
    // K_*(R_s) = K^(*+1)(R_u); the UCT sequences split, and the Ext term in
    // K^0 vanishes because K_1(R_u) is torsion-free.
    KGroups rs;
    rs.k1 = hom_to_Z(ru.k0);
    rs.k0 = direct_sum(hom_to_Z(ru.k1), ext_to_Z(ru.k0));
    return rs;
}

std::vector<mpz_class> k_stable_filtration(const IntMatrix& m, int depth) {
    if (depth < 1) throw DomainError("filtration depth must be >= 1");
    std::vector<mpz_class> sizes;
    sizes.reserve(depth);
    IntMatrix p = m;
    for (int j = 1; j <= depth; ++j) {
        sizes.push_back(p.entry_sum());
        if (j < depth) p = p * m;
    }
    return sizes;
}

KTheoryReport full_report(const GraphPresentation& p, const ReportOptions& opt) {
    KTheoryReport report;
    report.presentation = p;
    report.axioms = check_axioms(p, opt.nonfolding_bound);
    report.adjacency = adjacency_matrix(p);
    const IntMatrix& m = report.adjacency;

    if (report.axioms.irreducible) {
        try {
            report.perron = perron_vectors(m, opt.precision);
        } catch (const std::exception& e) {
            report.stage_errors.push_back(std::string("perron: ") + e.what());
        }
    } else {
        report.stage_errors.push_back("perron: skipped, adjacency matrix reducible");
    }

    if (!report.axioms.all_pass()) {
        report.stage_errors.push_back("ktheory: skipped, axiom gate failed");
        return report;
    }

    try {
        report.u = k_unstable(m);
        report.ruelle_u = k_ruelle_unstable(m);
        report.ruelle_s = k_ruelle_stable_from(*report.ruelle_u);
        report.duality_check = group_iso_eq(report.ruelle_u->k0, report.ruelle_s->k0) &&
                               group_iso_eq(report.ruelle_u->k1, report.ruelle_s->k1);
        // Closed form of the stable side is the same Smith-form expression as
        // the unstable side; check it against the Hom/Ext assembly.
        KGroups closed = k_ruelle_unstable(m);
        report.closed_form_check = group_iso_eq(report.ruelle_s->k0, closed.k0) &&
                                   group_iso_eq(report.ruelle_s->k1, closed.k1);
        KGroups transposed = k_ruelle_unstable(m.transpose());
        report.transpose_consistent =
            group_iso_eq(report.ruelle_u->k0, transposed.k0) &&
            group_iso_eq(report.ruelle_u->k1, transposed.k1);
        report.stable_filtration = k_stable_filtration(m, opt.filtration_depth);
        report.ktheory_computed = true;
    } catch (const std::exception& e) {
        report.stage_errors.push_back(std::string("ktheory: ") + e.what());
    }
    return report;
}

} // namespace solk
