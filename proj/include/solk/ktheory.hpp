#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solk/dimension_group.hpp"
#include "solk/perron.hpp"
#include "solk/presentation.hpp"
#include "solk/smith.hpp"

namespace solk {

struct KGroups {
    FGAbelianGroup k0;
    FGAbelianGroup k1;
};

// K0 of the unstable equivalence algebra is the stationary limit of Z^n
// under M.  That group need not be finitely generated (Z[1/n] for the
// degree-n circle map), so it is reported by descriptor, not flattened.
struct StationaryDescriptor {
    int n = 0;
    IntMatrix matrix;
    int eventual_rank = 0;
    std::string text;
};

struct UnstableKData {
    StationaryDescriptor k0;
    FGAbelianGroup k1; // always Z
};

UnstableKData k_unstable(const IntMatrix& m);

// K0 = Z + coker(I - M), K1 = Z + Z^(kernel rank of I - M).
KGroups k_ruelle_unstable(const IntMatrix& m);

// Assembled from the unstable groups through Hom/Ext (duality + UCT route),
// not copied from the closed form.
KGroups k_ruelle_stable_from(const KGroups& ruelle_unstable);

// Stage sizes of the stable groupoid skeleton: total count of depth-j
// preimage identifications, i.e. the entry sum of M^j.
std::vector<mpz_class> k_stable_filtration(const IntMatrix& m, int depth);

struct ReportOptions {
    mpq_class precision = DimensionGroup::default_precision();
    int nonfolding_bound = 8;
    int filtration_depth = 6;
};

struct KTheoryReport {
    GraphPresentation presentation;
    AxiomReport axioms;
    IntMatrix adjacency;
    std::optional<PerronData> perron;
    std::optional<UnstableKData> u;
    std::optional<KGroups> ruelle_u;
    std::optional<KGroups> ruelle_s;
    bool duality_check = false;
    bool closed_form_check = false;     // Hom/Ext assembly vs closed form
    bool transpose_consistent = false;  // K-groups from M and M^T agree
    std::vector<mpz_class> stable_filtration;
    bool ktheory_computed = false;
    std::vector<std::string> stage_errors;
};

KTheoryReport full_report(const GraphPresentation& p, const ReportOptions& opt = {});

} // namespace solk
