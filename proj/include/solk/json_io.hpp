#pragma once

#include <json.hpp>

#include "solk/dimension_group.hpp"
#include "solk/interval.hpp"
#include "solk/ktheory.hpp"
#include "solk/matrix.hpp"
#include "solk/perron.hpp"
#include "solk/presentation.hpp"
#include "solk/smith.hpp"

namespace solk {

using ojson = nlohmann::ordered_json;

ojson interval_json(const RationalInterval& iv);
RationalInterval interval_from_json(const ojson& j);

ojson group_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const ojson& j);

ojson matrix_json(const IntMatrix& m);
IntMatrix matrix_from_json(const ojson& j);

ojson vector_json(const IntVector& v);
IntVector vector_from_json(const ojson& j);

ojson dgelement_json(const DGElement& e);
DGElement dgelement_from_json(const ojson& j);

ojson perron_json(const PerronData& pd);
ojson axioms_json(const AxiomReport& r, const GraphPresentation& p);
ojson report_json(const KTheoryReport& r);

std::string axioms_text(const AxiomReport& r, const GraphPresentation& p);
std::string report_text(const KTheoryReport& r);

} // namespace solk
