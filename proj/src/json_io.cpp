#include "solk/json_io.hpp"

#include <sstream>

namespace solk {

namespace {

std::string rat_str(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::yes: return "yes";
        case CheckStatus::no: return "no";
        default: return "undecided";
    }
}

} // namespace

ojson interval_json(const RationalInterval& iv) {
    return ojson{{"lo", rat_str(iv.lo)},
                 {"hi", rat_str(iv.hi)},
                 {"decimal", decimal_string(iv.mid())}};
}

RationalInterval interval_from_json(const ojson& j) {
    return {mpq_class(j.at("lo").get<std::string>()),
            mpq_class(j.at("hi").get<std::string>())};
}

ojson group_json(const FGAbelianGroup& g) {
    ojson torsion = ojson::array();
    for (const auto& t : g.torsion) torsion.push_back(t.get_str());
    return ojson{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

FGAbelianGroup group_from_json(const ojson& j) {
    std::vector<mpz_class> torsion;
    for (const auto& t : j.at("torsion"))
        torsion.emplace_back(t.is_string() ? mpz_class(t.get<std::string>())
                                           : mpz_class(t.get<long>()));
    return FGAbelianGroup(j.at("free_rank").get<int>(), std::move(torsion));
}

ojson matrix_json(const IntMatrix& m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const ojson& j) {
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    std::vector<mpz_class> entries;
    for (const auto& row : j)
        for (const auto& e : row)
            entries.emplace_back(e.is_string() ? mpz_class(e.get<std::string>())
                                               : mpz_class(e.get<long>()));
    return IntMatrix(rows, cols, std::move(entries));
}

ojson vector_json(const IntVector& v) {
    ojson out = ojson::array();
    for (const auto& e : v) out.push_back(e.get_str());
    return out;
}

IntVector vector_from_json(const ojson& j) {
    IntVector v;
    for (const auto& e : j)
        v.emplace_back(e.is_string() ? mpz_class(e.get<std::string>())
                                     : mpz_class(e.get<long>()));
    return v;
}

ojson dgelement_json(const DGElement& e) {
    return ojson{{"vector", vector_json(e.vector)}, {"stage", e.stage}};
}

DGElement dgelement_from_json(const ojson& j) {
    return {vector_from_json(j.at("vector")), j.at("stage").get<long>()};
}

ojson perron_json(const PerronData& pd) {
    ojson v = ojson::array(), w = ojson::array();
    for (const auto& c : pd.v) v.push_back(interval_json(c));
    for (const auto& c : pd.w) w.push_back(interval_json(c));
    return ojson{{"lambda", interval_json(pd.lambda)},
                 {"exact", pd.exact},
                 {"v", std::move(v)},
                 {"w", std::move(w)}};
}

ojson axioms_json(const AxiomReport& r, const GraphPresentation& p) {
    ojson orientation;
    orientation["orientable"] = r.orientation.orientable;
    if (r.orientation.orientable) {
        ojson sigma = ojson::object();
        for (int i = 0; i < p.size(); ++i) sigma[p.edges[i]] = r.orientation.sigma[i];
        orientation["sigma"] = std::move(sigma);
    } else if (r.orientation.witness) {
        orientation["witness"] = r.orientation.witness->describe(p);
    }
    ojson out;
    out["orientation"] = std::move(orientation);
    out["markov"] = r.markov;
    out["irreducible"] = r.irreducible;
    out["primitive"] = r.primitive;
    ojson flat;
    flat["status"] = status_str(r.flattening);
    if (r.flattening == CheckStatus::yes) flat["k"] = r.flattening_k;
    flat["eventual_image_size"] = r.flattening_image_size;
    if (r.flattening == CheckStatus::yes && r.flattening_image_size == 1)
        flat["warning"] = "eventual direction image is a half-line germ";
    out["flattening"] = std::move(flat);
    ojson nf;
    nf["status"] = status_str(r.nonfolding);
    nf["bound"] = r.nonfolding_bound;
    if (r.fold_witness) nf["witness"] = r.fold_witness->describe(p);
    out["nonfolding"] = std::move(nf);
    out["expanding"] = r.expanding;
    out["all_pass"] = r.all_pass();
    return out;
}

ojson report_json(const KTheoryReport& r) {
    ojson out;
    out["axioms"] = axioms_json(r.axioms, r.presentation);
    out["adjacency"] = matrix_json(r.adjacency);
    if (r.perron) out["perron"] = perron_json(*r.perron);
    if (r.u) {
        ojson u;
        u["K0"] = ojson{{"descriptor", r.u->k0.text},
                        {"n", r.u->k0.n},
                        {"eventual_rank", r.u->k0.eventual_rank},
                        {"matrix", matrix_json(r.u->k0.matrix)}};
        u["K1"] = group_json(r.u->k1);
        out["U"] = std::move(u);
    }
    if (r.ruelle_u)
        out["Ru"] = ojson{{"K0", group_json(r.ruelle_u->k0)},
                          {"K1", group_json(r.ruelle_u->k1)}};
    if (r.ruelle_s)
        out["Rs"] = ojson{{"K0", group_json(r.ruelle_s->k0)},
                          {"K1", group_json(r.ruelle_s->k1)}};
    out["duality_check"] = r.duality_check;
    out["closed_form_check"] = r.closed_form_check;
    out["transpose_consistent"] = r.transpose_consistent;
    ojson filt = ojson::array();
    for (const auto& s : r.stable_filtration) filt.push_back(s.get_str());
    out["stable_filtration"] = std::move(filt);
    out["ktheory_computed"] = r.ktheory_computed;
    if (!r.stage_errors.empty()) {
        ojson errs = ojson::array();
        for (const auto& e : r.stage_errors) errs.push_back(e);
        out["stage_errors"] = std::move(errs);
    }
    // citation trail for the operator-algebra facts consumed, not recomputed
    out["notes"] = "Ruelle algebras are nuclear, purely infinite, separable, simple and "
                   "stable; with matching K-theory the stable and unstable Ruelle algebras "
                   "are *-isomorphic by classification. Consumed as cited facts.";
    return out;
}

std::string axioms_text(const AxiomReport& r, const GraphPresentation& p) {
    std::ostringstream out;
    out << "orientable:   " << (r.orientation.orientable ? "yes" : "no");
    if (!r.orientation.orientable && r.orientation.witness)
        out << "  (" << r.orientation.witness->describe(p) << ")";
    out << "\n";
    out << "markov:       " << (r.markov ? "yes" : "no") << "\n";
    out << "irreducible:  " << (r.irreducible ? "yes" : "no") << "\n";
    out << "primitive:    " << (r.primitive ? "yes" : "no") << "\n";
    out << "flattening:   " << status_str(r.flattening);
    if (r.flattening == CheckStatus::yes)
        out << " (k=" << r.flattening_k << ", eventual image size "
            << r.flattening_image_size << ")";
    out << "\n";
    out << "nonfolding:   " << status_str(r.nonfolding);
    if (r.fold_witness) out << "  (" << r.fold_witness->describe(p) << ")";
    if (r.nonfolding == CheckStatus::undecided) out << " (bound " << r.nonfolding_bound << ")";
    out << "\n";
    out << "expanding:    " << (r.expanding ? "yes" : "no") << "\n";
    out << "all axioms:   " << (r.all_pass() ? "pass" : "FAIL") << "\n";
    return out.str();
}

std::string report_text(const KTheoryReport& r) {
    std::ostringstream out;
    out << axioms_text(r.axioms, r.presentation);
    out << "adjacency:    ";
    for (int i = 0; i < r.adjacency.rows(); ++i) {
        out << "[";
        for (int j = 0; j < r.adjacency.cols(); ++j)
            out << (j ? " " : "") << r.adjacency.at(i, j).get_str();
        out << "]";
    }
    out << "\n";
    if (r.perron)
        out << "lambda:       " << decimal_string(r.perron->lambda.mid())
            << (r.perron->exact ? " (exact)" : "") << "\n";
    if (r.u) out << "K0(U):        " << r.u->k0.text << "\n"
                 << "K1(U):        " << r.u->k1.to_string() << "\n";
    if (r.ruelle_u)
        out << "K0(Ru):       " << r.ruelle_u->k0.to_string() << "\n"
            << "K1(Ru):       " << r.ruelle_u->k1.to_string() << "\n";
    if (r.ruelle_s)
        out << "K0(Rs):       " << r.ruelle_s->k0.to_string() << "\n"
            << "K1(Rs):       " << r.ruelle_s->k1.to_string() << "\n";
    if (r.ktheory_computed) {
        out << "duality:      " << (r.duality_check ? "K*(Ru) = K*(Rs)" : "MISMATCH") << "\n";
        out << "filtration:  ";
        for (const auto& s : r.stable_filtration) out << " " << s.get_str();
        out << "\n";
    }
    for (const auto& e : r.stage_errors) out << "note:         " << e << "\n";
    return out.str();
}

} // namespace solk
