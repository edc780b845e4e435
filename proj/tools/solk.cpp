#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "solk/json_io.hpp"
#include "solk/ktheory.hpp"
#include "solk/oracle.hpp"
#include "solk/smale.hpp"

using namespace solk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAxiom = 2;
constexpr int kExitResource = 3;

// Accepts "p/q", plain integers, decimals ("0.001"), and exponent forms
// ("1e-30", "2.5e-4").  Everything maps to an exact rational.
mpq_class parse_rational(const std::string& text) try {
    std::string s = text;
    if (s.empty()) throw ParseError("empty rational");
    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + text);
        q.canonicalize();
        if (q <= 0) throw ParseError("rational must be positive: " + text);
        return q;
    }
    long exp10 = 0;
    size_t epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        s = s.substr(0, epos);
    }
    size_t dot = s.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    if (s.empty() || s == "-" || s == "+") throw ParseError("bad rational: " + text);
    mpq_class q{mpz_class(s)};
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
    if (exp10 >= 0) q *= pow10;
    else q /= mpq_class(pow10);
    q.canonicalize();
    if (q <= 0) throw ParseError("rational must be positive: " + text);
    return q;
} catch (const ParseError&) {
    throw;
} catch (const std::exception&) {
    throw ParseError("bad rational: " + text);
}

IntVector parse_int_vector(const std::string& text) {
    IntVector v;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) throw ParseError("bad vector: " + text);
        size_t b = item.find_last_not_of(" \t");
        v.emplace_back(item.substr(a, b - a + 1));
    }
    if (v.empty()) throw ParseError("bad vector: " + text);
    return v;
}

struct Options {
    std::string file;
    bool json = false;
    mpq_class precision = DimensionGroup::default_precision();
    int depth = 30;
    unsigned long seed = 1;
    int bound = 8;
    std::string element;
    long stage = 0;
    std::string subject = "all";
};

int cmd_check(const Options& opt) {
    GraphPresentation p = load_presentation(opt.file);
    AxiomReport r = check_axioms(p, opt.bound);
    if (opt.json) std::cout << axioms_json(r, p).dump(2) << "\n";
    else std::cout << axioms_text(r, p);
    return r.all_pass() ? kExitOk : kExitAxiom;
}

int cmd_ktheory(const Options& opt) {
    GraphPresentation p = load_presentation(opt.file);
    ReportOptions ropt;
    ropt.precision = opt.precision;
    ropt.nonfolding_bound = opt.bound;
    ropt.filtration_depth = opt.depth < 12 ? opt.depth : 12;
    if (ropt.filtration_depth < 1) ropt.filtration_depth = 1;
    KTheoryReport r = full_report(p, ropt);
    if (opt.json) std::cout << report_json(r).dump(2) << "\n";
    else std::cout << report_text(r);
    return r.axioms.all_pass() ? kExitOk : kExitAxiom;
}

int cmd_perron(const Options& opt) {
    GraphPresentation p = load_presentation(opt.file);
    IntMatrix m = adjacency_matrix(p);
    PerronData pd = perron_vectors(m, opt.precision);
    if (opt.json) {
        ojson out;
        out["adjacency"] = matrix_json(m);
        out["perron"] = perron_json(pd);
        out["expanding"] = is_expanding(m);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "lambda:    " << decimal_string(pd.lambda.mid())
                  << (pd.exact ? " (exact)" : "") << "\n";
        std::cout << "width:     " << decimal_string(pd.lambda.width() == 0
                                                         ? mpq_class(0)
                                                         : pd.lambda.width())
                  << "\n";
        for (int i = 0; i < m.rows(); ++i)
            std::cout << "v[" << p.edges[i] << "]:      " << decimal_string(pd.v[i].mid()) << "\n";
        for (int i = 0; i < m.rows(); ++i)
            std::cout << "w[" << p.edges[i] << "]:      " << decimal_string(pd.w[i].mid()) << "\n";
        std::cout << "expanding: " << (is_expanding(m) ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_state(const Options& opt) {
    GraphPresentation p = load_presentation(opt.file);
    IntMatrix m = adjacency_matrix(p);
    DimensionGroup dg(m, opt.precision);
    IntVector g = parse_int_vector(opt.element);
    if (static_cast<int>(g.size()) != m.rows())
        throw ParseError("element length != edge count");
    DGElement e{g, opt.stage};
    RationalInterval s = dg.state(e);
    if (opt.json) {
        ojson out;
        out["element"] = dgelement_json(e);
        out["state"] = interval_json(s);
        out["exact"] = s.exact();
        if (s.exact()) out["value"] = s.lo.get_str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "state: " << decimal_string(s.mid());
        if (s.exact())
            std::cout << " (exactly "
                      << (s.lo.get_den() == 1 ? s.lo.get_num().get_str() : s.lo.get_str()) << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_smale(const Options& opt) {
    GraphPresentation p = load_presentation(opt.file);
    AxiomReport ax = check_axioms(p, opt.bound);
    if (!ax.all_pass()) {
        std::cerr << "axioms fail; no solenoid realization\n";
        return kExitAxiom;
    }
    const GraphPresentation& oriented =
        ax.orientation.reoriented ? *ax.orientation.reoriented : p;
    IntMatrix m = adjacency_matrix(oriented);
    PerronData pd = perron_vectors(m, opt.precision);
    Solenoid sol(oriented, pd);
    std::mt19937_64 rng(opt.seed);

    int pairs = 200, certified = 0, idem_ok = 0, contraction_ok = 0;
    long double worst_idem = 0.0L, worst_ratio = 0.0L;
    long double tol = 10.0L * sol.tail_bound(opt.depth);
    for (int t = 0; t < pairs; ++t) {
        SolenoidPoint x = sol.random_point(rng, opt.depth);
        SolenoidPoint y = sol.random_nearby(x, rng, sol.lambda0() / 4.0L);
        BracketResult bx = sol.bracket(x, x);
        BracketResult bxy = sol.bracket(x, y);
        if (bx.certified_depth < opt.depth || bxy.certified_depth < opt.depth) continue;
        ++certified;
        long double err = sol.metric(bx.point, x).hi;
        worst_idem = std::max(worst_idem, err);
        if (err <= tol) ++idem_ok;
        SolenoidPoint comp = sol.random_stable_companion(x, rng, 0);
        ContractionReport cr = sol.stable_contraction(x, comp, 10);
        if (cr.coincident || cr.max_ratio <= sol.lambda0() + 1e-6L) ++contraction_ok;
        worst_ratio = std::max(worst_ratio, cr.max_ratio);
    }
    if (opt.json) {
        ojson out;
        out["depth"] = opt.depth;
        out["pairs"] = pairs;
        out["certified"] = certified;
        out["idempotent_ok"] = idem_ok;
        out["contraction_ok"] = contraction_ok;
        out["worst_idempotent_error"] = static_cast<double>(worst_idem);
        out["worst_contraction_ratio"] = static_cast<double>(worst_ratio);
        out["tolerance"] = static_cast<double>(tol);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "certified pairs:   " << certified << "/" << pairs << "\n"
                  << "[x,x]=x within tol " << idem_ok << "/" << certified << "\n"
                  << "contraction ok:    " << contraction_ok << "/" << certified << "\n"
                  << "worst ratio:       " << static_cast<double>(worst_ratio)
                  << " (1/lambda = " << static_cast<double>(sol.lambda0()) << ")\n";
    }
    return (idem_ok == certified && contraction_ok == certified) ? kExitOk : kExitAxiom;
}

int cmd_oracle(const Options& opt) {
    GraphPresentation p = load_presentation(opt.file);
    IntMatrix m = adjacency_matrix(p);
    std::mt19937_64 rng(opt.seed);
    bool all_agree = true;
    auto line = [&](const std::string& name, const std::string& verdict, bool agree) {
        std::cout << name << ": " << verdict << "\n";
        if (!agree) all_agree = false;
    };
    bool run_all = opt.subject == "all";

    if (run_all || opt.subject == "orientable") {
        bool fast = check_orientable(p).orientable;
        bool brute = oracle::orientable_bruteforce(p);
        line("orientable", fast == brute ? "agree" : "DISAGREE", fast == brute);
    }
    if (run_all || opt.subject == "snf") {
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            IntMatrix a = oracle::random_matrix(rng, 1 + static_cast<int>(rng() % 4), -9, 9);
            auto snf = smith_normal_form(a);
            auto minors = oracle::invariant_factors_by_minors(a);
            auto diag = snf.diagonal();
            for (size_t i = 0; i < diag.size(); ++i)
                if (abs(diag[i]) != minors[i]) ok = false;
        }
        line("snf", ok ? "agree" : "DISAGREE", ok);
    }
    if (run_all || opt.subject == "cokernel") {
        IntMatrix a = IntMatrix::identity(m.rows()) - m;
        FGAbelianGroup c = cokernel(a);
        auto brute = oracle::coset_count(a);
        if (!brute) {
            line("cokernel", "oracle exhausted", true);
        } else {
            bool agree = c.free_rank == 0 && c.order() == *brute;
            line("cokernel", agree ? "agree" : "DISAGREE", agree);
        }
    }
    if (run_all || opt.subject == "positivity") {
        if (!is_irreducible(m)) {
            line("positivity", "skipped (matrix not irreducible)", true);
        } else {
            DimensionGroup dg(m, opt.precision);
            std::uniform_int_distribution<int> dist(-5, 5);
            bool ok = true;
            int decided = 0;
            for (int t = 0; t < 1000; ++t) {
                IntVector g(m.rows());
                for (auto& e : g) e = dist(rng);
                Positivity fast = dg.positive({g, 0});
                Positivity brute = oracle::positivity_bruteforce(m, g, 60);
                if (fast == Positivity::undecided || brute == Positivity::undecided) continue;
                ++decided;
                if (fast != brute) ok = false;
            }
            std::ostringstream v;
            v << (ok ? "agree" : "DISAGREE") << " (" << decided << "/1000 decided)";
            line("positivity", v.str(), ok);
        }
    }
    if (run_all || opt.subject == "bracket") {
        AxiomReport ax = check_axioms(p, opt.bound);
        if (!ax.all_pass()) {
            line("bracket", "skipped (axioms fail)", true);
        } else {
            const GraphPresentation& oriented =
                ax.orientation.reoriented ? *ax.orientation.reoriented : p;
            IntMatrix mo = adjacency_matrix(oriented);
            Solenoid sol(oriented, perron_vectors(mo, opt.precision));
            long double tol = 10.0L * sol.tail_bound(opt.depth);
            bool ok = true;
            int certified = 0;
            for (int t = 0; t < 200; ++t) {
                SolenoidPoint x = sol.random_point(rng, opt.depth);
                BracketResult b = sol.bracket(x, x);
                if (b.certified_depth < opt.depth) continue;
                ++certified;
                if (sol.metric(b.point, x).hi > tol) ok = false;
            }
            std::ostringstream v;
            v << (ok ? "agree" : "DISAGREE") << " (" << certified << "/200 certified)";
            line("bracket", v.str(), ok);
        }
    }
    return all_agree ? kExitOk : kExitAxiom;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of wedge-of-circles substitution presentations"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("SOLK_PRECISION")) {
        try {
            opt.precision = parse_rational(env);
        } catch (const ParseError& e) {
            std::cerr << "SOLK_PRECISION: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    std::string precision_arg;

    auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
        if (needs_file) cmd->add_option("file", opt.file, "presentation file")->required();
        cmd->add_flag("--json", opt.json, "emit JSON");
        cmd->add_option("--precision", precision_arg, "interval width target (rational)");
        cmd->add_option("--depth", opt.depth, "truncation / filtration depth");
        cmd->add_option("--seed", opt.seed, "RNG seed for sampling commands");
        cmd->add_option("--bound", opt.bound, "iterate bound for the nonfolding scan");
    };

    auto* check = app.add_subcommand("check", "run the axiom checks");
    add_common(check);
    auto* ktheory = app.add_subcommand("ktheory", "full invariant report");
    add_common(ktheory);
    auto* perron = app.add_subcommand("perron", "certified eigenvalue data");
    add_common(perron);
    auto* state = app.add_subcommand("state", "evaluate the unique state");
    add_common(state);
    state->add_option("--element", opt.element, "comma-separated integer vector")->required();
    state->add_option("--stage", opt.stage, "limit stage of the element");
    auto* smale = app.add_subcommand("smale", "sampled bracket/contraction harness");
    add_common(smale);
    auto* oraclecmd = app.add_subcommand("oracle", "brute-force cross checks");
    add_common(oraclecmd);
    oraclecmd->add_option("--subject", opt.subject,
                          "all|orientable|snf|cokernel|positivity|bracket");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!precision_arg.empty()) opt.precision = parse_rational(precision_arg);
        if (opt.depth < 1 || opt.bound < 1) throw ParseError("bounds must be >= 1");
        if (check->parsed()) return cmd_check(opt);
        if (ktheory->parsed()) return cmd_ktheory(opt);
        if (perron->parsed()) return cmd_perron(opt);
        if (state->parsed()) return cmd_state(opt);
        if (smale->parsed()) return cmd_smale(opt);
        if (oraclecmd->parsed()) return cmd_oracle(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line) std::cerr << " (line " << e.line << ")";
        std::cerr << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
