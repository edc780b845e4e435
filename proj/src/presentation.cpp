#include "solk/presentation.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "solk/errors.hpp"
#include "solk/perron.hpp"

namespace solk {

bool GraphPresentation::all_positive() const {
    for (const auto& word : words)
        for (const auto& letter : word)
            if (letter.sign < 0) return false;
    return true;
}

std::string OrientationWitness::describe(const GraphPresentation& p) const {
    std::ostringstream out;
    out << "parity conflict at word of '" << p.edges[word_edge] << "', letter "
        << (letter_pos + 1) << "; odd constraint cycle through edges:";
    for (int e : cycle_edges) out << " " << p.edges[e];
    return out.str();
}

std::string FoldWitness::describe(const GraphPresentation& p) const {
    std::ostringstream out;
    out << "cancelling pair in f^" << iterate << " word of '" << p.edges[word_edge]
        << "' at letters " << (letter_pos + 1) << "," << (letter_pos + 2);
    return out.str();
}

bool AxiomReport::all_pass() const {
    return orientation.orientable && markov && irreducible && primitive &&
           flattening == CheckStatus::yes && nonfolding == CheckStatus::yes && expanding;
}

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Word reverse_flip(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->edge, -it->sign});
    return r;
}

} // namespace

GraphPresentation parse_presentation(const std::string& text) {
    GraphPresentation p;
    std::map<std::string, int> index;
    std::vector<bool> have_word;
    bool seen_edges_line = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;

        if (!seen_edges_line) {
            if (tok != "edges:")
                throw ParseError("expected 'edges:' declaration first", lineno, 1);
            std::string id;
            while (ls >> id) {
                if (!valid_identifier(id))
                    throw ParseError("invalid edge identifier '" + id + "'", lineno);
                if (index.count(id))
                    throw ParseError("duplicate edge declaration '" + id + "'", lineno);
                index[id] = p.size();
                p.edges.push_back(id);
            }
            if (p.edges.empty()) throw ParseError("no edges declared", lineno);
            p.words.resize(p.edges.size());
            have_word.assign(p.edges.size(), false);
            seen_edges_line = true;
            continue;
        }

        auto it = index.find(tok);
        if (it == index.end())
            throw ParseError("rule for undeclared edge '" + tok + "'", lineno, 1);
        int edge = it->second;
        if (have_word[edge])
            throw ParseError("duplicate rule for edge '" + tok + "'", lineno);
        std::string arrow;
        if (!(ls >> arrow) || arrow != "->")
            throw ParseError("expected '->' after edge name", lineno);
        Word word;
        std::string lt;
        while (ls >> lt) {
            int sign = 1;
            std::string id = lt;
            if (id[0] == '~') { sign = -1; id = id.substr(1); }
            auto jt = index.find(id);
            if (jt == index.end())
                throw ParseError("undeclared edge letter '" + id + "'", lineno);
            word.push_back({jt->second, sign});
        }
        if (word.empty()) throw ParseError("empty word for edge '" + tok + "'", lineno);
        p.words[edge] = std::move(word);
        have_word[edge] = true;
    }

    if (!seen_edges_line) throw ParseError("empty presentation", lineno);
    for (int i = 0; i < p.size(); ++i)
        if (!have_word[i])
            throw ParseError("missing rule for edge '" + p.edges[i] + "'", lineno);
    return p;
}

GraphPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

IntMatrix adjacency_matrix(const GraphPresentation& p) {
    int n = p.size();
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (const auto& letter : p.words[i]) m.at(i, letter.edge) += 1;
    return m;
}

OrientationResult check_orientable(const GraphPresentation& p) {
    int n = p.size();
    // Constraint per letter: sigma(i) * sigma(letter.edge) = letter.sign.
    struct Constraint { int u, v, parity, word_edge, pos; };
    std::vector<Constraint> constraints;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(p.words[i].size()); ++j)
            constraints.push_back({i, p.words[i][j].edge, p.words[i][j].sign, i, j});

    std::vector<int> parent(n), parity(n, 1); // parity vs parent
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        int sign = 1;
        while (parent[x] != x) { sign *= parity[x]; x = parent[x]; }
        return std::pair<int, int>{x, sign};
    };

    OrientationResult result;
    for (size_t ci = 0; ci < constraints.size(); ++ci) {
        const auto& c = constraints[ci];
        auto [ru, su] = find(c.u);
        auto [rv, sv] = find(c.v);
        if (ru != rv) {
            parent[ru] = rv;
            parity[ru] = su * sv * c.parity;
            continue;
        }
        if (su * sv == c.parity) continue;

        // Conflict: rebuild an odd cycle from the earlier constraints.
        OrientationWitness witness;
        witness.word_edge = c.word_edge;
        witness.letter_pos = c.pos;
        std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, parity)
        for (size_t k = 0; k < ci; ++k)
            if (constraints[k].u != constraints[k].v) {
                adj[constraints[k].u].push_back({constraints[k].v, constraints[k].parity});
                adj[constraints[k].v].push_back({constraints[k].u, constraints[k].parity});
            }
        std::vector<int> prev(n, -1);
        std::deque<int> queue{c.u};
        std::vector<bool> seen(n, false);
        seen[c.u] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (x == c.v) break;
            for (auto [y, pe] : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    prev[y] = x;
                    queue.push_back(y);
                }
        }
        for (int x = c.v; x != -1; x = prev[x]) witness.cycle_edges.push_back(x);
        std::reverse(witness.cycle_edges.begin(), witness.cycle_edges.end());
        result.orientable = false;
        result.witness = witness;
        return result;
    }

    // Feasible: read off sigma relative to each component root.
    result.orientable = true;
    result.sigma.resize(n);
    for (int i = 0; i < n; ++i) result.sigma[i] = find(i).second;

    GraphPresentation re = p;
    for (int i = 0; i < n; ++i) {
        Word word;
        word.reserve(p.words[i].size());
        for (const auto& letter : p.words[i])
            word.push_back({letter.edge, letter.sign * result.sigma[letter.edge]});
        if (result.sigma[i] < 0) word = reverse_flip(word);
        re.words[i] = std::move(word);
    }
    result.reoriented = std::move(re);
    return result;
}

std::vector<Word> iterate_rule(const GraphPresentation& p, int k, long length_cap) {
    if (k < 1) throw DomainError("iterate_rule expects k >= 1");
    std::vector<Word> current = p.words;
    for (int step = 1; step < k; ++step) {
        std::vector<Word> next(p.size());
        for (int i = 0; i < p.size(); ++i) {
            Word word;
            for (const auto& letter : p.words[i]) {
                const Word& sub = current[letter.edge];
                if (letter.sign > 0) word.insert(word.end(), sub.begin(), sub.end());
                else {
                    Word rf = reverse_flip(sub);
                    word.insert(word.end(), rf.begin(), rf.end());
                }
                if (static_cast<long>(word.size()) > length_cap)
                    throw ResourceError("iterated word exceeds length cap of " +
                                        std::to_string(length_cap));
            }
            next[i] = std::move(word);
        }
        current = std::move(next);
    }
    return current;
}

std::map<Direction, Direction> direction_map(const GraphPresentation& p) {
    std::map<Direction, Direction> dm;
    for (int i = 0; i < p.size(); ++i) {
        const Letter& first = p.words[i].front();
        const Letter& last = p.words[i].back();
        dm[{i, true}] = {first.edge, first.sign > 0};
        dm[{i, false}] = {last.edge, last.sign < 0};
    }
    return dm;
}

AxiomReport check_axioms(const GraphPresentation& p, int nonfolding_bound) {
    AxiomReport report;
    report.orientation = check_orientable(p);
    report.markov = true; // single fixed branch point by construction

    IntMatrix m = adjacency_matrix(p);
    report.irreducible = is_irreducible(m);
    report.primitive = report.irreducible && is_primitive(m);
    report.expanding = report.irreducible && is_expanding(m);

    // Flattening: iterate the direction map on all 2n germs until the image
    // stabilizes; accept when the eventual image has at most 2 germs.
    {
        auto dm = direction_map(p);
        std::set<Direction> image;
        for (const auto& [d, _] : dm) image.insert(d);
        int k = 0;
        std::set<Direction> prev;
        while (k <= 2 * p.size() + 1) {
            if (static_cast<int>(image.size()) <= 2) break;
            prev = image;
            std::set<Direction> next;
            for (const auto& d : image) next.insert(dm.at(d));
            image = std::move(next);
            ++k;
            if (image == prev) { k = -1; break; } // stabilized above 2
        }
        if (static_cast<int>(image.size()) <= 2 && k >= 0) {
            report.flattening = CheckStatus::yes;
            report.flattening_k = std::max(k, 1);
            report.flattening_image_size = static_cast<int>(image.size());
        } else {
            report.flattening = CheckStatus::no;
            report.flattening_image_size = static_cast<int>(image.size());
        }
    }

    // Nonfolding: orientation-preserving rules cannot fold in the interior,
    // so an orientable presentation passes outright; otherwise scan bounded
    // iterates for adjacent cancelling pairs.
    report.nonfolding_bound = nonfolding_bound;
    if (report.orientation.orientable && report.orientation.reoriented->all_positive()) {
        report.nonfolding = CheckStatus::yes;
    } else {
        report.nonfolding = CheckStatus::undecided;
        for (int j = 1; j <= nonfolding_bound && report.nonfolding == CheckStatus::undecided;
             ++j) {
            std::vector<Word> words;
            try {
                words = iterate_rule(p, j);
            } catch (const ResourceError&) {
                break; // report undecided at the bound we reached
            }
            for (int i = 0; i < p.size(); ++i)
                for (size_t t = 0; t + 1 < words[i].size(); ++t)
                    if (words[i][t].edge == words[i][t + 1].edge &&
                        words[i][t].sign == -words[i][t + 1].sign) {
                        report.nonfolding = CheckStatus::no;
                        report.fold_witness =
                            FoldWitness{j, i, static_cast<int>(t)};
                        break;
                    }
        }
    }
    return report;
}

} // namespace solk
