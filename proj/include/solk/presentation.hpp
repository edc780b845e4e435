#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solk/matrix.hpp"

namespace solk {

// One traversal step in a wrapping word: edge index plus direction sign.
struct Letter {
    int edge = 0;
    int sign = 1; // +1 forward, -1 reversed

    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Wedge-of-circles presentation (X, f): n edges attached to a single fixed
// branch point, and a nonempty wrapping word per edge.
struct GraphPresentation {
    std::vector<std::string> edges; // declaration order; indices refer here
    std::vector<Word> words;        // words[i] = wrapping word of edge i

    int size() const { return static_cast<int>(edges.size()); }
    bool all_positive() const;
};

// Combinatorial germ at the branch point: one of the 2n edge ends.
struct Direction {
    int edge = 0;
    bool outgoing = true;

    bool operator==(const Direction&) const = default;
    auto operator<=>(const Direction&) const = default;
};

struct OrientationWitness {
    // Parity chain proving infeasibility: edge indices along a cycle whose
    // sign constraints multiply to -1, plus the conflicting letter location.
    std::vector<int> cycle_edges;
    int word_edge = 0;   // word in which the conflicting letter occurs
    int letter_pos = 0;  // 0-based position
    std::string describe(const GraphPresentation& p) const;
};

struct OrientationResult {
    bool orientable = false;
    std::vector<int> sigma;                   // per-edge sign when orientable
    std::optional<GraphPresentation> reoriented; // all-positive words
    std::optional<OrientationWitness> witness;
};

struct FoldWitness {
    int iterate = 1;   // power of the rule where the cancellation shows
    int word_edge = 0; // word containing the cancelling pair
    int letter_pos = 0; // position of the first letter of the pair
    std::string describe(const GraphPresentation& p) const;
};

enum class CheckStatus { yes, no, undecided };

struct AxiomReport {
    OrientationResult orientation;
    bool markov = false;
    bool irreducible = false;
    bool primitive = false;
    CheckStatus flattening = CheckStatus::undecided;
    int flattening_k = 0;             // minimal k when yes
    int flattening_image_size = 0;    // eventual direction-image cardinality
    CheckStatus nonfolding = CheckStatus::undecided;
    int nonfolding_bound = 0;
    std::optional<FoldWitness> fold_witness;
    bool expanding = false;

    // Gate used by the K-theory pipeline and the CLI exit code.
    bool all_pass() const;
};

// External format: "edges: a b", then "a -> a a b" lines, "~a" = reversed
// letter, "#" comments.
GraphPresentation parse_presentation(const std::string& text);
GraphPresentation load_presentation(const std::string& path);

IntMatrix adjacency_matrix(const GraphPresentation& p);

OrientationResult check_orientable(const GraphPresentation& p);

// Wrapping rule of f^k by word substitution; throws ResourceError past the
// length cap.
std::vector<Word> iterate_rule(const GraphPresentation& p, int k,
                               long length_cap = 1000000);

std::map<Direction, Direction> direction_map(const GraphPresentation& p);

AxiomReport check_axioms(const GraphPresentation& p, int nonfolding_bound = 8);

} // namespace solk
