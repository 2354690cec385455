#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddgon/surface.hpp"

namespace oddgon {

enum class Topology { Window, Cyclic };

// A word over the original edge labels 1..n.
struct Word {
    std::vector<int> letters;
    Topology topology = Topology::Cyclic;

    bool operator==(const Word&) const = default;
};

// Keeps the letters whose predecessor equals their successor. Windows lose
// their first and last letters, whose status is undefined.
Word ksl(const Word& word);

// Equality of cyclic words up to rotation; windows compare letter by letter.
bool same_word(const Word& a, const Word& b);

enum class ClosureStatus { Empty, Fixed, Cycle, Truncated };
const char* closure_status_name(ClosureStatus s);

struct Closure {
    std::vector<Word> orbit; // starts with the input
    ClosureStatus status = ClosureStatus::Truncated;
};

// Iterates ksl on a cyclic word until it empties, stops changing, revisits a
// word, or `max_iters` applications have been made.
Closure derivability_closure(const Word& word, int max_iters = 64);

// Letters of the diagram alphabets. Auxiliary letters carry their polygon.
enum class LetterKind { Original, Auxiliary, Primed };

struct Letter {
    LetterKind kind = LetterKind::Original;
    int label = 0;
    PolygonId polygon = PolygonId::Upper; // meaningful for auxiliary letters only

    auto operator<=>(const Letter&) const = default;
    bool operator==(const Letter&) const = default;
};

Letter original_letter(int label);
Letter auxiliary_letter(PolygonId polygon, int label);
Letter primed_letter(int label);
std::string letter_name(int n, const Letter& letter);
std::string word_name(int n, const std::vector<Letter>& letters);
std::string word_name(int n, const std::vector<int>& labels);

enum class DiagramStage { Arrows, Augmented, Dual, Primed };
const char* stage_name(DiagramStage stage);

struct DiagramArrow {
    Letter from;
    Letter to;
    // Arrows stage: the polygon the path crosses between the two letters.
    PolygonId polygon = PolygonId::Upper;
    // Augmented: auxiliary letters crossed. Dual: the original letter crossed
    // (at most one). Primed: the primed letters crossed (possibly none).
    std::vector<Letter> label;
    // Dual and primed stages: the original letter between the two nodes,
    // which keys the arrow together with its endpoints.
    std::optional<int> via;
};

struct TransitionDiagram {
    DiagramStage stage = DiagramStage::Arrows;
    int n = 0;
    std::vector<Letter> nodes;
    std::vector<DiagramArrow> arrows;

    const DiagramArrow* find(const Letter& from, const Letter& to, std::optional<int> via = std::nullopt) const;
    const DiagramArrow* find_arrow(int from, int to, PolygonId polygon) const;
};

// For each polygon and each ordered pair of its edges, the arrow i -> j is
// present when some segment from edge i to edge j inside the polygon has its
// direction in the open sector (0, pi/n).
TransitionDiagram build_arrows_diagram(const Surface& surface);

struct PipelineDiagrams {
    TransitionDiagram augmented;
    TransitionDiagram dual;
    TransitionDiagram primed;
};

PipelineDiagrams build_pipeline_diagrams(const Surface& surface, const TransitionDiagram& arrows);
PipelineDiagrams build_pipeline_diagrams(const Surface& surface);

// Polygon of the arrow leaving each position of a word, when the word is a
// walk on the arrows diagram. Cyclic words must close up.
std::optional<std::vector<PolygonId>> walk_parities(const TransitionDiagram& arrows, const Word& word);

// Everything the diagram pipeline produced for one word.
struct DiagramDerivation {
    std::vector<Letter> augmented;
    std::vector<Letter> dual;   // node letters with the crossed originals in between
    std::vector<Letter> primed; // dual walk relabelled with primed letters
    Word derived;
};

// Runs augment -> dual -> primed -> delete auxiliaries -> strip primes.
// Throws InvalidPath when the word is not a walk on the arrows diagram.
class DiagramDeriver {
public:
    explicit DiagramDeriver(const Surface& surface);

    const Surface& surface() const { return surface_; }
    const TransitionDiagram& arrows() const { return arrows_; }
    const PipelineDiagrams& pipeline() const { return pipeline_; }

    DiagramDerivation run(const Word& word) const;
    Word derive(const Word& word) const { return run(word).derived; }

private:
    int coincident_primed(int label) const;

    const Surface& surface_;
    TransitionDiagram arrows_;
    PipelineDiagrams pipeline_;
};

Word derive_via_diagrams(const Word& word, const Surface& surface);

// Number of unordered pairs of auxiliary nodes joined by a dual arrow that
// keeps a primed label.
int vertical_arrow_sets(const PipelineDiagrams& pipeline);

struct EquivalenceReport {
    int n = 0;
    int length_bound = 0;
    std::uint64_t cyclic_walks = 0;
    std::uint64_t random_walks = 0;
    std::uint64_t fragments = 0;
    std::uint64_t mismatches = 0;
    std::optional<Word> counterexample;
    bool pass() const { return mismatches == 0; }
};

// Exhaustive check over all closed walks of length <= length_bound, plus
// `random_walks` seeded random window walks of length <= random_length, plus
// every length-3 window walk.
EquivalenceReport sandwich_equivalence_check(const Surface& surface, int length_bound, std::uint64_t random_walks = 0,
                                             int random_length = 30, std::uint64_t seed = 42);

// All closed walks of the given length on the arrows diagram, one per
// rotation class.
std::vector<Word> closed_walks(const TransitionDiagram& arrows, int length);

// Parses a word written with letters A..Z (n <= 26) or S1 S2 ... tokens.
Word parse_word(int n, const std::string& text, Topology topology);

} // namespace oddgon
