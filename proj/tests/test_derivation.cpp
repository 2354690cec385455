#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <set>
#include <string>

#include "oddgon/derivation.hpp"
#include "oddgon/flow.hpp"

using namespace oddgon;

namespace {

Word cyc(int n, const char* s) { return parse_word(n, s, Topology::Cyclic); }
Word win(int n, const char* s) { return parse_word(n, s, Topology::Window); }
std::string name(int n, const Word& w) { return word_name(n, w.letters); }

// Arrows of the double pentagon, "XYu" for an arrow X -> Y in P_U.
std::set<std::string> arrow_set(const TransitionDiagram& d) {
    std::set<std::string> out;
    for (const DiagramArrow& a : d.arrows) {
        out.insert(letter_name(d.n, a.from) + letter_name(d.n, a.to) + (a.polygon == PolygonId::Upper ? "u" : "l"));
    }
    return out;
}

} // namespace

TEST_CASE("ksl worked values") {
    CHECK(name(5, ksl(win(5, "ABCDCCCCBCBCDE"))) == "DCCBCB");
    CHECK(name(5, ksl(cyc(5, "BECE"))) == "BC");
    CHECK(name(5, ksl(cyc(5, "BC"))) == "BC");
    CHECK(ksl(cyc(5, "ABC")).letters.empty());
}

TEST_CASE("ksl edge cases") {
    CHECK(name(5, ksl(cyc(5, "B"))) == "B");
    CHECK(name(5, ksl(cyc(5, "BB"))) == "BB");
    CHECK(ksl(win(5, "AB")).letters.empty());
    CHECK(ksl(win(5, "ABA")).letters == std::vector<int>{2});
    CHECK(ksl(cyc(5, "")).letters.empty());
    CHECK(ksl(cyc(5, "ABC")).topology == Topology::Cyclic);
}

TEST_CASE("cyclic equality is up to rotation") {
    CHECK(same_word(cyc(5, "BC"), cyc(5, "CB")));
    CHECK_FALSE(same_word(win(5, "BC"), win(5, "CB")));
    CHECK_FALSE(same_word(cyc(5, "BC"), win(5, "BC")));
}

TEST_CASE("derivability closure") {
    const Closure bece = derivability_closure(cyc(5, "BECE"));
    CHECK(bece.status == ClosureStatus::Fixed);
    REQUIRE(bece.orbit.size() == 2);
    CHECK(name(5, bece.orbit[1]) == "BC");
    CHECK(derivability_closure(cyc(5, "ABC")).status == ClosureStatus::Empty);
    CHECK(std::string(closure_status_name(ClosureStatus::Cycle)) == "cycle");
    CHECK(derivability_closure(cyc(5, "ABABCB"), 0).status == ClosureStatus::Truncated);
}

TEST_CASE("parse_word") {
    CHECK(parse_word(5, "S2 S5,S3 S5", Topology::Cyclic).letters == std::vector<int>{2, 5, 3, 5});
    // Lowercase letters name auxiliary edges, not originals.
    CHECK_THROWS_AS((void)parse_word(5, "bece", Topology::Cyclic), Error);
    CHECK_THROWS_AS((void)parse_word(5, "BFC", Topology::Cyclic), Error);
    CHECK_THROWS_AS((void)parse_word(5, "S9", Topology::Cyclic), Error);
    CHECK_THROWS_AS((void)parse_word(5, "B?", Topology::Cyclic), Error);
}

TEST_CASE("pentagon arrows diagram") {
    const TransitionDiagram d = build_arrows_diagram(Surface::build(5));
    const std::set<std::string> expected = {"ABu", "DCu", "EBu", "ECu", "BAl", "BEl", "CDl", "CEl"};
    CHECK(arrow_set(d) == expected);
    CHECK(d.find_arrow(1, 2, PolygonId::Upper) != nullptr);
    CHECK(d.find_arrow(1, 3, PolygonId::Upper) == nullptr);
    CHECK(d.find_arrow(1, 3, PolygonId::Lower) == nullptr);
}

TEST_CASE("arrows diagram matches traced bigrams") {
    // Oracle: every consecutive pair seen on sector trajectories, with the
    // polygon the path is in between the two crossings.
    for (int n : {5, 7}) {
        const Surface s = Surface::build(n);
        std::set<std::string> seen;
        for (int i = 0; i < 60; ++i) {
            const double theta = (std::numbers::pi / n) * (0.013 + 0.97 * i / 60.0);
            for (int label = 1; label <= n; ++label) {
                try {
                    const Trajectory t = trace_from_edge(s, PolygonId::Upper, label, 0.37, theta, 40);
                    for (std::size_t k = 1; k < t.crossings.size(); ++k) {
                        seen.insert(original_name(n, t.crossings[k - 1].label) + original_name(n, t.crossings[k].label) +
                                    (t.crossings[k].polygon == PolygonId::Upper ? "u" : "l"));
                    }
                } catch (const CornerHit&) {
                }
            }
        }
        CHECK(arrow_set(build_arrows_diagram(s)) == seen);
    }
}

TEST_CASE("BECE through the pipeline") {
    const Surface s = Surface::build(5);
    const DiagramDeriver d(s);
    const DiagramDerivation r = d.run(cyc(5, "BECE"));
    CHECK(word_name(5, r.augmented) == "BgEhCfEi");
    CHECK(word_name(5, r.primed) == "ghC'fiB'");
    CHECK(name(5, r.derived) == "BC");
    CHECK(same_word(r.derived, ksl(cyc(5, "BECE"))));
}

TEST_CASE("non-walks are rejected by the diagram pipeline") {
    const Surface s = Surface::build(5);
    CHECK_FALSE(walk_parities(build_arrows_diagram(s), cyc(5, "AC")).has_value());
    try {
        (void)derive_via_diagrams(cyc(5, "AC"), s);
        FAIL("expected InvalidPath");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidPath);
    }
}

TEST_CASE("walks alternate polygon parity") {
    const Surface s = Surface::build(5);
    const auto p = walk_parities(build_arrows_diagram(s), cyc(5, "BECE"));
    REQUIRE(p.has_value());
    for (std::size_t i = 1; i < p->size(); ++i) CHECK((*p)[i] != (*p)[i - 1]);
}

TEST_CASE("closed walks have even length") {
    for (int n : {5, 7}) {
        const TransitionDiagram d = build_arrows_diagram(Surface::build(n));
        for (int len : {1, 3, 5, 7}) CHECK(closed_walks(d, len).empty());
        CHECK_FALSE(closed_walks(d, 4).empty());
    }
}

TEST_CASE("heptagon fragment table") {
    const Surface s = Surface::build(7);
    const DiagramDeriver d(s);
    const struct {
        const char* fragment;
        const char* kept;
    } table[] = {{"GBG", "B"}, {"CGC", "G"}, {"FCF", "C"}, {"FDF", "D"}, {"CFC", "F"}, {"GCG", "C"},
                 {"BGC", ""},  {"GCF", ""},  {"CFD", ""},  {"DFC", ""},  {"FCG", ""},  {"CGB", ""}};
    for (const auto& row : table) {
        const Word w = win(7, row.fragment);
        CHECK_MESSAGE(name(7, d.derive(w)) == row.kept, row.fragment);
        CHECK(name(7, ksl(w)) == row.kept);
    }
}

TEST_CASE("vertical arrow sets grow by two") {
    CHECK(vertical_arrow_sets(build_pipeline_diagrams(Surface::build(5))) == 2);
    CHECK(vertical_arrow_sets(build_pipeline_diagrams(Surface::build(7))) == 4);
    CHECK(vertical_arrow_sets(build_pipeline_diagrams(Surface::build(9))) == 6);
}

TEST_CASE("pipeline diagrams share the node set") {
    const PipelineDiagrams p = build_pipeline_diagrams(Surface::build(7));
    CHECK(p.augmented.stage == DiagramStage::Augmented);
    CHECK(p.dual.nodes == p.primed.nodes);
    CHECK(p.dual.arrows.size() == p.primed.arrows.size());
    for (const Letter& l : p.dual.nodes) CHECK(l.kind != LetterKind::Primed);
}

TEST_CASE("exhaustive equivalence on the pentagon") {
    const EquivalenceReport r = sandwich_equivalence_check(Surface::build(5), 10, 500, 30, 7);
    CHECK(r.pass());
    CHECK(r.cyclic_walks > 0);
    CHECK(r.random_walks == 500);
    CHECK_FALSE(r.counterexample.has_value());
}

TEST_CASE("letter naming") {
    CHECK(letter_name(5, primed_letter(3)) == "C'");
    CHECK(letter_name(5, auxiliary_letter(PolygonId::Lower, 2)) == "f");
    CHECK(word_name(7, std::vector<Letter>{auxiliary_letter(PolygonId::Upper, 1), original_letter(2)}) == "U1 B");
    CHECK(word_name(27, std::vector<int>{1, 2}) == "S1 S2");
}
