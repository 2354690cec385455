#include "oddgon/derivation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "oddgon/flow.hpp"

namespace oddgon {

Word ksl(const Word& word) {
    const auto& w = word.letters;
    const std::size_t len = w.size();
    Word out{{}, word.topology};
    if (word.topology == Topology::Window) {
        for (std::size_t i = 1; i + 1 < len; ++i) {
            if (w[i - 1] == w[i + 1]) out.letters.push_back(w[i]);
        }
        return out;
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (w[(i + len - 1) % len] == w[(i + 1) % len]) out.letters.push_back(w[i]);
    }
    return out;
}

bool same_word(const Word& a, const Word& b) {
    if (a.topology != b.topology || a.letters.size() != b.letters.size()) return false;
    if (a.topology == Topology::Window) return a.letters == b.letters;
    return least_rotation(a.letters) == least_rotation(b.letters);
}

const char* closure_status_name(ClosureStatus s) {
    switch (s) {
    case ClosureStatus::Empty: return "empty";
    case ClosureStatus::Fixed: return "fixed";
    case ClosureStatus::Cycle: return "cycle";
    case ClosureStatus::Truncated: return "truncated";
    }
    return "?";
}

Closure derivability_closure(const Word& word, int max_iters) {
    Closure out;
    out.orbit.push_back(word);
    if (word.letters.empty()) {
        out.status = ClosureStatus::Empty;
        return out;
    }
    for (int it = 0; it < max_iters; ++it) {
        Word next = ksl(out.orbit.back());
        if (next.letters.empty()) {
            out.orbit.push_back(next);
            out.status = ClosureStatus::Empty;
            return out;
        }
        if (same_word(next, out.orbit.back())) {
            out.status = ClosureStatus::Fixed;
            return out;
        }
        const bool seen = std::any_of(out.orbit.begin(), out.orbit.end(), [&](const Word& w) { return same_word(w, next); });
        out.orbit.push_back(next);
        if (seen) {
            out.status = ClosureStatus::Cycle;
            return out;
        }
    }
    out.status = ClosureStatus::Truncated;
    return out;
}

Letter original_letter(int label) { return {LetterKind::Original, label, PolygonId::Upper}; }
Letter auxiliary_letter(PolygonId polygon, int label) { return {LetterKind::Auxiliary, label, polygon}; }
Letter primed_letter(int label) { return {LetterKind::Primed, label, PolygonId::Upper}; }

std::string letter_name(int n, const Letter& letter) {
    switch (letter.kind) {
    case LetterKind::Original: return original_name(n, letter.label);
    case LetterKind::Auxiliary: return auxiliary_name(n, letter.polygon, letter.label);
    case LetterKind::Primed: return primed_name(n, letter.label);
    }
    return "?";
}

std::string word_name(int n, const std::vector<Letter>& letters) {
    std::string out;
    const bool spaced = n > 5;
    for (const Letter& l : letters) {
        if (spaced && !out.empty()) out += ' ';
        out += letter_name(n, l);
    }
    return out;
}

std::string word_name(int n, const std::vector<int>& labels) {
    std::string out;
    const bool spaced = n > 26;
    for (int l : labels) {
        if (spaced && !out.empty()) out += ' ';
        out += original_name(n, l);
    }
    return out;
}

const char* stage_name(DiagramStage stage) {
    switch (stage) {
    case DiagramStage::Arrows: return "arrows";
    case DiagramStage::Augmented: return "augmented";
    case DiagramStage::Dual: return "dual";
    case DiagramStage::Primed: return "primed";
    }
    return "?";
}

const DiagramArrow* TransitionDiagram::find(const Letter& from, const Letter& to, std::optional<int> via) const {
    for (const DiagramArrow& a : arrows) {
        if (a.from == from && a.to == to && a.via == via) return &a;
    }
    return nullptr;
}

const DiagramArrow* TransitionDiagram::find_arrow(int from, int to, PolygonId polygon) const {
    for (const DiagramArrow& a : arrows) {
        if (a.from.label == from && a.to.label == to && a.polygon == polygon) return &a;
    }
    return nullptr;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Whether the open cone of directions from edge a to edge b meets (0, sector).
bool cone_meets_sector(const Edge& a, const Edge& b, double sector) {
    std::vector<Vec2> dirs;
    for (Vec2 p : {a.p0, a.p1}) {
        for (Vec2 q : {b.p0, b.p1}) {
            if (norm(q - p) > 1e-12) dirs.push_back(q - p);
        }
    }
    const double ref = std::atan2(dirs.front().y, dirs.front().x);
    double lo = 0.0;
    double hi = 0.0;
    for (Vec2 d : dirs) {
        const double delta = std::remainder(std::atan2(d.y, d.x) - ref, kTwoPi);
        lo = std::min(lo, delta);
        hi = std::max(hi, delta);
    }
    for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
        const double a_lo = std::max(ref + lo + shift, 0.0);
        const double a_hi = std::min(ref + hi + shift, sector);
        if (a_hi - a_lo > 1e-12) return true;
    }
    return false;
}

bool is_node_label(const Surface& surface, int label) { return label == 1 || label == surface.slanted_sector_edge(); }

bool is_node(const Surface& surface, const Letter& l) {
    return l.kind == LetterKind::Auxiliary || (l.kind == LetterKind::Original && is_node_label(surface, l.label));
}

// Auxiliary edges of a polygon crossed by the chord between two of its edges,
// in chord order.
std::vector<Letter> separating_auxiliaries(const Surface& surface, PolygonId poly, int from, int to) {
    const Segment chord{surface.edge(poly, from).segment().midpoint(), surface.edge(poly, to).segment().midpoint()};
    std::vector<std::pair<double, Letter>> hits;
    for (const Edge& aux : surface.auxiliary()) {
        if (aux.polygon != poly) continue;
        if (auto h = intersect(chord, aux.segment()); h && crosses_properly(chord, aux.segment())) {
            hits.emplace_back(h->u, auxiliary_letter(poly, aux.label));
        }
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Letter> out;
    for (const auto& h : hits) out.push_back(h.second);
    return out;
}

const Edge& auxiliary_edge(const Surface& surface, const Letter& l) {
    for (const Edge& e : surface.auxiliary()) {
        if (e.polygon == l.polygon && e.label == l.label) return e;
    }
    throw Error(ErrorCode::Internal, "unknown auxiliary letter");
}

// A stretch of a path between two consecutive nodes. `start` lies in polygon
// `poly`; when `via` is set the stretch leaves `poly` through that edge and
// `end` lies in the other polygon.
struct Stretch {
    Letter start;
    Letter end;
    PolygonId poly;
    std::optional<int> via;
};

// Segment of the node letter in the polygon where the stretch touches it.
Segment node_segment(const Surface& surface, const Letter& l, PolygonId poly) {
    if (l.kind == LetterKind::Auxiliary) return auxiliary_edge(surface, l).segment();
    return surface.edge(poly, l.label).segment();
}

struct PrimedHit {
    double s;
    int label;
};

void primed_hits(const Surface& surface, PolygonId poly, const Segment& seg, bool include_start, double s0, double s1,
                 std::vector<PrimedHit>& out) {
    for (const PrimedEdge& pe : surface.primed()) {
        if (pe.coincident_original) continue;
        for (const Edge& e : pe.pieces) {
            if (e.polygon != poly) continue;
            const auto h = intersect(seg, e.segment(), 1e-9);
            if (!h) continue;
            if (h->u < (include_start ? -1e-9 : 1e-9) || h->u > 1.0 + 1e-9) continue;
            if (h->v < -1e-9 || h->v > 1.0 + 1e-9) continue;
            out.push_back({s0 + h->u * (s1 - s0), pe.label});
        }
    }
}

bool crosses_other_auxiliary(const Surface& surface, PolygonId poly, const Segment& seg, const Letter& a, const Letter& b) {
    for (const Edge& aux : surface.auxiliary()) {
        if (aux.polygon != poly) continue;
        const Letter l = auxiliary_letter(poly, aux.label);
        if (l == a || l == b) continue;
        if (crosses_properly(seg, aux.segment(), 1e-9)) return true;
    }
    return false;
}

// Primed letters crossed by a realizing chord of the stretch: a segment from
// the start node to the end node with direction in the open sector, crossing
// `via` (if any) and no other auxiliary edge. Every realizing chord found on
// the sampling grid must agree.
std::vector<Letter> primed_label(const Surface& surface, const Stretch& st) {
    constexpr int kGrid = 24;
    const double sector = surface.spec().half_alpha();
    const PolygonId far = st.via ? other(st.poly) : st.poly;
    const Segment a = node_segment(surface, st.start, st.poly);
    const Segment b_native = node_segment(surface, st.end, far);
    const Vec2 shift = st.via ? surface.identification_offset(st.poly, *st.via) : Vec2{};
    const Segment b{b_native.a - shift, b_native.b - shift};

    std::optional<std::vector<int>> found;
    for (int i = 1; i < kGrid; ++i) {
        for (int j = 1; j < kGrid; ++j) {
            const Vec2 x = a.at(static_cast<double>(i) / kGrid);
            const Vec2 y = b.at(static_cast<double>(j) / kGrid);
            const Vec2 d = y - x;
            const double angle = std::atan2(d.y, d.x);
            if (!(angle > 1e-9 && angle < sector - 1e-9)) continue;
            const Segment chord{x, y};
            std::vector<PrimedHit> hits;
            if (st.via) {
                const Edge& e = surface.edge(st.poly, *st.via);
                const auto h = intersect(chord, e.segment());
                if (!h || !crosses_properly(chord, e.segment(), 1e-6)) continue;
                const Segment first{x, chord.at(h->u)};
                const Segment second{chord.at(h->u) + shift, y + shift};
                if (crosses_other_auxiliary(surface, st.poly, first, st.start, st.end)) continue;
                if (crosses_other_auxiliary(surface, far, second, st.start, st.end)) continue;
                primed_hits(surface, st.poly, first, false, 0.0, h->u, hits);
                primed_hits(surface, far, second, false, h->u, 1.0, hits);
            } else {
                bool leaves = false;
                for (const Edge& e : surface.edges()) {
                    if (e.polygon == st.poly && crosses_properly(chord, e.segment(), 1e-9)) leaves = true;
                }
                if (leaves || crosses_other_auxiliary(surface, st.poly, chord, st.start, st.end)) continue;
                primed_hits(surface, st.poly, chord, false, 0.0, 1.0, hits);
            }
            std::sort(hits.begin(), hits.end(), [](const PrimedHit& p, const PrimedHit& q) { return p.s < q.s; });
            std::vector<int> labels;
            for (const PrimedHit& h : hits) {
                if (h.s < 1.0 - 1e-9) labels.push_back(h.label);
            }
            if (!found) {
                found = labels;
            } else if (*found != labels) {
                throw Error(ErrorCode::Internal, "realizing chords of one dual arrow cross different primed edges");
            }
        }
    }
    if (!found) throw Error(ErrorCode::Internal, "no realizing chord for a dual arrow");
    std::vector<Letter> out;
    for (int l : *found) out.push_back(primed_letter(l));
    return out;
}

// A letter of an augmented path, with the index of the original letter it
// came from (-1 for auxiliary letters) and the polygon it is crossed into.
struct Tagged {
    Letter letter;
    long position;
    PolygonId into;
};

// Splits a linear augmented sequence into stretches between consecutive
// nodes. Calls `emit(first_node_index, second_node_index, via_index)`.
template <class F>
void for_each_stretch(const Surface& surface, const std::vector<Tagged>& seq, F&& emit) {
    long prev = -1;
    std::optional<std::size_t> via;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (is_node(surface, seq[i].letter)) {
            if (prev >= 0) emit(static_cast<std::size_t>(prev), i, via);
            prev = static_cast<long>(i);
            via.reset();
        } else if (prev >= 0) {
            if (via) throw Error(ErrorCode::Internal, "two original letters between consecutive nodes");
            via = i;
        }
    }
}

Stretch make_stretch(const std::vector<Tagged>& seq, std::size_t a, std::size_t b, std::optional<std::size_t> via) {
    Stretch st;
    st.start = seq[a].letter;
    st.end = seq[b].letter;
    st.poly = seq[a].into;
    if (via) {
        st.via = seq[*via].letter.label;
        // The stretch crosses `via` out of the polygon it started in.
        st.poly = other(seq[*via].into);
    }
    return st;
}

} // namespace

TransitionDiagram build_arrows_diagram(const Surface& surface) {
    TransitionDiagram d;
    d.stage = DiagramStage::Arrows;
    d.n = surface.n();
    for (int k = 1; k <= surface.n(); ++k) d.nodes.push_back(original_letter(k));
    const double sector = surface.spec().half_alpha();
    for (PolygonId poly : {PolygonId::Upper, PolygonId::Lower}) {
        for (int i = 1; i <= surface.n(); ++i) {
            for (int j = 1; j <= surface.n(); ++j) {
                if (i == j) continue;
                if (cone_meets_sector(surface.edge(poly, i), surface.edge(poly, j), sector)) {
                    d.arrows.push_back({original_letter(i), original_letter(j), poly, {}, std::nullopt});
                }
            }
        }
    }
    return d;
}

PipelineDiagrams build_pipeline_diagrams(const Surface& surface) {
    return build_pipeline_diagrams(surface, build_arrows_diagram(surface));
}

PipelineDiagrams build_pipeline_diagrams(const Surface& surface, const TransitionDiagram& arrows) {
    PipelineDiagrams out;
    out.augmented = arrows;
    out.augmented.stage = DiagramStage::Augmented;
    for (DiagramArrow& a : out.augmented.arrows) {
        a.label = separating_auxiliaries(surface, a.polygon, a.from.label, a.to.label);
    }

    out.dual.stage = DiagramStage::Dual;
    out.dual.n = surface.n();
    out.dual.nodes.push_back(original_letter(1));
    out.dual.nodes.push_back(original_letter(surface.slanted_sector_edge()));
    for (const Edge& aux : surface.auxiliary()) out.dual.nodes.push_back(auxiliary_letter(aux.polygon, aux.label));

    std::vector<Stretch> stretches;
    for (const DiagramArrow& first : out.augmented.arrows) {
        for (const DiagramArrow& second : out.augmented.arrows) {
            if (second.from != first.to || second.polygon == first.polygon) continue;
            // The fragment s0 [aux] s1 [aux] s2, with s0 crossed into `first.polygon`.
            std::vector<Tagged> seq;
            seq.push_back({first.from, 0, first.polygon});
            for (const Letter& l : first.label) seq.push_back({l, -1, first.polygon});
            seq.push_back({first.to, 1, second.polygon});
            for (const Letter& l : second.label) seq.push_back({l, -1, second.polygon});
            seq.push_back({second.to, 2, other(second.polygon)});
            for_each_stretch(surface, seq, [&](std::size_t a, std::size_t b, std::optional<std::size_t> via) {
                const Stretch st = make_stretch(seq, a, b, via);
                if (!out.dual.find(st.start, st.end, st.via)) {
                    DiagramArrow arrow{st.start, st.end, st.poly, {}, st.via};
                    if (st.via) arrow.label.push_back(original_letter(*st.via));
                    out.dual.arrows.push_back(arrow);
                    stretches.push_back(st);
                }
            });
        }
    }

    out.primed = out.dual;
    out.primed.stage = DiagramStage::Primed;
    for (std::size_t i = 0; i < stretches.size(); ++i) out.primed.arrows[i].label = primed_label(surface, stretches[i]);
    return out;
}

std::optional<std::vector<PolygonId>> walk_parities(const TransitionDiagram& arrows, const Word& word) {
    const std::size_t len = word.letters.size();
    const bool cyclic = word.topology == Topology::Cyclic;
    if (len == 0) return std::vector<PolygonId>{};
    if (cyclic && len % 2 == 1) return std::nullopt;
    const std::size_t pairs = cyclic ? len : len - 1;
    for (PolygonId first : {PolygonId::Upper, PolygonId::Lower}) {
        std::vector<PolygonId> par(len);
        bool ok = true;
        for (std::size_t k = 0; k < len; ++k) par[k] = k % 2 == 0 ? first : other(first);
        for (std::size_t k = 0; k < pairs && ok; ++k) {
            ok = arrows.find_arrow(word.letters[k], word.letters[(k + 1) % len], par[k]) != nullptr;
        }
        if (ok) return par;
    }
    return std::nullopt;
}

int DiagramDeriver::coincident_primed(int label) const {
    for (const PrimedEdge& pe : surface_.primed()) {
        if (pe.coincident_original == label) return pe.label;
    }
    throw Error(ErrorCode::Internal, "node edge without a coincident primed edge");
}

DiagramDeriver::DiagramDeriver(const Surface& surface)
    : surface_(surface), arrows_(build_arrows_diagram(surface)), pipeline_(build_pipeline_diagrams(surface, arrows_)) {}

DiagramDerivation DiagramDeriver::run(const Word& word) const {
    const int n = surface_.n();
    for (int l : word.letters) {
        if (l < 1 || l > n) throw Error(ErrorCode::InvalidArgument, "letter outside the edge alphabet");
    }
    const auto parities = walk_parities(arrows_, word);
    if (!parities) throw Error(ErrorCode::InvalidPath, "word is not a walk on the arrows diagram: " + word_name(n, word.letters));

    const std::size_t len = word.letters.size();
    const bool cyclic = word.topology == Topology::Cyclic;
    DiagramDerivation out;
    out.derived.topology = word.topology;
    if (len == 0) return out;

    // Augmented path; a cyclic word contributes its closing arrow too.
    std::vector<Tagged> seq;
    for (std::size_t k = 0; k < len; ++k) {
        const int from = word.letters[k];
        seq.push_back({original_letter(from), static_cast<long>(k), (*parities)[k]});
        if (k + 1 == len && !cyclic) break;
        const int to = word.letters[(k + 1) % len];
        const DiagramArrow* a = pipeline_.augmented.find_arrow(from, to, (*parities)[k]);
        for (const Letter& l : a->label) seq.push_back({l, -1, (*parities)[k]});
    }
    for (const Tagged& t : seq) out.augmented.push_back(t.letter);

    if (cyclic) {
        // Start at a node and close the walk by repeating it, so every
        // stretch, including the one across the seam, is seen once.
        const auto node = std::find_if(seq.begin(), seq.end(), [&](const Tagged& t) { return is_node(surface_, t.letter); });
        if (node == seq.end()) throw Error(ErrorCode::Internal, "cyclic walk crosses no node");
        std::rotate(seq.begin(), node, seq.end());
        seq.push_back(seq.front());
    }

    std::vector<std::pair<long, std::vector<int>>> derived; // (position, letters)
    bool first_node = true;
    for_each_stretch(surface_, seq, [&](std::size_t a, std::size_t b, std::optional<std::size_t> via) {
        const Stretch st = make_stretch(seq, a, b, via);
        const DiagramArrow* arrow = pipeline_.primed.find(st.start, st.end, st.via);
        if (!arrow) throw Error(ErrorCode::Internal, "stretch missing from the primed diagram");

        auto node_out = [&](std::size_t idx) {
            const Letter& l = seq[idx].letter;
            out.dual.push_back(l);
            if (l.kind == LetterKind::Original) {
                out.primed.push_back(primed_letter(coincident_primed(l.label)));
            } else {
                out.primed.push_back(l);
            }
        };
        if (first_node) {
            node_out(a);
            first_node = false;
        }
        if (via) out.dual.push_back(seq[*via].letter);
        std::vector<int> labels;
        for (const Letter& l : arrow->label) {
            out.primed.push_back(l);
            labels.push_back(l.label);
        }
        if (!labels.empty()) {
            if (!via) throw Error(ErrorCode::Internal, "primed letter without an original letter to derive from");
            derived.push_back({seq[*via].position, labels});
        }
        if (!(cyclic && b + 1 == seq.size())) node_out(b);
    });

    // Node edges coincide with their own primed images.
    const std::size_t distinct = cyclic ? seq.size() - 1 : seq.size();
    for (std::size_t i = 0; i < distinct; ++i) {
        const Letter& l = seq[i].letter;
        if (l.kind == LetterKind::Original && is_node(surface_, l)) {
            derived.push_back({seq[i].position, {coincident_primed(l.label)}});
        }
    }

    // A window keeps only letters whose status is defined.
    std::stable_sort(derived.begin(), derived.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [pos, labels] : derived) {
        if (!cyclic && (pos < 1 || pos > static_cast<long>(len) - 2)) continue;
        out.derived.letters.insert(out.derived.letters.end(), labels.begin(), labels.end());
    }
    return out;
}

Word derive_via_diagrams(const Word& word, const Surface& surface) { return DiagramDeriver(surface).derive(word); }

int vertical_arrow_sets(const PipelineDiagrams& pipeline) {
    std::set<std::pair<Letter, Letter>> pairs;
    for (const DiagramArrow& a : pipeline.primed.arrows) {
        if (a.label.empty() || a.from.kind != LetterKind::Auxiliary || a.to.kind != LetterKind::Auxiliary) continue;
        pairs.insert(std::minmax(a.from, a.to));
    }
    return static_cast<int>(pairs.size());
}

std::vector<Word> closed_walks(const TransitionDiagram& arrows, int length) {
    std::vector<Word> out;
    if (length < 2 || length % 2 == 1) return out;
    const int n = arrows.n;
    std::set<std::vector<int>> seen;
    std::vector<int> path;
    auto extend = [&](auto&& self, PolygonId parity) -> void {
        if (static_cast<int>(path.size()) == length) {
            if (!arrows.find_arrow(path.back(), path.front(), parity)) return;
            std::vector<int> key = least_rotation(path);
            if (seen.insert(key).second) out.push_back({path, Topology::Cyclic});
            return;
        }
        for (int next = 1; next <= n; ++next) {
            if (!arrows.find_arrow(path.back(), next, parity)) continue;
            path.push_back(next);
            self(self, other(parity));
            path.pop_back();
        }
    };
    // Parity of the arrow leaving path[k]; the closing arrow leaves the last letter.
    for (int start = 1; start <= n; ++start) {
        for (PolygonId parity : {PolygonId::Upper, PolygonId::Lower}) {
            path = {start};
            extend(extend, parity);
        }
    }
    return out;
}

EquivalenceReport sandwich_equivalence_check(const Surface& surface, int length_bound, std::uint64_t random_walks,
                                             int random_length, std::uint64_t seed) {
    const DiagramDeriver deriver(surface);
    EquivalenceReport rep;
    rep.n = surface.n();
    rep.length_bound = length_bound;

    auto check = [&](const Word& w) {
        const Word got = deriver.derive(w);
        const Word want = ksl(w);
        if (!same_word(got, want)) {
            if (!rep.counterexample) rep.counterexample = w;
            ++rep.mismatches;
        }
    };

    for (int len = 2; len <= length_bound; len += 2) {
        for (const Word& w : closed_walks(deriver.arrows(), len)) {
            check(w);
            ++rep.cyclic_walks;
        }
    }

    const auto& arrows = deriver.arrows().arrows;
    for (const DiagramArrow& a : arrows) {
        for (const DiagramArrow& b : arrows) {
            if (b.from != a.to || b.polygon == a.polygon) continue;
            check({{a.from.label, a.to.label, b.to.label}, Topology::Window});
            ++rep.fragments;
        }
    }

    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < random_walks; ++i) {
        std::uniform_int_distribution<int> len_dist(3, std::max(3, random_length));
        const int len = len_dist(rng);
        const DiagramArrow& start = arrows[std::uniform_int_distribution<std::size_t>(0, arrows.size() - 1)(rng)];
        std::vector<int> letters{start.from.label, start.to.label};
        PolygonId parity = other(start.polygon);
        while (static_cast<int>(letters.size()) < len) {
            std::vector<int> next;
            for (const DiagramArrow& a : arrows) {
                if (a.from.label == letters.back() && a.polygon == parity) next.push_back(a.to.label);
            }
            if (next.empty()) break;
            letters.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
            parity = other(parity);
        }
        check({letters, Topology::Window});
        ++rep.random_walks;
    }
    return rep;
}

Word parse_word(int n, const std::string& text, Topology topology) {
    Word w{{}, topology};
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if ((c == 'S' || c == 's') && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            w.letters.push_back(std::stoi(text.substr(i + 1, j - i - 1)));
            i = j;
        } else if (n <= 26 && std::isupper(static_cast<unsigned char>(c))) {
            w.letters.push_back(c - 'A' + 1);
            ++i;
        } else {
            throw Error(ErrorCode::InvalidArgument, std::string("unrecognized letter '") + c + "' in word");
        }
        if (w.letters.back() < 1 || w.letters.back() > n) {
            throw Error(ErrorCode::InvalidArgument, "letter outside the alphabet of the double " + std::to_string(n) + "-gon");
        }
    }
    return w;
}

} // namespace oddgon
