#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oddgon/cylinder.hpp"
#include "oddgon/derivation.hpp"
#include "oddgon/flow.hpp"
#include "oddgon/torus.hpp"
#include "oddgon/verify.hpp"

using namespace oddgon;

namespace {

// Small seeded generators; every property runs a fixed number of draws.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Word word(int n, int min_len, int max_len, Topology topology) {
        Word w{{}, topology};
        const int len = integer(min_len, max_len);
        for (int i = 0; i < len; ++i) w.letters.push_back(integer(1, n));
        return w;
    }

    // Random walk on the arrows diagram.
    Word walk(const TransitionDiagram& d, int len) {
        Word w{{}, Topology::Window};
        const DiagramArrow* a = &d.arrows[static_cast<std::size_t>(integer(0, static_cast<int>(d.arrows.size()) - 1))];
        w.letters.push_back(a->from.label);
        for (int i = 1; i < len; ++i) {
            w.letters.push_back(a->to.label);
            std::vector<const DiagramArrow*> next;
            for (const DiagramArrow& b : d.arrows) {
                if (b.from == a->to && b.polygon != a->polygon) next.push_back(&b);
            }
            if (next.empty()) break;
            a = next[static_cast<std::size_t>(integer(0, static_cast<int>(next.size()) - 1))];
        }
        return w;
    }

    struct Start {
        PolygonId polygon;
        int label;
        double t;
        double theta;
    };
    Start start(int n, double theta_lo, double theta_hi) {
        return {coin() ? PolygonId::Upper : PolygonId::Lower, integer(1, n), uniform(0.02, 0.98),
                uniform(theta_lo, theta_hi)};
    }

private:
    std::mt19937_64 rng_;
};

std::vector<int> rotate_by(const std::vector<int>& w, std::size_t k) {
    std::vector<int> out(w.begin() + static_cast<long>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
    return out;
}

bool is_subsequence(const std::vector<int>& small, const std::vector<int>& big) {
    std::size_t j = 0;
    for (int x : big) {
        if (j < small.size() && small[j] == x) ++j;
    }
    return j == small.size();
}

} // namespace

TEST_CASE("property: ksl keeps exactly the sandwiched window positions") {
    Gen g(101);
    for (int iter = 0; iter < 500; ++iter) {
        const Word w = g.word(5, 3, 25, Topology::Window);
        std::vector<int> expected;
        for (std::size_t i = 1; i + 1 < w.letters.size(); ++i) {
            if (w.letters[i - 1] == w.letters[i + 1]) expected.push_back(w.letters[i]);
        }
        CHECK(ksl(w).letters == expected);
    }
}

TEST_CASE("property: cyclic ksl commutes with rotation") {
    Gen g(102);
    for (int iter = 0; iter < 500; ++iter) {
        const Word w = g.word(7, 3, 20, Topology::Cyclic);
        const std::size_t k = static_cast<std::size_t>(g.integer(0, static_cast<int>(w.letters.size()) - 1));
        const Word r{rotate_by(w.letters, k), Topology::Cyclic};
        CHECK(same_word(ksl(w), ksl(r)));
        CHECK(is_subsequence(ksl(w).letters, w.letters));
        CHECK(ksl(w).letters.size() <= w.letters.size());
    }
}

TEST_CASE("property: diagram derivation equals ksl on random walks") {
    Gen g(103);
    for (int n : {5, 7, 9}) {
        const Surface s = Surface::build(n);
        const DiagramDeriver d(s);
        for (int iter = 0; iter < 300; ++iter) {
            const Word w = g.walk(d.arrows(), g.integer(3, 30));
            CHECK_MESSAGE(d.derive(w) == ksl(w), "n=" << n << " " << word_name(n, w.letters));
        }
    }
}

TEST_CASE("property: traced sequences are alternating walks") {
    Gen g(104);
    for (int n : {5, 7, 9}) {
        const Surface s = Surface::build(n);
        const TransitionDiagram arrows = build_arrows_diagram(s);
        for (int iter = 0; iter < 60; ++iter) {
            const auto st = g.start(n, 1e-4, std::numbers::pi / n - 1e-4);
            try {
                const Trajectory t = trace_from_edge(s, st.polygon, st.label, st.t, st.theta, 80);
                const auto par = walk_parities(arrows, {t.letters(), Topology::Window});
                REQUIRE(par.has_value());
                for (std::size_t i = 1; i < par->size(); ++i) CHECK((*par)[i] != (*par)[i - 1]);
            } catch (const CornerHit&) {
            }
        }
    }
}

TEST_CASE("property: periodic orbits have even period") {
    // Rational-slope directions on the pentagon: the directions of saddle
    // connections are dense, so look for orbits among the periodic ones found.
    const Surface s = Surface::build(5);
    const TransitionDiagram arrows = build_arrows_diagram(s);
    int periodic = 0;
    for (int i = 1; i < 200; ++i) {
        const double theta = (std::numbers::pi / 5) * i / 200.0;
        try {
            const Trajectory t = trace_from_edge(s, PolygonId::Upper, 2, 0.5, theta, 400);
            if (!t.periodic) continue;
            ++periodic;
            CHECK(*t.period % 2 == 0);
            CHECK(walk_parities(arrows, {*t.cyclic_word(), Topology::Cyclic}).has_value());
        } catch (const CornerHit&) {
        }
    }
    CHECK(periodic > 0);
}

TEST_CASE("property: geometric derivation equals windowed ksl") {
    for (int n : {5, 7, 9}) {
        const AgreementReport r = check_geometric_agreement(Surface::build(n), 40, 60, 105);
        CHECK_MESSAGE(r.mismatches == 0, "n=" << n << " " << r.counterexample.value_or(""));
    }
}

TEST_CASE("property: geometric derivation in any direction") {
    Gen g(106);
    const Surface s = Surface::build(5);
    for (int iter = 0; iter < 40; ++iter) {
        const auto st = g.start(5, 0.0, 2 * std::numbers::pi);
        try {
            const Trajectory t = trace_from_edge(s, st.polygon, st.label, st.t, st.theta, 60);
            const DerivedTrajectory d = derive_geometric_any(s, t);
            CHECK(d.interior == ksl({t.letters(), Topology::Window}).letters);
        } catch (const CornerHit&) {
        }
    }
}

TEST_CASE("property: normalization round trip") {
    Gen g(107);
    for (int n : {5, 7, 9, 11}) {
        const Surface s = Surface::build(n);
        std::vector<int> all;
        for (int k = 1; k <= n; ++k) all.push_back(k);
        for (int iter = 0; iter < 50; ++iter) {
            const Normalization z = normalize_direction(g.uniform(0.0, 2 * std::numbers::pi), s);
            CHECK(z.theta >= 0.0);
            CHECK(z.theta < std::numbers::pi / n);
            CHECK(z.inverse().relabel(z.relabel(all)) == all);
            std::vector<int> sorted = z.relabel(all);
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == all);
        }
    }
}

TEST_CASE("property: shear and flip are invertible on the surface") {
    Gen g(108);
    for (int n : {5, 7}) {
        const Surface s = Surface::build(n);
        for (int iter = 0; iter < 100; ++iter) {
            const PolygonId poly = g.coin() ? PolygonId::Upper : PolygonId::Lower;
            const SurfacePoint q = s.point_on_edge(poly, g.integer(1, n), g.uniform(0.05, 0.95));
            const Vec2 inside = q.p + (s.center(poly) - q.p) * g.uniform(0.05, 0.95);
            const SurfacePoint p{poly, inside};
            const SurfacePoint back = s.unshear(s.shear(p));
            CHECK(back.polygon == p.polygon);
            CHECK(distance(back.p, p.p) < 1e-9);
            const SurfacePoint ff = s.flip(s.flip(p));
            CHECK(distance(ff.p, p.p) < 1e-12);
        }
    }
}

TEST_CASE("property: identities on random arguments") {
    Gen g(109);
    for (int iter = 0; iter < 1000; ++iter) {
        const double theta = g.uniform(0.01, std::numbers::pi - 0.01);
        const int k = g.integer(1, 12);
        CHECK(telescoping_identity(theta, k).residual() < 1e-10);
        CHECK(identity_sum(theta, k).residual() < 1e-10);
    }
}

TEST_CASE("property: guide levels reproduce vertex heights exactly") {
    for (int n = 5; n <= 21; n += 2) {
        const ReassemblyReport r = verify_reassembly(n, 1e-8);
        CHECK(r.y_identical);
        CHECK(r.max_residual < 1e-8);
    }
}

TEST_CASE("property: torus rule equals torus geometry") {
    Gen g(110);
    for (int iter = 0; iter < 200; ++iter) {
        try {
            const TorusTrajectory t =
                torus_trace({g.uniform(0, 1), g.uniform(0, 1)}, g.uniform(0.001, std::numbers::pi / 4 - 0.001), 60);
            CHECK(same_torus_word(torus_derive_geometric(t), torus_derive_rule(t.window())));
        } catch (const CornerHit&) {
        }
    }
}

TEST_CASE("property: verification reports are deterministic") {
    VerifyConfig c;
    c.n = 5;
    c.checks = {"geometric", "torus", "identities"};
    c.samples = 30;
    c.seed = 9;
    CHECK(run_verification(c).dump() == run_verification(c).dump());
}
