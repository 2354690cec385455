#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oddgon/cylinder.hpp"
#include "oddgon/torus.hpp"

using namespace oddgon;

namespace {

TorusWord cyc(const char* s) { return {s, Topology::Cyclic}; }
TorusWord win(const char* s) { return {s, Topology::Window}; }

} // namespace

TEST_CASE("slope 1/3 cuts ABBB") {
    const TorusTrajectory t = torus_trace_slope({0.1, 0.35}, 1, 3, 12);
    REQUIRE(t.period.has_value());
    CHECK(*t.period == 4);
    REQUIRE(t.cyclic().has_value());
    CHECK(same_torus_word(*t.cyclic(), cyc("ABBB")));
}

TEST_CASE("slope 3 cuts AAAB, not ABBB") {
    const TorusTrajectory t = torus_trace_slope({0.1, 0.35}, 3, 1, 12);
    CHECK(same_torus_word(*t.cyclic(), cyc("AAAB")));
}

TEST_CASE("geometric derivation of ABBB is ABB") {
    const TorusTrajectory t = torus_trace_slope({0.1, 0.35}, 1, 3, 12);
    CHECK(same_torus_word(torus_derive_geometric(t), cyc("ABB")));
}

TEST_CASE("rule on cyclic words") {
    CHECK(same_torus_word(torus_derive_rule(cyc("ABBB")), cyc("ABB")));
    CHECK(same_torus_word(torus_derive_rule(cyc("AB")), cyc("A")));
    CHECK(same_torus_word(torus_derive_rule(cyc("AA")), cyc("AA")));
    CHECK(same_torus_word(torus_derive_rule(cyc("BBAB")), cyc("ABB")));
    CHECK(same_torus_word(torus_derive_rule(cyc("ABAB")), cyc("AA")));
    CHECK(same_torus_word(torus_derive_rule(cyc("BBB")), cyc("BBB")));
}

TEST_CASE("rule on windows keeps first A to last A") {
    CHECK(torus_derive_rule(win("BBABBABBBAB")).letters == "ABABBA");
    CHECK(torus_derive_rule(win("BBAB")).letters.empty());
    CHECK_THROWS_AS((void)torus_derive_rule(win("ABC")), Error);
}

TEST_CASE("AB derives to A geometrically") {
    const TorusTrajectory t = torus_trace_slope({0.1, 0.35}, 1, 1, 12);
    CHECK(same_torus_word(*t.cyclic(), cyc("AB")));
    CHECK(same_torus_word(torus_derive_geometric(t), cyc("A")));
}

TEST_CASE("slope 1/2 derives to slope 1") {
    const TorusTrajectory t = torus_trace_slope({0.1, 0.35}, 1, 2, 12);
    CHECK(same_torus_word(*t.cyclic(), cyc("ABB")));
    CHECK(same_torus_word(torus_derive_geometric(t), cyc("AB")));
    CHECK(same_torus_word(torus_derive_rule(*t.cyclic()), cyc("AB")));
}

TEST_CASE("rule and geometry agree on generic lines") {
    for (int i = 1; i < 40; ++i) {
        const double theta = (std::numbers::pi / 4) * i / 40.0 + 1e-4;
        const TorusTrajectory t = torus_trace({0.123, 0.456}, theta, 50);
        CHECK(same_torus_word(torus_derive_geometric(t), torus_derive_rule(t.window())));
    }
}

TEST_CASE("torus input validation") {
    CHECK_THROWS_AS((void)torus_trace({0.1, 0.1}, std::numbers::pi / 2, 10), Error);
    CHECK_THROWS_AS((void)torus_trace({0.1, 0.1}, -0.1, 10), Error);
    CHECK_THROWS_AS((void)torus_trace_slope({0.1, 0.1}, 1, 0, 10), Error);
    CHECK_THROWS_AS((void)torus_derive_geometric(torus_trace({0.1, 0.2}, 1.0, 10)), Error);
    CHECK_THROWS_AS((void)torus_trace({0.5, 0.5}, std::numbers::pi / 4, 10), CornerHit);
}

TEST_CASE("the square uses the unit shear, not 2 cot(pi/4)") {
    // Derivation maps slope p/q to p/(q - p): the matrix entry is 1, while the
    // odd-gon formula evaluated at n = 4 would give 2.
    CHECK(2.0 / std::tan(std::numbers::pi / 4) == doctest::Approx(2.0));
    const TorusTrajectory t = torus_trace_slope({0.1, 0.35}, 2, 7, 20);
    const TorusTrajectory image = torus_trace_slope({0.1, 0.35}, 2, 5, 20);
    CHECK(same_torus_word(torus_derive_geometric(t), *image.cyclic()));
}
