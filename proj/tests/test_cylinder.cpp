#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "oddgon/cylinder.hpp"

using namespace oddgon;
using Big = boost::multiprecision::cpp_bin_float_100;

namespace {

// 2 cot(pi/n), mpmath at 50 digits.
constexpr double kModulus5 = 2.7527638409423471;
constexpr double kModulus7 = 4.1530427931446731;
constexpr double kModulus9 = 5.4949548389092446;
constexpr double kModulus21 = 13.269132999578622;

// M_5 applied to the side points of the double pentagon (mpmath). Rows are
// levels k = 0, 1, 2.
constexpr double kPentagonUR[] = {1.0, 3.9270509831248423, 4.7360679774997897};
constexpr double kPentagonUL[] = {0.0, 2.3090169943749474, 4.7360679774997897};
constexpr double kPentagonLR[] = {2.3090169943749474, 0.0, -2.4270509831248423};
constexpr double kPentagonLL[] = {1.3090169943749474, -1.6180339887498948, -2.4270509831248423};

constexpr double kHeptagonUR[] = {1.0, 4.8704694055762006, 8.6968658111421915, 9.5978346790446106};
constexpr double kHeptagonLL[] = {1.6234898018587335, -2.2469796037174671, -6.073376009283458, -6.9743448771858771};

double big_modulus(int n) {
    const Big half = boost::math::constants::pi<Big>() / n;
    return static_cast<double>(2 * cos(half) / sin(half));
}

// Upper-right variant with 2n + 1 and the sum running to n instead of k.
double variant_upper_right(int n, int k) {
    const double alpha = 2 * std::numbers::pi / n;
    double s = 2 * n + 1;
    for (int i = 1; i <= n; ++i) s += (4 * (k - i) + 3) * std::cos(i * alpha);
    return s;
}

} // namespace

TEST_CASE("trig identities at fixed points") {
    for (int k : {1, 2, 5, 12}) {
        for (double theta : {0.3, 1.0, 2.5}) {
            CHECK(telescoping_identity(theta, k).residual() < 1e-12);
            CHECK(identity_sum(theta, k).residual() < 1e-11);
        }
    }
    // k = 1: cot(t/2) sin t = 1 + cos t.
    const IdentityCheck one = telescoping_identity(0.7, 1);
    CHECK(one.rhs == doctest::Approx(1 + std::cos(0.7)));
}

TEST_CASE("identities reject poles and k < 1") {
    CHECK_THROWS_AS((void)telescoping_identity(0.0, 3), Error);
    CHECK_THROWS_AS((void)telescoping_identity(2 * std::numbers::pi, 3), Error);
    CHECK_THROWS_AS((void)telescoping_identity(1.0, 0), Error);
    CHECK_THROWS_AS((void)identity_sum(1.0, 0), Error);
}

TEST_CASE("cylinder moduli equal 2 cot(pi/n)") {
    const struct {
        int n;
        double m;
    } frozen[] = {{5, kModulus5}, {7, kModulus7}, {9, kModulus9}, {21, kModulus21}};
    for (const auto& f : frozen) {
        const auto cyl = decompose_cylinders(Surface::build(f.n));
        REQUIRE(cyl.size() == static_cast<std::size_t>((f.n - 1) / 2));
        for (const Cylinder& c : cyl) CHECK(std::abs(c.modulus - f.m) < 1e-10);
    }
    for (int n = 5; n <= 21; n += 2) {
        const double ref = big_modulus(n);
        for (const Cylinder& c : decompose_cylinders(Surface::build(n))) CHECK(std::abs(c.modulus - ref) < 1e-10);
    }
}

TEST_CASE("cylinders tile the upper polygon bottom to top") {
    const Surface s = Surface::build(9);
    const auto cyl = decompose_cylinders(s);
    CHECK(cyl.front().y_low == 0.0);
    for (std::size_t i = 1; i < cyl.size(); ++i) CHECK(cyl[i].y_low == doctest::Approx(cyl[i - 1].y_high));
    CHECK(cyl.back().y_high == doctest::Approx(s.level_y(PolygonId::Upper, s.spec().half())));
}

TEST_CASE("shear matrix") {
    const ShearMatrix m = veech_shear(5);
    CHECK(m.a == 1.0);
    CHECK(m.c == 0.0);
    CHECK(m.d == 1.0);
    CHECK(m.b == doctest::Approx(kModulus5).epsilon(1e-15));
    CHECK(m.determinant() == 1.0);
    CHECK(veech_generator(7).determinant() == doctest::Approx(-1.0));
}

TEST_CASE("closed forms agree with the matrix in extended precision") {
    for (int n = 5; n <= 21; n += 2) {
        const Big alpha = 2 * boost::math::constants::pi<Big>() / n;
        for (PointFamily f : {PointFamily::UpperRight, PointFamily::UpperLeft, PointFamily::LowerRight,
                              PointFamily::LowerLeft}) {
            for (int k = 0; k <= (n - 1) / 2; ++k) {
                const Big diff = closed_form::sheared_x<Big>(f, alpha, k) - closed_form::matrix_sheared_x<Big>(f, alpha, k);
                CHECK(abs(diff) < Big("1e-90"));
            }
        }
    }
}

TEST_CASE("the 2n + 1 variant disagrees with the matrix") {
    // Negative control for the corrected formula: it differs by O(1).
    for (int n : {5, 7}) {
        const double good = sheared_x(PointFamily::UpperRight, n, 1);
        CHECK(std::abs(variant_upper_right(n, 1) - good) > 0.5);
    }
}

TEST_CASE("vertex guide: double pentagon") {
    const VertexGuide g = build_vertex_guide(Surface::build(5));
    for (int k = 0; k <= 2; ++k) {
        CHECK(std::abs(g.x(PointFamily::UpperRight, k) - kPentagonUR[k]) < 1e-12);
        CHECK(std::abs(g.x(PointFamily::UpperLeft, k) - kPentagonUL[k]) < 1e-12);
        CHECK(std::abs(g.x(PointFamily::LowerRight, k) - kPentagonLR[k]) < 1e-12);
        CHECK(std::abs(g.x(PointFamily::LowerLeft, k) - kPentagonLL[k]) < 1e-12);
    }
}

TEST_CASE("vertex guide: double heptagon") {
    const VertexGuide g = build_vertex_guide(Surface::build(7));
    for (int k = 0; k <= 3; ++k) {
        CHECK(std::abs(g.x(PointFamily::UpperRight, k) - kHeptagonUR[k]) < 1e-12);
        CHECK(std::abs(g.x(PointFamily::LowerLeft, k) - kHeptagonLL[k]) < 1e-12);
    }
}

TEST_CASE("guide apex: both sides meet") {
    for (int n : {5, 9, 13}) {
        const VertexGuide g = build_vertex_guide(Surface::build(n));
        const int m = (n - 1) / 2;
        CHECK(g.x(PointFamily::UpperRight, m) == doctest::Approx(g.x(PointFamily::UpperLeft, m)).epsilon(1e-12));
        CHECK(g.x(PointFamily::LowerRight, m) == doctest::Approx(g.x(PointFamily::LowerLeft, m)).epsilon(1e-12));
        CHECK(g.max_bar_drift < 1e-12);
    }
}

TEST_CASE("reassembly holds for n = 5..21") {
    for (int n = 5; n <= 21; n += 2) {
        const ReassemblyReport r = verify_reassembly(n, 1e-8);
        CHECK_MESSAGE(r.pass, "n=" << n << " worst " << r.worst_vertex << " residual " << r.max_residual);
        CHECK(r.y_identical);
    }
}

TEST_CASE("closed-form sheared x matches the frozen pentagon values") {
    for (int k = 0; k <= 2; ++k) {
        CHECK(sheared_x(PointFamily::UpperRight, 5, k) == doctest::Approx(kPentagonUR[k]).epsilon(1e-13));
        CHECK(sheared_x(PointFamily::LowerLeft, 5, k) == doctest::Approx(kPentagonLL[k]).epsilon(1e-13));
    }
    CHECK_THROWS_AS((void)sheared_x(PointFamily::UpperRight, 5, 3), Error);
}
