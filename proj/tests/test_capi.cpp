#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "oddgon/oddgon.h"

namespace {

struct Text {
    char* p = nullptr;
    ~Text() { oddgon_string_free(p); }
    std::string str() const { return p ? p : ""; }
    nlohmann::json json() const { return nlohmann::json::parse(str()); }
};

struct Handle {
    oddgon_surface* s = nullptr;
    explicit Handle(int n) { REQUIRE(oddgon_surface_create(n, &s) == ODDGON_OK); }
    ~Handle() { oddgon_surface_destroy(s); }
};

} // namespace

TEST_CASE("c api: version and surface lifetime") {
    CHECK(std::string(oddgon_version()) == "1.0.0");
    Handle h(7);
    CHECK(oddgon_surface_n(h.s) == 7);
    Text t;
    REQUIRE(oddgon_surface_json(h.s, &t.p) == ODDGON_OK);
    const auto j = t.json();
    CHECK(j["n"] == 7);
    CHECK(j["polygons"]["upper"].size() == 7);
    CHECK(j["identifications"].size() == 7);
}

TEST_CASE("c api: unsupported n sets the last error") {
    oddgon_surface* s = nullptr;
    CHECK(oddgon_surface_create(6, &s) == ODDGON_UNSUPPORTED_SURFACE);
    CHECK(s == nullptr);
    CHECK(std::strlen(oddgon_last_error()) > 0);
    Handle ok(5);
    CHECK(std::strlen(oddgon_last_error()) == 0);
}

TEST_CASE("c api: null arguments") {
    CHECK(oddgon_surface_create(5, nullptr) == ODDGON_INVALID_ARGUMENT);
    CHECK(oddgon_surface_json(nullptr, nullptr) == ODDGON_INVALID_ARGUMENT);
    oddgon_surface_destroy(nullptr);
    oddgon_string_free(nullptr);
}

TEST_CASE("c api: derive") {
    Handle h(5);
    Text t;
    REQUIRE(oddgon_derive_json(h.s, "BECE", 1, "ksl", &t.p) == ODDGON_OK);
    auto j = t.json();
    CHECK(j["letters"] == "BC");
    CHECK(j["status"] == "derived");
    CHECK(j["closure"] == "fixed");

    Text d;
    REQUIRE(oddgon_derive_json(h.s, "BECE", 1, "diagram", &d.p) == ODDGON_OK);
    CHECK(d.json()["letters"] == "BC");

    Text e;
    REQUIRE(oddgon_derive_json(h.s, "ABC", 1, "ksl", &e.p) == ODDGON_OK);
    CHECK(e.json()["status"] == "empty");
    CHECK(e.json()["letters"] == "");

    Text f;
    REQUIRE(oddgon_derive_json(h.s, "BC", 1, "ksl", &f.p) == ODDGON_OK);
    CHECK(f.json()["status"] == "fixed");

    Text plain;
    REQUIRE(oddgon_derive_text(h.s, "ABCDCCCCBCBCDE", 0, &plain.p) == ODDGON_OK);
    CHECK(plain.str() == "DCCBCB");
}

TEST_CASE("c api: derive errors map to status codes") {
    Handle h(5);
    Text t;
    CHECK(oddgon_derive_json(h.s, "AC", 1, "diagram", &t.p) == ODDGON_INVALID_PATH);
    CHECK(oddgon_derive_json(h.s, "AXC", 1, "ksl", &t.p) == ODDGON_INVALID_ARGUMENT);
    CHECK(oddgon_derive_json(h.s, "BECE", 1, "magic", &t.p) == ODDGON_INVALID_ARGUMENT);
    CHECK(t.p == nullptr);
}

TEST_CASE("c api: trace and geometric derivation") {
    Handle h(5);
    const oddgon_trace_params p{"B", "upper", 0.5, 0.31415926535897931, 40, 0.0};
    Text t;
    REQUIRE(oddgon_trace_json(h.s, &p, &t.p) == ODDGON_OK);
    const auto j = t.json();
    CHECK(j["periodic"] == true);
    CHECK(j["period"] == 4);
    CHECK(j["letters"].size() == 40);
    CHECK(j["theta"].get<double>() == doctest::Approx(0.31415926535897931));

    Text d;
    REQUIRE(oddgon_derive_geometric_json(h.s, &p, &d.p) == ODDGON_OK);
    const std::string derived = d.json()["derived_cyclic_word"];
    CHECK((derived == "BC" || derived == "CB"));
}

TEST_CASE("c api: corner hit") {
    Handle h(5);
    // From the midpoint of S1 straight at vertex 2.
    const double theta = std::atan2(0.95105651629515357, 1.0 + 0.30901699437494742 - 0.5);
    const oddgon_trace_params p{"S1", nullptr, 0.5, theta, 10, 0.0};
    Text t;
    CHECK(oddgon_trace_json(h.s, &p, &t.p) == ODDGON_CORNER_HIT);
}

TEST_CASE("c api: diagrams") {
    Handle h(5);
    Text j;
    REQUIRE(oddgon_diagram(h.s, "arrows", "json", &j.p) == ODDGON_OK);
    CHECK(j.json()["stage"] == "arrows");
    CHECK(j.json()["arrows"].size() == 8);
    Text dot;
    REQUIRE(oddgon_diagram(h.s, "primed", "dot", &dot.p) == ODDGON_OK);
    CHECK(dot.str().rfind("digraph primed", 0) == 0);
    Text bad;
    CHECK(oddgon_diagram(h.s, "final", "json", &bad.p) == ODDGON_INVALID_ARGUMENT);
}

TEST_CASE("c api: guide") {
    Handle h(9);
    Text t;
    REQUIRE(oddgon_guide_json(h.s, 1e-9, &t.p) == ODDGON_OK);
    const auto j = t.json();
    CHECK(j["reassembly"]["pass"] == true);
    CHECK(j["cylinders"].size() == 4);
}

TEST_CASE("c api: verify") {
    const oddgon_verify_params p{5, 1e-9, "moduli,reassembly", 42, 0};
    Text t;
    REQUIRE(oddgon_verify_json(&p, &t.p) == ODDGON_OK);
    const auto j = t.json();
    CHECK(j["n"] == 5);
    CHECK(j["checks"]["moduli"]["pass"] == true);
    CHECK(j["checks"]["reassembly"].contains("worst_vertex"));
    CHECK(j["tol"].get<double>() == 1e-9);

    const oddgon_verify_params bad{5, 1e-9, "moduli,bogus", 42, 0};
    Text b;
    CHECK(oddgon_verify_json(&bad, &b.p) == ODDGON_INVALID_ARGUMENT);
}

TEST_CASE("c api: torus") {
    const oddgon_torus_params p{1, 3, 0.0, 0.1, 0.35, 8, 0.0};
    Text t;
    REQUIRE(oddgon_torus_json("derive", &p, &t.p) == ODDGON_OK);
    const auto j = t.json();
    const std::string input = j["input"];
    CHECK(input.size() == 4);
    CHECK(std::count(input.begin(), input.end(), 'A') == 1);
    CHECK(j["letters"] == "ABB");
    CHECK(j["agree"] == true);
    Text bad;
    CHECK(oddgon_torus_json("spin", &p, &bad.p) == ODDGON_INVALID_ARGUMENT);
}

TEST_CASE("c api: render") {
    Handle h(5);
    const oddgon_trace_params p{"B", "upper", 0.5, 0.31415926535897931, 8, 0.0};
    Text t;
    REQUIRE(oddgon_render_svg(h.s, &p, 1, &t.p) == ODDGON_OK);
    CHECK(t.str().rfind("<svg", 0) == 0);
    CHECK(t.str().find("<line") != std::string::npos);
    CHECK(t.str().find("<circle") != std::string::npos);
}
