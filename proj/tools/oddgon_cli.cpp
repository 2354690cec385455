#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddgon/oddgon.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    int n = 5;
    double tol = 1e-9;
    double delta = 0.0;
    std::uint64_t seed = 42;
    int samples = 200;
    std::string out;
    std::string format;
    bool json = false;

    std::string edge = "S1";
    std::string polygon = "upper";
    double t = 0.37;
    std::optional<double> theta;
    std::size_t crossings = 200;

    std::string seq;
    bool cyclic = false;
    std::string method = "ksl";
    std::string stage = "arrows";
    std::string checks;
    std::string action;
    std::string slope;
    double start_x = 0.1;
    double start_y = 0.35;
    bool guide = false;
};

struct Owned {
    char* text = nullptr;
    ~Owned() { oddgon_string_free(text); }
};

struct SurfaceHandle {
    oddgon_surface* ptr = nullptr;
    ~SurfaceHandle() { oddgon_surface_destroy(ptr); }
};

class Failure {
public:
    Failure(oddgon_status s, std::string m) : status(s), message(std::move(m)) {}
    oddgon_status status;
    std::string message;
};

void check(oddgon_status s) {
    if (s != ODDGON_OK) throw Failure(s, oddgon_last_error());
}

const char* status_name(oddgon_status s) {
    switch (s) {
    case ODDGON_OK: return "ok";
    case ODDGON_INVALID_ARGUMENT: return "invalid argument";
    case ODDGON_UNSUPPORTED_SURFACE: return "unsupported surface";
    case ODDGON_CORNER_HIT: return "corner hit";
    case ODDGON_INVALID_PATH: return "invalid path";
    case ODDGON_VERIFICATION_FAILED: return "verification failed";
    case ODDGON_INTERNAL: return "internal error";
    }
    return "error";
}

void emit(const RunConfig& cfg, const std::string& text) {
    const bool newline = text.empty() || text.back() != '\n';
    if (cfg.out.empty()) {
        std::cout << text << (newline ? "\n" : "");
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Failure(ODDGON_INVALID_ARGUMENT, "cannot open '" + cfg.out + "' for writing");
    f << text << (newline ? "\n" : "");
}

std::string format_of(const RunConfig& cfg, const std::string& fallback) {
    if (cfg.json) return "json";
    return cfg.format.empty() ? fallback : cfg.format;
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (fmt == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw CLI::ValidationError("--format", "'" + fmt + "' is not one of: " + list);
}

SurfaceHandle make_surface(const RunConfig& cfg) {
    SurfaceHandle h;
    check(oddgon_surface_create(cfg.n, &h.ptr));
    return h;
}

oddgon_trace_params trace_params(const RunConfig& cfg) {
    if (!cfg.theta) throw CLI::RequiredError("--theta");
    return {cfg.edge.c_str(), cfg.polygon.c_str(), cfg.t, *cfg.theta, cfg.crossings, cfg.delta};
}

// Array-of-strings field of a JSON document, space separated.
std::string letters_line(const std::string& json_text, const char* key) {
    const nlohmann::json doc = nlohmann::json::parse(json_text);
    std::string out;
    for (const auto& l : doc.at(key)) out += (out.empty() ? "" : " ") + l.get<std::string>();
    return out;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "Polygon size (odd, >= 5)")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "Numeric tolerance")->capture_default_str();
    sub->add_option("--delta", cfg.delta, "Corner tolerance (0 = library default)");
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Sample count for randomized checks")->capture_default_str();
    sub->add_option("--out", cfg.out, "Write output to this path instead of stdout");
    sub->add_option("--format", cfg.format, "Output format: json, dot, svg or text");
    sub->add_flag("--json", cfg.json, "Shorthand for --format json");
}

void add_addressing(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--edge", cfg.edge, "Start edge, S1..Sn or a letter alias")->capture_default_str();
    sub->add_option("--polygon", cfg.polygon, "Start polygon: upper or lower")->capture_default_str();
    sub->add_option("--t", cfg.t, "Position along the edge, in (0, 1)")->capture_default_str();
    sub->add_option("--theta", cfg.theta, "Direction in radians");
    sub->add_option("--crossings", cfg.crossings, "Number of edge crossings")->capture_default_str();
}

int run(CLI::App& app, const RunConfig& cfg) {
    const std::string cmd = app.get_subcommands().front()->get_name();

    if (cmd == "surface") {
        const std::string fmt = format_of(cfg, "json");
        require_format(fmt, {"json", "svg"});
        SurfaceHandle s = make_surface(cfg);
        Owned o;
        check(fmt == "svg" ? oddgon_render_svg(s.ptr, nullptr, 0, &o.text) : oddgon_surface_json(s.ptr, &o.text));
        emit(cfg, o.text);
        return 0;
    }
    if (cmd == "trace" || cmd == "derive-geometric") {
        const std::string fmt = format_of(cfg, cmd == "trace" ? "text" : "json");
        require_format(fmt, cmd == "trace" ? std::initializer_list<const char*>{"json", "text", "svg"}
                                           : std::initializer_list<const char*>{"json", "text"});
        SurfaceHandle s = make_surface(cfg);
        const oddgon_trace_params p = trace_params(cfg);
        Owned o;
        if (fmt == "svg") {
            check(oddgon_render_svg(s.ptr, &p, 0, &o.text));
            emit(cfg, o.text);
            return 0;
        }
        check(cmd == "trace" ? oddgon_trace_json(s.ptr, &p, &o.text) : oddgon_derive_geometric_json(s.ptr, &p, &o.text));
        if (fmt == "json") {
            emit(cfg, o.text);
        } else {
            emit(cfg, letters_line(o.text, cmd == "trace" ? "letters" : "derived_letters"));
        }
        return 0;
    }
    if (cmd == "derive") {
        const std::string fmt = format_of(cfg, "text");
        require_format(fmt, {"json", "text"});
        SurfaceHandle s = make_surface(cfg);
        Owned o;
        check(oddgon_derive_json(s.ptr, cfg.seq.c_str(), cfg.cyclic, cfg.method.c_str(), &o.text));
        if (fmt == "json") {
            emit(cfg, o.text);
        } else {
            emit(cfg, nlohmann::json::parse(o.text).at("letters").get<std::string>());
        }
        return 0;
    }
    if (cmd == "diagram") {
        RunConfig local = cfg;
        // `--out json|dot` names a format here when no --format is given.
        if (local.format.empty() && !local.json && (local.out == "json" || local.out == "dot")) {
            local.format = local.out;
            local.out.clear();
        }
        const std::string fmt = format_of(local, "json");
        require_format(fmt, {"json", "dot"});
        SurfaceHandle s = make_surface(local);
        Owned o;
        check(oddgon_diagram(s.ptr, local.stage.c_str(), fmt.c_str(), &o.text));
        emit(local, o.text);
        return 0;
    }
    if (cmd == "guide") {
        const std::string fmt = format_of(cfg, "json");
        require_format(fmt, {"json", "svg"});
        SurfaceHandle s = make_surface(cfg);
        Owned o;
        check(fmt == "svg" ? oddgon_render_svg(s.ptr, nullptr, 1, &o.text) : oddgon_guide_json(s.ptr, cfg.tol, &o.text));
        emit(cfg, o.text);
        return 0;
    }
    if (cmd == "verify") {
        require_format(format_of(cfg, "json"), {"json"});
        const oddgon_verify_params p{cfg.n, cfg.tol, cfg.checks.c_str(), cfg.seed, cfg.samples};
        Owned o;
        const oddgon_status st = oddgon_verify_json(&p, &o.text);
        if (st != ODDGON_OK && st != ODDGON_VERIFICATION_FAILED) check(st);
        emit(cfg, o.text);
        if (st == ODDGON_VERIFICATION_FAILED) {
            std::cerr << "oddgon: verification failed\n";
            return kExitFailure;
        }
        return 0;
    }
    if (cmd == "torus") {
        require_format(format_of(cfg, "json"), {"json"});
        oddgon_torus_params p{0, 0, 0.0, cfg.start_x, cfg.start_y, cfg.crossings, cfg.delta};
        if (!cfg.slope.empty()) {
            int num = 0;
            int den = 0;
            char tail = 0;
            if (std::sscanf(cfg.slope.c_str(), "%d/%d%c", &num, &den, &tail) != 2 || den <= 0 || num < 0) {
                throw CLI::ValidationError("--slope", "expected p/q with p >= 0 and q > 0, got '" + cfg.slope + "'");
            }
            p.slope_p = num;
            p.slope_q = den;
            // One period suffices for a cyclic word; keep at least that many.
            if (p.crossings < static_cast<std::size_t>(num + den)) p.crossings = static_cast<std::size_t>(num + den);
        } else if (cfg.theta) {
            p.theta = *cfg.theta;
        } else {
            throw CLI::RequiredError("--slope or --theta");
        }
        Owned o;
        check(oddgon_torus_json(cfg.action.c_str(), &p, &o.text));
        emit(cfg, o.text);
        return 0;
    }
    if (cmd == "render") {
        require_format(format_of(cfg, "svg"), {"svg"});
        SurfaceHandle s = make_surface(cfg);
        Owned o;
        if (cfg.theta) {
            const oddgon_trace_params p = trace_params(cfg);
            check(oddgon_render_svg(s.ptr, &p, cfg.guide, &o.text));
        } else {
            check(oddgon_render_svg(s.ptr, nullptr, cfg.guide, &o.text));
        }
        emit(cfg, o.text);
        return 0;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cutting sequences and derivation on double odd-gon surfaces"};
    app.set_version_flag("--version", std::string(oddgon_version()));
    app.require_subcommand(1);
    RunConfig cfg;

    auto* surface = app.add_subcommand("surface", "Surface geometry as JSON (or SVG)");
    add_common(surface, cfg);

    auto* trace = app.add_subcommand("trace", "Trace a trajectory and print its cutting sequence");
    add_common(trace, cfg);
    add_addressing(trace, cfg);

    auto* dgeo = app.add_subcommand("derive-geometric", "Derive a traced trajectory through the primed edges");
    add_common(dgeo, cfg);
    add_addressing(dgeo, cfg);

    auto* derive = app.add_subcommand("derive", "Derive a cutting sequence combinatorially");
    add_common(derive, cfg);
    derive->add_option("--seq", cfg.seq, "Sequence, e.g. BECE or 'S2 S5 S3 S5'")->required();
    derive->add_flag("--cyclic", cfg.cyclic, "Treat the sequence as cyclic");
    derive->add_option("--method", cfg.method, "ksl or diagram")
        ->check(CLI::IsMember({"ksl", "diagram"}))
        ->capture_default_str();

    auto* diagram = app.add_subcommand("diagram", "Transition diagram at one pipeline stage");
    add_common(diagram, cfg);
    diagram->add_option("--stage", cfg.stage, "arrows, augmented, dual or primed")
        ->check(CLI::IsMember({"arrows", "augmented", "dual", "primed"}))
        ->capture_default_str();

    auto* guide = app.add_subcommand("guide", "Vertex guide, cylinders and reassembly residuals");
    add_common(guide, cfg);

    auto* verify = app.add_subcommand("verify", "Run the numeric and combinatorial checks");
    add_common(verify, cfg);
    verify->add_option("--checks", cfg.checks,
                       "Comma-separated subset of identities,moduli,reassembly,equivalence,geometric,torus");

    auto* torus = app.add_subcommand("torus", "Square torus baseline");
    add_common(torus, cfg);
    torus->add_option("action", cfg.action, "trace or derive")->required()->check(CLI::IsMember({"trace", "derive"}));
    torus->add_option("--slope", cfg.slope, "Rational slope p/q");
    torus->add_option("--theta", cfg.theta, "Direction in radians, [0, pi/2)");
    torus->add_option("--start-x", cfg.start_x, "Start x in the unit square")->capture_default_str();
    torus->add_option("--start-y", cfg.start_y, "Start y in the unit square")->capture_default_str();
    torus->add_option("--crossings", cfg.crossings, "Number of crossings")->capture_default_str();

    auto* render = app.add_subcommand("render", "SVG of the polygons with an optional trajectory and guide");
    add_common(render, cfg);
    add_addressing(render, cfg);
    render->add_flag("--guide", cfg.guide, "Overlay the vertex guide");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return run(app, cfg);
    } catch (const CLI::ParseError& e) {
        std::cerr << "oddgon: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Failure& f) {
        std::cerr << "oddgon: " << f.message << " [" << status_name(f.status) << "]\n";
        return f.status == ODDGON_INVALID_ARGUMENT || f.status == ODDGON_UNSUPPORTED_SURFACE ? kExitUsage : kExitFailure;
    }
}
