#include "oddgon/oddgon.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "oddgon/serialize.hpp"
#include "oddgon/verify.hpp"

struct oddgon_surface {
    oddgon::Surface surface;
};

namespace {

using namespace oddgon;

thread_local std::string g_last_error;

oddgon_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return ODDGON_INVALID_ARGUMENT;
    case ErrorCode::UnsupportedSurface: return ODDGON_UNSUPPORTED_SURFACE;
    case ErrorCode::CornerHit: return ODDGON_CORNER_HIT;
    case ErrorCode::InvalidPath: return ODDGON_INVALID_PATH;
    case ErrorCode::Internal: return ODDGON_INTERNAL;
    }
    return ODDGON_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs `body`, translating exceptions into status codes and the thread's
// last-error message.
template <class F>
oddgon_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return ODDGON_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ODDGON_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

PolygonId parse_polygon(const char* name) {
    if (!name || !*name) return PolygonId::Upper;
    const std::string s = lower(name);
    if (s == "upper" || s == "u") return PolygonId::Upper;
    if (s == "lower" || s == "l") return PolygonId::Lower;
    throw Error(ErrorCode::InvalidArgument, "polygon must be 'upper' or 'lower', got '" + std::string(name) + "'");
}

int parse_edge(int n, const char* name) {
    require(name && *name, "edge is required");
    const Word w = parse_word(n, name, Topology::Window);
    if (w.letters.size() != 1) throw Error(ErrorCode::InvalidArgument, "edge must be a single label, got '" + std::string(name) + "'");
    return w.letters.front();
}

Trajectory run_trace(const Surface& surface, const oddgon_trace_params& p) {
    require(p.crossings > 0, "crossings must be positive");
    const double delta = p.delta > 0 ? p.delta : Tolerance{}.corner;
    return trace_from_edge(surface, parse_polygon(p.polygon), parse_edge(surface.n(), p.edge), p.t, p.theta,
                           p.crossings, delta);
}

DiagramStage parse_stage(const std::string& s) {
    for (DiagramStage st : {DiagramStage::Arrows, DiagramStage::Augmented, DiagramStage::Dual, DiagramStage::Primed}) {
        if (s == stage_name(st)) return st;
    }
    throw Error(ErrorCode::InvalidArgument, "stage must be arrows, augmented, dual or primed, got '" + s + "'");
}

std::vector<std::string> split_checks(const char* text) {
    std::vector<std::string> out;
    if (!text) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

TorusTrajectory run_torus(const oddgon_torus_params& p) {
    require(p.crossings > 0, "crossings must be positive");
    const Vec2 start{p.start_x, p.start_y};
    const double delta = p.delta > 0 ? p.delta : Tolerance{}.corner;
    if (p.slope_q > 0) return torus_trace_slope(start, p.slope_p, p.slope_q, p.crossings, delta);
    return torus_trace(start, p.theta, p.crossings, delta);
}

} // namespace

extern "C" {

const char* oddgon_version(void) { return "1.0.0"; }

const char* oddgon_last_error(void) { return g_last_error.c_str(); }

void oddgon_string_free(char* s) { std::free(s); }

oddgon_status oddgon_surface_create(int n, oddgon_surface** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        *out = nullptr;
        auto handle = std::unique_ptr<oddgon_surface>(new oddgon_surface{Surface::build(n)});
        *out = handle.release();
        return ODDGON_OK;
    });
}

void oddgon_surface_destroy(oddgon_surface* surface) { delete surface; }

int oddgon_surface_n(const oddgon_surface* surface) { return surface ? surface->surface.n() : 0; }

oddgon_status oddgon_surface_json(const oddgon_surface* surface, char** out_json) {
    return guarded([&] {
        require(surface && out_json, "null argument");
        *out_json = dup_string(to_json(surface->surface).dump(2));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_trace_json(const oddgon_surface* surface, const oddgon_trace_params* params, char** out_json) {
    return guarded([&] {
        require(surface && params && out_json, "null argument");
        const Trajectory traj = run_trace(surface->surface, *params);
        *out_json = dup_string(to_json(surface->surface, traj).dump(2));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_derive_geometric_json(const oddgon_surface* surface, const oddgon_trace_params* params,
                                           char** out_json) {
    return guarded([&] {
        require(surface && params && out_json, "null argument");
        const Trajectory traj = run_trace(surface->surface, *params);
        const DerivedTrajectory derived = derive_geometric_any(surface->surface, traj);
        *out_json = dup_string(to_json(surface->surface, traj, derived).dump(2));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_derive_json(const oddgon_surface* surface, const char* sequence, int cyclic, const char* method,
                                 char** out_json) {
    return guarded([&] {
        require(surface && sequence && out_json, "null argument");
        const std::string m = method && *method ? method : "ksl";
        const int n = surface->surface.n();
        const Word word = parse_word(n, sequence, cyclic ? Topology::Cyclic : Topology::Window);
        Word derived;
        if (m == "ksl") {
            derived = ksl(word);
        } else if (m == "diagram") {
            derived = derive_via_diagrams(word, surface->surface);
        } else {
            throw Error(ErrorCode::InvalidArgument, "method must be 'ksl' or 'diagram', got '" + m + "'");
        }
        Json j = derivation_json(n, word, derived, m);
        if (word.topology == Topology::Cyclic) {
            const Closure closure = derivability_closure(word);
            j["closure"] = closure_status_name(closure.status);
        }
        *out_json = dup_string(j.dump(2));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_derive_text(const oddgon_surface* surface, const char* sequence, int cyclic, char** out_text) {
    return guarded([&] {
        require(surface && sequence && out_text, "null argument");
        const int n = surface->surface.n();
        const Word word = parse_word(n, sequence, cyclic ? Topology::Cyclic : Topology::Window);
        *out_text = dup_string(word_name(n, ksl(word).letters));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_diagram(const oddgon_surface* surface, const char* stage, const char* format, char** out) {
    return guarded([&] {
        require(surface && out, "null argument");
        const DiagramStage st = parse_stage(stage && *stage ? stage : "arrows");
        const std::string fmt = format && *format ? format : "json";
        require(fmt == "json" || fmt == "dot", "diagram format must be 'json' or 'dot'");
        const TransitionDiagram arrows = build_arrows_diagram(surface->surface);
        const TransitionDiagram* chosen = &arrows;
        PipelineDiagrams pipeline;
        if (st != DiagramStage::Arrows) {
            pipeline = build_pipeline_diagrams(surface->surface, arrows);
            chosen = st == DiagramStage::Augmented ? &pipeline.augmented
                     : st == DiagramStage::Dual    ? &pipeline.dual
                                                   : &pipeline.primed;
        }
        *out = dup_string(fmt == "dot" ? to_dot(*chosen) : to_json(*chosen).dump(2));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_guide_json(const oddgon_surface* surface, double tol, char** out_json) {
    return guarded([&] {
        require(surface && out_json, "null argument");
        const Surface& s = surface->surface;
        const ShearMatrix m = veech_shear(s.n());
        const ReassemblyReport rep = verify_reassembly(s.n(), tol > 0 ? tol : 1e-9);
        Json j = {{"n", s.n()},
                  {"guide", to_json(build_vertex_guide(s))},
                  {"cylinders", to_json(decompose_cylinders(s))},
                  {"shear", Json::array({Json::array({m.a, round12(m.b)}), Json::array({m.c, m.d})})},
                  {"reassembly",
                   {{"pass", rep.pass},
                    {"max_residual", rep.max_residual},
                    {"worst_vertex", rep.worst_vertex},
                    {"y_identical", rep.y_identical}}}};
        *out_json = dup_string(j.dump(2));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_verify_json(const oddgon_verify_params* params, char** out_json) {
    return guarded([&] {
        require(params && out_json, "null argument");
        VerifyConfig config;
        config.n = params->n;
        config.tol = params->tol > 0 ? params->tol : 1e-9;
        config.checks = split_checks(params->checks);
        config.seed = params->seed;
        if (params->samples > 0) config.samples = params->samples;
        config.precision = precision_from_env();
        const Json report = run_verification(config);
        *out_json = dup_string(report.dump(2));
        return report["pass"].get<bool>() ? ODDGON_OK : ODDGON_VERIFICATION_FAILED;
    });
}

oddgon_status oddgon_torus_json(const char* action, const oddgon_torus_params* params, char** out_json) {
    return guarded([&] {
        require(action && params && out_json, "null argument");
        const std::string a = action;
        const TorusTrajectory traj = run_torus(*params);
        if (a == "trace") {
            *out_json = dup_string(to_json(traj).dump(2));
            return ODDGON_OK;
        }
        require(a == "derive", "torus action must be 'trace' or 'derive'");
        const TorusWord input = traj.cyclic() ? *traj.cyclic() : traj.window();
        const TorusWord rule = torus_derive_rule(input);
        const TorusWord geometric = torus_derive_geometric(traj);
        std::string status = "derived";
        if (rule.letters.empty()) {
            status = "empty";
        } else if (same_torus_word(rule, input)) {
            status = "fixed";
        }
        Json j = {{"method", "rule"},
                  {"topology", input.topology == Topology::Cyclic ? "cyclic" : "window"},
                  {"input", input.letters},
                  {"letters", rule.letters},
                  {"status", status},
                  {"geometric", torus_word_json(geometric)},
                  {"agree", same_torus_word(rule, geometric)}};
        *out_json = dup_string(j.dump(2));
        return ODDGON_OK;
    });
}

oddgon_status oddgon_render_svg(const oddgon_surface* surface, const oddgon_trace_params* trace, int with_guide,
                                char** out_svg) {
    return guarded([&] {
        require(surface && out_svg, "null argument");
        std::optional<Trajectory> traj;
        if (trace) traj = run_trace(surface->surface, *trace);
        std::optional<VertexGuide> guide;
        if (with_guide) guide = build_vertex_guide(surface->surface);
        *out_svg = dup_string(render_svg(surface->surface, traj ? &*traj : nullptr, guide ? &*guide : nullptr));
        return ODDGON_OK;
    });
}

} // extern "C"
