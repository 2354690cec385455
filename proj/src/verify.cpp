#include "oddgon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <numbers>
#include <random>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "oddgon/closed_forms.hpp"

namespace oddgon {

namespace {

using Extended = boost::multiprecision::cpp_bin_float_100;

Extended extended_pi() { return boost::math::constants::pi<Extended>(); }

std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t task) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(task), static_cast<std::uint32_t>(task >> 32)};
    return std::mt19937_64(seq);
}

} // namespace

Precision precision_from_env() {
    const char* v = std::getenv("ODDGON_PRECISION");
    return v && std::string(v) == "extended" ? Precision::Extended : Precision::Double;
}

double modulus_reference(int n, Precision precision) {
    const OddGonSpec spec(n);
    if (precision == Precision::Extended) {
        const Extended half = extended_pi() / n;
        return static_cast<double>(2 * closed_form::cot(half));
    }
    return 2.0 / std::tan(spec.half_alpha());
}

IdentityReport check_identities(int samples, std::uint64_t seed) {
    std::mt19937_64 rng = task_rng(seed, 0);
    std::uniform_real_distribution<double> theta_dist(0.01, std::numbers::pi - 0.01);
    std::uniform_int_distribution<int> k_dist(1, 12);
    IdentityReport rep;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        const double theta = theta_dist(rng);
        const int k = k_dist(rng);
        const double r = std::max(telescoping_identity(theta, k).residual(), identity_sum(theta, k).residual());
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.worst_theta = theta;
            rep.worst_k = k;
        }
    }
    return rep;
}

ModuliReport check_moduli(int n, Precision precision) {
    const Surface surface = Surface::build(n);
    const auto cylinders = decompose_cylinders(surface);
    const double ref = modulus_reference(n, precision);
    ModuliReport rep;
    rep.n = n;
    rep.cylinders = static_cast<int>(cylinders.size());
    for (const Cylinder& a : cylinders) {
        rep.max_dev = std::max(rep.max_dev, std::abs(a.modulus - ref));
        for (const Cylinder& b : cylinders) rep.max_spread = std::max(rep.max_spread, std::abs(a.modulus - b.modulus));
    }
    return rep;
}

ReassemblyReport check_reassembly(int n, double tol, Precision precision) {
    ReassemblyReport rep = verify_reassembly(n, tol);
    if (precision == Precision::Double) return rep;

    const Surface surface = Surface::build(n);
    const VertexGuide guide = build_vertex_guide(surface);
    const Extended alpha = 2 * extended_pi() / n;
    rep.max_residual = 0.0;
    for (PointFamily family : {PointFamily::UpperRight, PointFamily::UpperLeft, PointFamily::LowerRight,
                               PointFamily::LowerLeft}) {
        for (int k = 0; k <= surface.spec().half(); ++k) {
            const double ref = static_cast<double>(closed_form::matrix_sheared_x<Extended>(family, alpha, k));
            const double r = std::abs(guide.x(family, k) - ref);
            if (r > rep.max_residual) {
                rep.max_residual = r;
                rep.worst_vertex = std::string(family_name(family)) + " k=" + std::to_string(k);
            }
        }
    }
    rep.pass = rep.max_residual < tol && rep.y_identical && rep.max_bar_drift < tol;
    return rep;
}

AgreementReport check_geometric_agreement(const Surface& surface, int samples, int crossings, std::uint64_t seed) {
    struct Outcome {
        bool match = true;
        int retries = 0;
        std::string description;
    };
    auto run_one = [&](int task) {
        std::mt19937_64 rng = task_rng(seed, static_cast<std::uint64_t>(task));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Outcome out;
        for (;;) {
            const int label = 1 + static_cast<int>(unit(rng) * surface.n()) % surface.n();
            const PolygonId poly = unit(rng) < 0.5 ? PolygonId::Upper : PolygonId::Lower;
            const double t = 0.02 + 0.96 * unit(rng);
            const double theta = surface.spec().half_alpha() * (1e-6 + (1.0 - 2e-6) * unit(rng));
            try {
                const Trajectory traj = trace_from_edge(surface, poly, label, t, theta, static_cast<std::size_t>(crossings));
                const DerivedTrajectory derived = derive_geometric(surface, traj);
                const Word window{traj.letters(), Topology::Window};
                const Word expected = ksl(window);
                if (derived.interior != expected.letters) {
                    out.match = false;
                    out.description = std::string(polygon_name(poly)) + " " + original_name(surface.n(), label) +
                                      " t=" + std::to_string(t) + " theta=" + std::to_string(theta);
                }
                return out;
            } catch (const CornerHit&) {
                ++out.retries;
            }
        }
    };

    std::vector<Outcome> outcomes(static_cast<std::size_t>(samples));
    const int workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (int i = w; i < samples; i += workers) outcomes[static_cast<std::size_t>(i)] = run_one(i);
        }));
    }
    for (auto& j : jobs) j.get();

    AgreementReport rep;
    rep.n = surface.n();
    rep.samples = samples;
    rep.crossings = crossings;
    for (const Outcome& o : outcomes) {
        rep.corner_retries += o.retries;
        if (!o.match) {
            ++rep.mismatches;
            if (!rep.counterexample) rep.counterexample = o.description;
        }
    }
    return rep;
}

TorusReport check_torus(int samples, std::uint64_t seed) {
    TorusReport rep;
    const TorusTrajectory abbb = torus_trace_slope({0.1, 0.35}, 1, 3, 8);
    rep.abbb_derived = torus_derive_geometric(abbb).letters;
    // Display rotation starting at the first A.
    const auto a = rep.abbb_derived.find('A');
    if (a != std::string::npos) std::rotate(rep.abbb_derived.begin(), rep.abbb_derived.begin() + static_cast<long>(a), rep.abbb_derived.end());
    rep.abbb_ok = abbb.cyclic() && same_torus_word(*abbb.cyclic(), {"ABBB", Topology::Cyclic}) &&
                  same_torus_word(torus_derive_geometric(abbb), {"ABB", Topology::Cyclic});

    const Word abbb_word{{1, 2, 2, 2}, Topology::Cyclic};
    for (int l : ksl(abbb_word).letters) rep.ksl_abbb.push_back(static_cast<char>('A' + l - 1));
    const TorusWord rule = torus_derive_rule({"ABBB", Topology::Cyclic});
    rep.negative_control_ok = !same_torus_word({rep.ksl_abbb, Topology::Cyclic}, rule);

    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        std::mt19937_64 rng = task_rng(seed, static_cast<std::uint64_t>(i));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (;;) {
            const Vec2 start{unit(rng), unit(rng)};
            const double theta = (std::numbers::pi / 4) * (1e-3 + 0.998 * unit(rng));
            try {
                const TorusTrajectory traj = torus_trace(start, theta, 60);
                if (!same_torus_word(torus_derive_geometric(traj), torus_derive_rule(traj.window()))) ++rep.mismatches;
                break;
            } catch (const CornerHit&) {
            }
        }
    }
    return rep;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {"identities", "moduli", "reassembly", "equivalence", "geometric", "torus"};
    return names;
}

Json run_verification(const VerifyConfig& config) {
    std::vector<std::string> checks = config.checks.empty() ? known_checks() : config.checks;
    for (const std::string& c : checks) {
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
            throw Error(ErrorCode::InvalidArgument, "unknown check '" + c + "'");
        }
    }
    const Surface surface = Surface::build(config.n);
    const double tol = config.tol;

    std::map<std::string, std::future<Json>> jobs;
    for (const std::string& name : checks) {
        if (jobs.count(name)) continue;
        jobs[name] = std::async(std::launch::async, [&, name]() -> Json {
            if (name == "identities") {
                const IdentityReport r = check_identities(1000, config.seed);
                return {{"pass", r.max_residual < tol}, {"samples", r.samples}, {"max_residual", r.max_residual},
                        {"worst_theta", r.worst_theta}, {"worst_k", r.worst_k}};
            }
            if (name == "moduli") {
                const ModuliReport r = check_moduli(config.n, config.precision);
                return {{"pass", r.max_dev < tol && r.max_spread < tol}, {"max_dev", r.max_dev},
                        {"max_spread", r.max_spread}, {"cylinders", r.cylinders},
                        {"expected", round12(modulus_reference(config.n, config.precision))}};
            }
            if (name == "reassembly") {
                const ReassemblyReport r = check_reassembly(config.n, tol, config.precision);
                return {{"pass", r.pass}, {"max_residual", r.max_residual}, {"worst_vertex", r.worst_vertex},
                        {"y_identical", r.y_identical}, {"max_bar_drift", r.max_bar_drift}};
            }
            if (name == "equivalence") {
                const EquivalenceReport r = sandwich_equivalence_check(surface, config.length_bound, config.random_walks,
                                                                       30, config.seed);
                Json j = {{"pass", r.pass()}, {"length_bound", r.length_bound}, {"cyclic_walks", r.cyclic_walks},
                          {"random_walks", r.random_walks}, {"fragments", r.fragments}, {"mismatches", r.mismatches}};
                j["counterexample"] = r.counterexample ? Json(word_name(config.n, r.counterexample->letters)) : Json(nullptr);
                return j;
            }
            if (name == "geometric") {
                const AgreementReport r = check_geometric_agreement(surface, config.samples, config.crossings, config.seed);
                Json j = {{"pass", r.mismatches == 0}, {"samples", r.samples}, {"crossings", r.crossings},
                          {"mismatches", r.mismatches}, {"corner_retries", r.corner_retries}};
                j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
                return j;
            }
            const TorusReport r = check_torus(config.samples, config.seed);
            return {{"pass", r.abbb_ok && r.mismatches == 0 && r.negative_control_ok},
                    {"abbb_derived", r.abbb_derived},
                    {"samples", r.samples},
                    {"mismatches", r.mismatches},
                    {"ksl_abbb", r.ksl_abbb},
                    {"negative_control", r.negative_control_ok}};
        });
    }

    Json report;
    report["n"] = config.n;
    report["checks"] = Json::object();
    bool pass = true;
    for (const std::string& name : checks) {
        if (report["checks"].contains(name)) continue;
        Json result = jobs[name].get();
        pass = pass && result["pass"].get<bool>();
        report["checks"][name] = std::move(result);
    }
    report["tol"] = tol;
    report["seed"] = config.seed;
    report["precision"] = config.precision == Precision::Extended ? "extended" : "double";
    report["pass"] = pass;
    return report;
}

} // namespace oddgon
