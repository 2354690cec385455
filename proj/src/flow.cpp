#include "oddgon/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace oddgon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
constexpr double kForever = std::numeric_limits<double>::infinity();

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

Vec2 rotate(Vec2 v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

bool in_sector(const Surface& surface, double theta) {
    return theta >= 0.0 && theta < surface.spec().half_alpha();
}

} // namespace

SurfacePoint Normalization::apply(const Surface& surface, SurfacePoint q) const {
    const PolygonId target = swaps_polygons ? other(q.polygon) : q.polygon;
    const double angle = -steps * surface.spec().half_alpha();
    return {target, rotate(q.p - surface.center(q.polygon), angle) + surface.center(target)};
}

std::vector<int> Normalization::relabel(const std::vector<int>& letters) const {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int l : letters) out.push_back(permutation.at(l));
    return out;
}

Normalization Normalization::inverse() const {
    const int n = static_cast<int>(permutation.size()) - 1;
    Normalization inv;
    inv.steps = (2 * n - steps) % (2 * n);
    inv.swaps_polygons = swaps_polygons;
    inv.theta = wrap_angle(theta + steps * std::numbers::pi / n);
    inv.permutation.assign(permutation.size(), 0);
    for (int k = 1; k <= n; ++k) inv.permutation[permutation[k]] = k;
    return inv;
}

Normalization normalize_direction(double theta, const Surface& surface) {
    const int n = surface.n();
    const double step = surface.spec().half_alpha();
    const double t = wrap_angle(theta);
    int j = std::clamp(static_cast<int>(std::floor(t / step)), 0, 2 * n - 1);
    double reduced = t - j * step;
    if (reduced < 0) {
        j = (j + 2 * n - 1) % (2 * n);
        reduced += step;
    }
    if (reduced >= step) {
        j = (j + 1) % (2 * n);
        reduced = std::max(0.0, reduced - step);
    }

    Normalization out;
    out.theta = reduced;
    out.steps = j;
    out.swaps_polygons = j % 2 == 1;
    out.permutation.assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        const Edge& e = surface.edge(PolygonId::Upper, k);
        const Vec2 a = out.apply(surface, {e.polygon, e.p0}).p;
        const Vec2 b = out.apply(surface, {e.polygon, e.p1}).p;
        const PolygonId target = out.swaps_polygons ? PolygonId::Lower : PolygonId::Upper;
        for (int l = 1; l <= n; ++l) {
            const Edge& f = surface.edge(target, l);
            if (distance(a, f.p0) < 1e-9 && distance(b, f.p1) < 1e-9) {
                out.permutation[k] = l;
                break;
            }
        }
        if (out.permutation[k] == 0) throw Error(ErrorCode::Internal, "rotated edge matches no standard edge");
    }
    return out;
}

std::vector<int> Trajectory::letters() const {
    std::vector<int> out;
    out.reserve(crossings.size());
    for (const Crossing& c : crossings) out.push_back(c.label);
    return out;
}

std::optional<std::vector<int>> Trajectory::cyclic_word() const {
    if (!period) return std::nullopt;
    std::vector<int> out;
    for (std::size_t i = 0; i < *period; ++i) out.push_back(crossings[i].label);
    return out;
}

Trajectory trace(const Surface& surface, SurfacePoint start, double theta, std::size_t max_crossings,
                 double corner_delta) {
    Trajectory traj;
    traj.n = surface.n();
    traj.start = start;
    traj.direction.theta = wrap_angle(theta);
    traj.direction.sector_normalized = in_sector(surface, traj.direction.theta);

    const Walk walk = surface.walk(start, unit_vector(theta), kForever, max_crossings, corner_delta);
    traj.pieces = walk.pieces;
    for (const WalkCrossing& c : walk.crossings) {
        traj.crossings.push_back({c.label, c.from, c.hit, c.edge_param, c.time});
    }
    if (!traj.crossings.empty()) {
        const Crossing& first = traj.crossings.front();
        for (std::size_t i = 1; i < traj.crossings.size(); ++i) {
            const Crossing& c = traj.crossings[i];
            if (c.label == first.label && c.polygon == first.polygon && distance(c.hit, first.hit) < 1e-9) {
                traj.periodic = true;
                traj.period = i;
                break;
            }
        }
    }
    return traj;
}

Trajectory trace_from_edge(const Surface& surface, PolygonId p, int label, double t, double theta,
                           std::size_t max_crossings, double corner_delta) {
    if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::InvalidArgument, "edge parameter must lie strictly inside (0, 1)");
    return trace(surface, surface.point_on_edge(p, label, t), theta, max_crossings, corner_delta);
}

namespace {

struct Event {
    double time;
    int label;
    PolygonId polygon;
    Vec2 hit;
};

// First and last crossing parameter along a trajectory piece that counts as
// crossing a segment: the piece's starting point is excluded so a crossing at
// a polygon boundary is seen once.
std::optional<double> piece_crossing(const WalkPiece& piece, const Segment& seg) {
    const auto hit = intersect(piece.segment, seg, 1e-9);
    if (!hit) return std::nullopt;
    if (hit->u <= 1e-9 || hit->u > 1.0 + 1e-9) return std::nullopt;
    if (hit->v < -1e-9 || hit->v > 1.0 + 1e-9) return std::nullopt;
    return piece.t0 + hit->u * (piece.t1 - piece.t0);
}

} // namespace

DerivedTrajectory derive_geometric(const Surface& surface, const Trajectory& trajectory, std::size_t margin) {
    if (!in_sector(surface, trajectory.direction.theta)) {
        throw Error(ErrorCode::InvalidArgument, "derive_geometric needs a direction in [0, pi/n)");
    }
    if (trajectory.crossings.empty()) throw Error(ErrorCode::InvalidArgument, "trajectory has no crossings");

    const int sector_edge = surface.slanted_sector_edge();
    const Vec2 v = unit_vector(trajectory.direction.theta);
    const Crossing& c0 = trajectory.crossings.front();
    const long count = static_cast<long>(trajectory.crossings.size());

    const Walk back = surface.walk({c0.polygon, c0.hit}, -v, kForever, margin);
    const Walk fwd = surface.walk({c0.polygon, c0.hit}, v, kForever, static_cast<std::size_t>(count - 1) + margin);

    // Original crossings by window position, from -margin to count - 1 + margin.
    struct Original {
        long position;
        int label;
        double time;
    };
    std::vector<Original> originals;
    for (std::size_t i = back.crossings.size(); i-- > 0;) {
        originals.push_back({-static_cast<long>(i) - 1, back.crossings[i].label, -back.crossings[i].time});
    }
    originals.push_back({0, c0.label, 0.0});
    for (std::size_t i = 0; i < fwd.crossings.size(); ++i) {
        originals.push_back({static_cast<long>(i) + 1, fwd.crossings[i].label, fwd.crossings[i].time});
    }
    for (const Original& o : originals) {
        if (o.position >= 0 && o.position < count && trajectory.crossings[o.position].label != o.label) {
            throw Error(ErrorCode::Internal, "re-traced trajectory disagrees with the input");
        }
    }

    std::vector<WalkPiece> pieces;
    for (auto it = back.pieces.rbegin(); it != back.pieces.rend(); ++it) {
        pieces.push_back({it->polygon, {it->segment.b, it->segment.a}, -it->t1, -it->t0});
    }
    pieces.insert(pieces.end(), fwd.pieces.begin(), fwd.pieces.end());

    auto is_node_letter = [&](int label) { return label == 1 || label == sector_edge; };

    std::vector<double> nodes;
    std::vector<Event> primed;
    for (const WalkPiece& piece : pieces) {
        for (const Edge& aux : surface.auxiliary()) {
            if (aux.polygon != piece.polygon) continue;
            if (auto t = piece_crossing(piece, aux.segment())) nodes.push_back(*t);
        }
        for (const PrimedEdge& pe : surface.primed()) {
            if (pe.coincident_original) continue;
            for (const Edge& e : pe.pieces) {
                if (e.polygon != piece.polygon) continue;
                if (auto t = piece_crossing(piece, e.segment())) {
                    const double u = (*t - piece.t0) / (piece.t1 - piece.t0);
                    primed.push_back({*t, pe.label, piece.polygon, piece.segment.at(u)});
                }
            }
        }
    }
    for (const Original& o : originals) {
        if (is_node_letter(o.label)) nodes.push_back(o.time);
    }
    std::sort(nodes.begin(), nodes.end());

    std::vector<PrimedCrossing> attributed;
    for (const Event& e : primed) {
        const auto hi = std::upper_bound(nodes.begin(), nodes.end(), e.time);
        if (hi == nodes.begin() || hi == nodes.end()) continue; // outside the traced span
        const double t_lo = *(hi - 1);
        const double t_hi = *hi;
        const Original* source = nullptr;
        for (const Original& o : originals) {
            if (o.time > t_lo && o.time < t_hi && !is_node_letter(o.label)) {
                if (source) throw Error(ErrorCode::Internal, "two original letters between consecutive nodes");
                source = &o;
            }
        }
        if (!source) throw Error(ErrorCode::Internal, "primed crossing with no original letter to derive from");
        attributed.push_back({e.label, e.polygon, e.hit, e.time, source->position});
    }
    for (const PrimedEdge& pe : surface.primed()) {
        if (!pe.coincident_original) continue;
        for (const Original& o : originals) {
            if (o.label == *pe.coincident_original) attributed.push_back({pe.label, PolygonId::Upper, {}, o.time, o.position});
        }
    }
    std::sort(attributed.begin(), attributed.end(),
              [](const PrimedCrossing& a, const PrimedCrossing& b) { return a.time < b.time; });

    DerivedTrajectory out;
    for (const PrimedCrossing& pc : attributed) {
        if (pc.source >= 0 && pc.source < count) out.crossings.push_back(pc);
        if (pc.source >= 1 && pc.source <= count - 2) out.interior.push_back(pc.label);
    }
    if (trajectory.period) {
        std::vector<int> word;
        for (const PrimedCrossing& pc : attributed) {
            if (pc.source >= 0 && pc.source < static_cast<long>(*trajectory.period)) word.push_back(pc.label);
        }
        out.cyclic = std::move(word);
    }
    return out;
}

NormalizedTrajectory normalize_trajectory(const Surface& surface, const Trajectory& trajectory) {
    NormalizedTrajectory out;
    out.normalization = normalize_direction(trajectory.direction.theta, surface);
    const SurfacePoint start = out.normalization.apply(surface, trajectory.start);
    out.trajectory = trace(surface, start, out.normalization.theta, trajectory.crossings.size());
    return out;
}

DerivedTrajectory derive_geometric_any(const Surface& surface, const Trajectory& trajectory, std::size_t margin) {
    if (trajectory.direction.sector_normalized) return derive_geometric(surface, trajectory, margin);
    const NormalizedTrajectory norm = normalize_trajectory(surface, trajectory);
    DerivedTrajectory derived = derive_geometric(surface, norm.trajectory, margin);
    const Normalization back = norm.normalization.inverse();
    derived.interior = back.relabel(derived.interior);
    if (derived.cyclic) derived.cyclic = back.relabel(*derived.cyclic);
    for (PrimedCrossing& pc : derived.crossings) pc.label = back.permutation.at(pc.label);
    return derived;
}

SurfacePoint derivation_map(const Surface& surface, SurfacePoint q) { return surface.flip(surface.unshear(q)); }

Trajectory derivation_image(const Surface& surface, const Trajectory& trajectory, std::size_t max_crossings) {
    if (trajectory.pieces.empty()) throw Error(ErrorCode::InvalidArgument, "trajectory has no pieces");
    const WalkPiece& first = trajectory.pieces.front();
    const SurfacePoint q{first.polygon, first.segment.midpoint()};
    const double b = 2.0 / std::tan(surface.spec().half_alpha());
    const Vec2 v = unit_vector(trajectory.direction.theta);
    const Vec2 w{-v.x + b * v.y, v.y};
    return trace(surface, derivation_map(surface, q), std::atan2(w.y, w.x), max_crossings);
}

std::vector<int> least_rotation(const std::vector<int>& word) {
    if (word.empty()) return word;
    std::vector<int> best = word;
    std::vector<int> rot = word;
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

namespace {

struct ReturnSample {
    bool valid = false;
    double offset = 0.0;
};

// Follows |word| crossings from the start and, if the letters spell a
// rotation of the word and the last crossing is the start edge, returns the
// signed parameter offset of the return point.
ReturnSample return_offset(const Surface& surface, const std::vector<int>& target, int label, double t, double theta) {
    ReturnSample out;
    try {
        const Trajectory traj = trace_from_edge(surface, PolygonId::Upper, label, t, theta, target.size());
        if (traj.crossings.size() != target.size()) return out;
        const Crossing& last = traj.crossings.back();
        if (last.label != label) return out;
        std::vector<int> letters = traj.letters();
        if (least_rotation(letters) != target) return out;
        const Edge& e = surface.edge(PolygonId::Upper, label);
        const Vec2 back = last.polygon == PolygonId::Upper
                              ? last.hit
                              : last.hit + surface.identification_offset(PolygonId::Lower, label);
        const Vec2 d = e.p1 - e.p0;
        out.offset = dot(back - e.p0, d) / dot(d, d) - t;
        out.valid = true;
    } catch (const CornerHit&) {
    }
    return out;
}

} // namespace

std::optional<OrbitFixture> find_periodic_orbit(const Surface& surface, const std::vector<int>& cyclic_word, int label,
                                                double t, double lo, double hi, int grid) {
    const std::vector<int> target = least_rotation(cyclic_word);
    ReturnSample prev = return_offset(surface, target, label, t, lo);
    double prev_theta = lo;
    for (int i = 1; i <= grid; ++i) {
        const double theta = lo + (hi - lo) * i / grid;
        const ReturnSample cur = return_offset(surface, target, label, t, theta);
        if (prev.valid && cur.valid && (prev.offset == 0.0 || (prev.offset < 0) != (cur.offset < 0))) {
            double a = prev_theta;
            double b = theta;
            double fa = prev.offset;
            for (int it = 0; it < 200 && fa != 0.0; ++it) {
                const double mid = 0.5 * (a + b);
                const ReturnSample m = return_offset(surface, target, label, t, mid);
                if (!m.valid) break;
                if ((m.offset < 0) == (fa < 0)) {
                    a = mid;
                    fa = m.offset;
                } else {
                    b = mid;
                }
                if (b - a < 1e-16) break;
            }
            const double root = 0.5 * (a + b);
            const Trajectory check = trace_from_edge(surface, PolygonId::Upper, label, t, root, 4 * target.size());
            if (check.period && least_rotation(*check.cyclic_word()) == target) return OrbitFixture{label, t, root};
        }
        prev = cur;
        prev_theta = theta;
    }
    return std::nullopt;
}

} // namespace oddgon
