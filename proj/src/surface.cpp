#include "oddgon/surface.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numbers>
#include <sstream>

namespace oddgon {

OddGonSpec::OddGonSpec(int n) : n_(n), half_alpha_(std::numbers::pi / n) {
    if (n % 2 == 0 || n < kMinN || n > kMaxN) {
        std::ostringstream msg;
        msg << "unsupported surface: n = " << n << " (need odd n with " << kMinN << " <= n <= " << kMaxN << ")";
        throw Error(ErrorCode::UnsupportedSurface, msg.str());
    }
}

const char* polygon_name(PolygonId p) { return p == PolygonId::Upper ? "upper" : "lower"; }

namespace {

// Sums of cos(i*alpha) and sin(i*alpha) for i = 1..k.
std::pair<double, double> side_sums(const OddGonSpec& spec, int k) {
    double c = 0.0;
    double s = 0.0;
    for (int i = 1; i <= k; ++i) {
        c += std::cos(i * spec.alpha());
        s += std::sin(i * spec.alpha());
    }
    return {c, s};
}

double point_segment_distance(Vec2 p, const Segment& seg) {
    const Vec2 d = seg.direction();
    const double len2 = dot(d, d);
    double s = len2 > 0 ? dot(p - seg.a, d) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return distance(p, seg.at(s));
}

} // namespace

Surface Surface::build(int n) {
    Surface surf{OddGonSpec(n)};
    const OddGonSpec& spec = surf.spec_;
    const int m = spec.half();

    // Right point k is vertex k + 1, left point k is vertex n - k.
    std::vector<Vec2> v(n);
    for (int k = 0; k <= m; ++k) {
        auto [c, s] = side_sums(spec, k);
        const Vec2 right{1.0 + c, s};
        const Vec2 left{-c, s};
        if (k == m) {
            v[k + 1] = Vec2{0.5, s};
        } else {
            v[k + 1] = right;
            v[(n - k) % n] = left;
        }
    }
    surf.upper_ = v;

    const Vec2 c = v[n - 1];
    surf.lower_.resize(n);
    for (int j = 0; j < n; ++j) surf.lower_[j] = c - v[j];

    for (PolygonId poly : {PolygonId::Upper, PolygonId::Lower}) {
        const auto& verts = poly == PolygonId::Upper ? surf.upper_ : surf.lower_;
        for (int j = 1; j <= n; ++j) {
            surf.edges_.push_back(Edge{j, poly, verts[j - 1], verts[j % n], EdgeKind::Original});
        }
    }
    surf.build_auxiliary();
    surf.build_primed();
    return surf;
}

std::span<const Vec2> Surface::vertices(PolygonId p) const {
    return p == PolygonId::Upper ? std::span<const Vec2>(upper_) : std::span<const Vec2>(lower_);
}

const Edge& Surface::edge(PolygonId p, int label) const {
    if (label < 1 || label > n()) throw Error(ErrorCode::InvalidArgument, "edge label out of range");
    return edges_[(p == PolygonId::Upper ? 0 : n()) + label - 1];
}

std::vector<std::pair<const Edge*, const Edge*>> Surface::identifications() const {
    std::vector<std::pair<const Edge*, const Edge*>> out;
    for (int k = 1; k <= n(); ++k) out.emplace_back(&edge(PolygonId::Upper, k), &edge(PolygonId::Lower, k));
    return out;
}

Vec2 Surface::right_point(PolygonId p, int k) const {
    if (k < 0 || k > spec_.half()) throw Error(ErrorCode::InvalidArgument, "side point level out of range");
    if (p == PolygonId::Upper) return upper_[k + 1];
    // P_L is the half turn of P_U: its right side is the image of the left side.
    return lower_[(n() - k) % n()];
}

Vec2 Surface::left_point(PolygonId p, int k) const {
    if (k < 0 || k > spec_.half()) throw Error(ErrorCode::InvalidArgument, "side point level out of range");
    if (p == PolygonId::Upper) return upper_[(n() - k) % n()];
    return lower_[k + 1];
}

double Surface::level_y(PolygonId p, int k) const { return right_point(p, k).y; }

Vec2 Surface::center(PolygonId p) const {
    Vec2 sum;
    for (Vec2 q : vertices(p)) sum += q;
    return sum * (1.0 / n());
}

double Surface::mirror_axis(PolygonId p) const {
    return p == PolygonId::Upper ? 0.5 : upper_[n() - 1].x - 0.5;
}

Vec2 Surface::identification_offset(PolygonId p, int label) const {
    const Edge& here = edge(p, label);
    const Edge& there = edge(other(p), label);
    // Partner edges run in opposite directions.
    return there.p1 - here.p0;
}

bool Surface::contains(PolygonId poly, Vec2 p, double eps) const {
    for (int j = 1; j <= n(); ++j) {
        const Edge& e = edge(poly, j);
        const Vec2 d = e.p1 - e.p0;
        if (cross(d, p - e.p0) / norm(d) < -eps) return false;
    }
    return true;
}

SurfacePoint Surface::point_on_edge(PolygonId p, int label, double t) const {
    const Edge& e = edge(p, label);
    return {p, e.segment().at(t)};
}

Surface::ResolvedStart Surface::resolve_start(SurfacePoint start, Vec2 velocity) const {
    constexpr double kOnEdge = 1e-9;
    std::vector<int> on;
    for (int j = 1; j <= n(); ++j) {
        if (point_segment_distance(start.p, edge(start.polygon, j).segment()) < kOnEdge) on.push_back(j);
    }
    if (on.empty()) {
        if (!contains(start.polygon, start.p)) throw Error(ErrorCode::InvalidArgument, "start point outside its polygon");
        return {start.polygon, start.p, 0};
    }
    if (on.size() > 1) throw CornerHit("start point is a vertex");
    const int j = on.front();
    const Edge& e = edge(start.polygon, j);
    const Vec2 d = e.p1 - e.p0;
    const double side = cross(d, velocity) / (norm(d) * norm(velocity));
    if (std::abs(side) < 1e-12) throw Error(ErrorCode::InvalidArgument, "velocity runs along an edge");
    if (side > 0) return {start.polygon, start.p, j};
    return {other(start.polygon), start.p + identification_offset(start.polygon, j), j};
}

Walk Surface::walk(SurfacePoint start, Vec2 velocity, double max_time, std::size_t max_crossings,
                   double corner_delta) const {
    if (norm(velocity) == 0.0) throw Error(ErrorCode::InvalidArgument, "zero velocity");
    auto [poly, p, entry] = resolve_start(start, velocity);

    Walk out;
    double t = 0.0;
    const double vlen = norm(velocity);
    while (true) {
        double best_tau = std::numeric_limits<double>::infinity();
        double best_s = 0.0;
        int best = 0;
        for (int j = 1; j <= n(); ++j) {
            if (j == entry) continue;
            const Edge& e = edge(poly, j);
            const Vec2 d = e.p1 - e.p0;
            const double denom = cross(velocity, d);
            if (std::abs(denom) <= 1e-14 * vlen * norm(d)) continue;
            const Vec2 w = e.p0 - p;
            const double tau = cross(w, d) / denom;
            const double s = cross(w, velocity) / denom;
            if (tau <= 0.0 || s < -1e-9 || s > 1.0 + 1e-9) continue;
            if (tau < best_tau) {
                best_tau = tau;
                best_s = s;
                best = j;
            }
        }
        if (best == 0) throw Error(ErrorCode::Internal, "straight path lost its polygon");

        const double remaining = max_time - t;
        if (best_tau >= remaining - 1e-9 * std::max(1.0, remaining)) {
            const Vec2 q = p + velocity * remaining;
            out.pieces.push_back({poly, {p, q}, t, max_time});
            out.end = {poly, q};
            out.time = max_time;
            return out;
        }

        const Edge& e = edge(poly, best);
        const Vec2 hit = p + velocity * best_tau;
        const double len = norm(e.p1 - e.p0);
        const double s = std::clamp(best_s, 0.0, 1.0);
        if (std::min(s, 1.0 - s) * len < corner_delta) {
            std::ostringstream msg;
            msg << "trajectory passes within " << corner_delta << " of a vertex of edge "
                << original_name(n(), best) << " (" << polygon_name(poly) << ")";
            throw CornerHit(msg.str());
        }
        out.pieces.push_back({poly, {p, hit}, t, t + best_tau});
        t += best_tau;
        out.crossings.push_back({best, poly, hit, s, t});

        p = hit + identification_offset(poly, best);
        poly = other(poly);
        entry = best;
        if (out.crossings.size() >= max_crossings) {
            out.end = {poly, p};
            out.time = t;
            return out;
        }
    }
}

SurfacePoint Surface::develop_from_base(SurfacePoint q, double shear_factor) const {
    const Edge& base_edge = edge(q.polygon, 1);
    if (point_segment_distance(q.p, base_edge.segment()) < 1e-12) return q;
    const Vec2 base = base_edge.segment().midpoint();
    const Vec2 d = q.p - base;
    const Vec2 vel{d.x + shear_factor * d.y, d.y};
    return walk({q.polygon, base}, vel, 1.0, std::numeric_limits<std::size_t>::max()).end;
}

SurfacePoint Surface::shear(SurfacePoint q) const {
    return develop_from_base(q, 2.0 / std::tan(spec_.half_alpha()));
}

SurfacePoint Surface::unshear(SurfacePoint q) const {
    return develop_from_base(q, -2.0 / std::tan(spec_.half_alpha()));
}

SurfacePoint Surface::flip(SurfacePoint q) const {
    return {q.polygon, {2.0 * mirror_axis(q.polygon) - q.p.x, q.p.y}};
}

int Surface::flip_label(int label) const { return label == 1 ? 1 : n() + 2 - label; }

void Surface::build_auxiliary() {
    const int m = spec_.half();
    for (PolygonId poly : {PolygonId::Upper, PolygonId::Lower}) {
        for (int k = 1; k < m; ++k) {
            auxiliary_.push_back(Edge{2 * k - 1, poly, left_point(poly, k - 1), right_point(poly, k), EdgeKind::Auxiliary});
            if (poly == PolygonId::Lower) {
                // In P_L the strip diagonal runs from the right point above to the left point below.
                auxiliary_.back().p0 = right_point(poly, k - 1);
                auxiliary_.back().p1 = left_point(poly, k);
            }
            auxiliary_.push_back(Edge{2 * k, poly, left_point(poly, k), right_point(poly, k), EdgeKind::Auxiliary});
        }
    }
}

void Surface::build_primed() {
    const double b = 2.0 / std::tan(spec_.half_alpha());
    auto sheared = [b](Vec2 d) { return Vec2{d.x + b * d.y, d.y}; };
    constexpr auto kUnbounded = std::numeric_limits<std::size_t>::max();

    for (int j = 1; j <= n(); ++j) {
        PrimedEdge pe;
        pe.label = j;
        const int source = flip_label(j);
        const Edge& src = edge(PolygonId::Upper, source);

        if (source == 1) {
            pe.coincident_original = 1;
        } else {
            const Vec2 q = src.segment().midpoint();
            const SurfacePoint image = shear({PolygonId::Upper, q});
            const Vec2 toward1 = sheared(src.p1 - q);
            const Vec2 toward0 = sheared(src.p0 - q);
            // Image running along an original edge: the primed edge is that edge.
            for (int k = 1; k <= n() && !pe.coincident_original; ++k) {
                const Edge& e = edge(image.polygon, k);
                if (point_segment_distance(image.p, e.segment()) < 1e-9 &&
                    std::abs(cross(e.p1 - e.p0, toward1)) < 1e-9 * norm(toward1)) {
                    pe.coincident_original = k;
                }
            }
            if (!pe.coincident_original) {
                const Walk w0 = walk(image, toward0, 1.0, kUnbounded);
                const Walk w1 = walk(image, toward1, 1.0, kUnbounded);
                std::vector<WalkPiece> chain;
                for (auto it = w0.pieces.rbegin(); it != w0.pieces.rend(); ++it) {
                    chain.push_back({it->polygon, {it->segment.b, it->segment.a}, 0, 0});
                }
                for (const WalkPiece& piece : w1.pieces) {
                    if (!chain.empty() && chain.back().polygon == piece.polygon &&
                        distance(chain.back().segment.b, piece.segment.a) < 1e-9) {
                        chain.back().segment.b = piece.segment.b;
                    } else {
                        chain.push_back(piece);
                    }
                }
                for (const WalkPiece& piece : chain) {
                    pe.pieces.push_back(Edge{j, piece.polygon, piece.segment.a, piece.segment.b, EdgeKind::Primed});
                }
            }
        }
        if (pe.coincident_original) {
            for (PolygonId poly : {PolygonId::Upper, PolygonId::Lower}) {
                const Edge& e = edge(poly, *pe.coincident_original);
                pe.pieces.push_back(Edge{j, poly, e.p0, e.p1, EdgeKind::Primed});
            }
        }
        primed_.push_back(std::move(pe));
    }
}

Surface build_surface(int n) { return Surface::build(n); }

std::vector<Edge> auxiliary_edges(const Surface& surface) {
    return {surface.auxiliary().begin(), surface.auxiliary().end()};
}

std::vector<PrimedEdge> primed_edges(const Surface& surface) {
    return {surface.primed().begin(), surface.primed().end()};
}

std::string original_name(int n, int label) {
    if (n <= 26) return std::string(1, static_cast<char>('A' + label - 1));
    return "S" + std::to_string(label);
}

std::string primed_name(int n, int label) { return original_name(n, label) + "'"; }

std::string auxiliary_name(int n, PolygonId polygon, int label) {
    if (n == 5) {
        // Pentagon naming: f and h are the bars, g and i the diagonals.
        static constexpr char kLower[] = {'g', 'f'};
        static constexpr char kUpper[] = {'i', 'h'};
        return std::string(1, polygon == PolygonId::Lower ? kLower[label - 1] : kUpper[label - 1]);
    }
    return (polygon == PolygonId::Upper ? "U" : "L") + std::to_string(label);
}

} // namespace oddgon
