#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddgon/error.hpp"
#include "oddgon/geometry.hpp"

namespace oddgon {

// Odd n >= 5 with the derived angles. The exterior angle is always computed
// as twice the half angle so the two never disagree.
class OddGonSpec {
public:
    static constexpr int kMinN = 5;
    static constexpr int kMaxN = 99;

    explicit OddGonSpec(int n);

    int n() const { return n_; }
    // (n - 1) / 2: number of cylinders, and index of the apex level.
    int half() const { return (n_ - 1) / 2; }
    double half_alpha() const { return half_alpha_; }
    double alpha() const { return 2.0 * half_alpha_; }

private:
    int n_;
    double half_alpha_;
};

enum class PolygonId { Upper, Lower };

inline PolygonId other(PolygonId p) { return p == PolygonId::Upper ? PolygonId::Lower : PolygonId::Upper; }
const char* polygon_name(PolygonId p);

enum class EdgeKind { Original, Auxiliary, Primed };

struct Edge {
    int label = 0; // original/primed: 1..n; auxiliary: 1..n-3 within its polygon
    PolygonId polygon = PolygonId::Upper;
    Vec2 p0;
    Vec2 p1;
    EdgeKind kind = EdgeKind::Original;

    Segment segment() const { return {p0, p1}; }
};

// A point on the surface, given by the polygon whose closure holds it.
struct SurfacePoint {
    PolygonId polygon = PolygonId::Upper;
    Vec2 p;
};

// The image S_k' of an original edge, cut into the pieces that lie in the
// standard polygons. When the image is itself an original edge,
// `coincident_original` names it and `pieces` holds that edge.
struct PrimedEdge {
    int label = 0;
    std::vector<Edge> pieces;
    std::optional<int> coincident_original;
};

// One edge crossing of a straight path. `edge_param` is measured along the
// crossed edge of the polygon the path leaves.
struct WalkCrossing {
    int label = 0;
    PolygonId from = PolygonId::Upper;
    Vec2 hit;
    double edge_param = 0.0;
    double time = 0.0;
};

struct WalkPiece {
    PolygonId polygon = PolygonId::Upper;
    Segment segment;
    double t0 = 0.0;
    double t1 = 0.0;
};

struct Walk {
    std::vector<WalkPiece> pieces;
    std::vector<WalkCrossing> crossings;
    SurfacePoint end;
    double time = 0.0;
};

// Double regular n-gon. P_U has its horizontal edge S_1 from (0,0) to (1,0);
// P_L is the half-turn copy of P_U glued to it along S_n. Edge S_k of P_U is
// identified with edge S_k of P_L by translation.
class Surface {
public:
    static Surface build(int n);

    const OddGonSpec& spec() const { return spec_; }
    int n() const { return spec_.n(); }

    // Counter-clockwise vertices; vertex j - 1 -> vertex j is edge S_j.
    std::span<const Vec2> vertices(PolygonId p) const;
    const Edge& edge(PolygonId p, int label) const;
    // All original edges: P_U S_1..S_n then P_L S_1..S_n.
    std::span<const Edge> edges() const { return edges_; }
    std::vector<std::pair<const Edge*, const Edge*>> identifications() const;

    // k-th right/left side point, 0 <= k <= (n-1)/2, counted from the
    // horizontal edge away from it (upward in P_U, downward in P_L).
    Vec2 right_point(PolygonId p, int k) const;
    Vec2 left_point(PolygonId p, int k) const;
    // Height of the k-th level (the y of the k-th side points).
    double level_y(PolygonId p, int k) const;

    Vec2 center(PolygonId p) const;
    // x of the vertical mirror axis of the polygon.
    double mirror_axis(PolygonId p) const;

    // Translation taking edge S_k of polygon p onto its partner in the other polygon.
    Vec2 identification_offset(PolygonId p, int label) const;

    std::span<const Edge> auxiliary() const { return auxiliary_; }
    std::span<const PrimedEdge> primed() const { return primed_; }

    // The edge S_k making angle pi/n with the horizontal: S_{(n+3)/2}.
    int slanted_sector_edge() const { return (n() + 3) / 2; }

    // Straight-line flow from `start` with the given velocity for at most
    // `max_time` time units or `max_crossings` edge crossings, whichever comes
    // first. A start on an edge is resolved into the polygon the velocity
    // points into. Throws CornerHit when a crossing lies within
    // `corner_delta` of a vertex.
    Walk walk(SurfacePoint start, Vec2 velocity, double max_time, std::size_t max_crossings,
              double corner_delta = Tolerance{}.corner) const;

    // Point on edge S_k of polygon p at parameter t in [0,1].
    SurfacePoint point_on_edge(PolygonId p, int label, double t) const;

    // Affine automorphisms. `shear` has derivative M_n and fixes S_1
    // pointwise; `flip` has derivative diag(-1, 1) and mirrors each polygon
    // in its vertical axis.
    SurfacePoint shear(SurfacePoint q) const;
    SurfacePoint unshear(SurfacePoint q) const;
    SurfacePoint flip(SurfacePoint q) const;
    // Label permutation induced by flip: S_1 fixed, S_k <-> S_{n+2-k}.
    int flip_label(int label) const;

    // Which polygon (if any) holds p strictly inside or on its boundary.
    bool contains(PolygonId poly, Vec2 p, double eps = 1e-9) const;

private:
    explicit Surface(OddGonSpec spec) : spec_(spec) {}

    struct ResolvedStart {
        PolygonId polygon;
        Vec2 p;
        int entry; // 0 when starting in the interior
    };
    ResolvedStart resolve_start(SurfacePoint start, Vec2 velocity) const;
    SurfacePoint develop_from_base(SurfacePoint q, double shear_factor) const;
    void build_auxiliary();
    void build_primed();

    OddGonSpec spec_;
    std::vector<Vec2> upper_;
    std::vector<Vec2> lower_;
    std::vector<Edge> edges_;
    std::vector<Edge> auxiliary_;
    std::vector<PrimedEdge> primed_;
};

// Free-function surface operations.
Surface build_surface(int n);
// n - 3 diagonals per polygon at angle 0 or pi/n. Within a polygon, label 2k
// is the horizontal bar at level k and label 2k - 1 is the pi/n diagonal of
// the strip below it.
std::vector<Edge> auxiliary_edges(const Surface& surface);
std::vector<PrimedEdge> primed_edges(const Surface& surface);

// Display names. Original edges are A..Z when n <= 26 and S1..Sn otherwise.
std::string original_name(int n, int label);
std::string primed_name(int n, int label);
// Auxiliary edges are U1.., L1..; the double pentagon uses f, g, h, i.
std::string auxiliary_name(int n, PolygonId polygon, int label);

} // namespace oddgon
