#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oddgon/surface.hpp"

namespace oddgon {

struct Direction {
    double theta = 0.0; // radians in [0, 2 pi)
    bool sector_normalized = false;
};

// Rotation by -steps * pi/n about the polygon centres, which moves theta into
// [0, pi/n). Odd step counts exchange the roles of P_U and P_L.
struct Normalization {
    double theta = 0.0;
    int steps = 0;
    bool swaps_polygons = false;
    // permutation[k] is the label that edge S_k carries after the rotation;
    // index 0 is unused.
    std::vector<int> permutation;

    SurfacePoint apply(const Surface& surface, SurfacePoint q) const;
    std::vector<int> relabel(const std::vector<int>& letters) const;
    Normalization inverse() const;
};

Normalization normalize_direction(double theta, const Surface& surface);

struct Crossing {
    int label = 0;
    PolygonId polygon = PolygonId::Upper; // polygon the path leaves
    Vec2 hit;
    double param = 0.0; // along the crossed edge of `polygon`
    double time = 0.0;
};

struct Trajectory {
    int n = 0;
    SurfacePoint start;
    Direction direction;
    std::vector<Crossing> crossings;
    std::vector<WalkPiece> pieces;
    bool periodic = false;
    std::optional<std::size_t> period;

    std::vector<int> letters() const;
    // One period of the cutting sequence, starting at the first crossing.
    std::optional<std::vector<int>> cyclic_word() const;
};

// Traces `max_crossings` crossings from `start` in direction theta (raw, not
// normalized). Throws CornerHit when the path comes within `corner_delta` of a
// vertex. The trajectory is flagged periodic once a crossing repeats the first
// one (same edge, same polygon, hit within 1e-9); tracing still continues to
// `max_crossings`.
Trajectory trace(const Surface& surface, SurfacePoint start, double theta, std::size_t max_crossings,
                 double corner_delta = Tolerance{}.corner);

// Start on edge S_label of polygon p at parameter t.
Trajectory trace_from_edge(const Surface& surface, PolygonId p, int label, double t, double theta,
                           std::size_t max_crossings, double corner_delta = Tolerance{}.corner);

struct PrimedCrossing {
    int label = 0;
    PolygonId polygon = PolygonId::Upper;
    Vec2 hit;
    double time = 0.0;
    // Window position of the original letter this crossing derives from.
    long source = 0;
};

struct DerivedTrajectory {
    std::vector<PrimedCrossing> crossings;
    // Derived letters attributed to window positions 1..N-2, primes removed.
    std::vector<int> interior;
    // Derived word over one period, when the input is periodic.
    std::optional<std::vector<int>> cyclic;
};

// Records which primed edges the trajectory crosses. The trajectory is
// extended by `margin` crossings in both directions so that every window
// position has a well-defined attribution. Requires theta in [0, pi/n).
DerivedTrajectory derive_geometric(const Surface& surface, const Trajectory& trajectory, std::size_t margin = 8);

// A trajectory rotated into the sector, with the rotation that did it.
struct NormalizedTrajectory {
    Normalization normalization;
    Trajectory trajectory;
};
NormalizedTrajectory normalize_trajectory(const Surface& surface, const Trajectory& trajectory);

// Geometric derivation in any direction: rotate into the sector, derive, and
// carry the derived letters back through the inverse label permutation.
DerivedTrajectory derive_geometric_any(const Surface& surface, const Trajectory& trajectory, std::size_t margin = 8);

// The image of a trajectory under the derivation map F o Psi^-1, whose
// derivative is (-1, 2 cot(pi/n); 0, 1). Its cutting sequence is the derived
// sequence of the input.
Trajectory derivation_image(const Surface& surface, const Trajectory& trajectory, std::size_t max_crossings);

// Point map of F o Psi^-1 on the surface.
SurfacePoint derivation_map(const Surface& surface, SurfacePoint q);

// Periodic orbit search: start at parameter t on edge S_label of P_U and look
// for a direction in (lo, hi) whose orbit returns to the start after exactly
// |word| crossings with the given cyclic word. Grid scan plus bisection on
// the return offset.
struct OrbitFixture {
    int label = 0;
    double t = 0.0;
    double theta = 0.0;
};
std::optional<OrbitFixture> find_periodic_orbit(const Surface& surface, const std::vector<int>& cyclic_word, int label,
                                                double t, double lo, double hi, int grid = 4000);

// Least rotation of a cyclic word.
std::vector<int> least_rotation(const std::vector<int>& word);

} // namespace oddgon
