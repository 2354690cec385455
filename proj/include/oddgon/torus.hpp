#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddgon/derivation.hpp"
#include "oddgon/geometry.hpp"

namespace oddgon {

// Unit square torus. A marks a crossing of a horizontal edge (y integer),
// B a crossing of a vertical edge (x integer).
struct TorusWord {
    std::string letters;
    Topology topology = Topology::Cyclic;

    bool operator==(const TorusWord&) const = default;
};

struct TorusCrossing {
    char letter = 'A';
    double time = 0.0;
    Vec2 hit; // in the universal cover
};

struct TorusTrajectory {
    Vec2 start;
    Vec2 velocity;
    std::vector<TorusCrossing> crossings;
    // Crossings per period, for lines whose velocity is a primitive integer vector.
    std::optional<std::size_t> period;

    TorusWord window() const;
    std::optional<TorusWord> cyclic() const;
};

// The line from `start` in direction theta in [0, pi/2). Throws CornerHit when
// it passes within `delta` of a lattice point.
TorusTrajectory torus_trace(Vec2 start, double theta, std::size_t max_crossings, double delta = Tolerance{}.corner);

// The line of slope p/q (velocity (q, p)), which closes up after p + q crossings
// when gcd(p, q) = 1.
TorusTrajectory torus_trace_slope(Vec2 start, int p, int q, std::size_t max_crossings, double delta = Tolerance{}.corner);

// Removes one B from every maximal run of B's between two consecutive A's.
// A window keeps the stretch from its first A to its last A.
TorusWord torus_derive_rule(const TorusWord& word);

// Crossings of the image line under (1, -1; 0, 1): the square cut along its
// diagonal and reassembled, then un-sheared. Windows cover the same stretch
// as torus_derive_rule. Requires a direction in [0, pi/4]; slope 1 maps to
// a vertical line.
TorusWord torus_derive_geometric(const TorusTrajectory& trajectory);

bool same_torus_word(const TorusWord& a, const TorusWord& b);

} // namespace oddgon
