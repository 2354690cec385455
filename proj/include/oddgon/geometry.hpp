#pragma once

#include <cmath>
#include <optional>

namespace oddgon {

// Plane vector / point. Coordinates are unit-free: polygon edges have length 1.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Direction angle of v folded into [0, pi): lines, not rays.
double line_angle(Vec2 v);

// Tolerances shared by every geometric predicate.
struct Tolerance {
    double eps = 1e-9;     // general predicate slack
    double corner = 1e-12; // distance to a cone point that invalidates a trajectory
};

struct Segment {
    Vec2 a;
    Vec2 b;

    Vec2 direction() const { return b - a; }
    double length() const { return distance(a, b); }
    Vec2 at(double s) const { return a + (b - a) * s; }
    Vec2 midpoint() const { return at(0.5); }
};

// Parameters of the intersection of two segments: p = s.at(u) = t.at(v).
struct SegmentHit {
    double u;
    double v;
};

// Intersection of two non-parallel segments, endpoints included within eps
// (measured in segment parameter). Parallel or collinear pairs return nullopt.
std::optional<SegmentHit> intersect(const Segment& s, const Segment& t, double eps = 0.0);

// True when the segments cross at a point interior to both (parameters
// strictly inside (eps, 1 - eps)).
bool crosses_properly(const Segment& s, const Segment& t, double eps = 1e-9);

// True when the two segments lie on the same line and overlap in more than a point.
bool overlaps_collinear(const Segment& s, const Segment& t, double eps = 1e-9);

} // namespace oddgon
