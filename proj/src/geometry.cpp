#include "oddgon/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace oddgon {

double line_angle(Vec2 v) {
    double a = std::atan2(v.y, v.x);
    if (a < 0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    return a;
}

std::optional<SegmentHit> intersect(const Segment& s, const Segment& t, double eps) {
    const Vec2 d1 = s.direction();
    const Vec2 d2 = t.direction();
    const double denom = cross(d1, d2);
    const double scale = norm(d1) * norm(d2);
    if (scale == 0.0 || std::abs(denom) <= 1e-14 * scale) return std::nullopt;
    const Vec2 w = t.a - s.a;
    const double u = cross(w, d2) / denom;
    const double v = cross(w, d1) / denom;
    if (u < -eps || u > 1 + eps || v < -eps || v > 1 + eps) return std::nullopt;
    return SegmentHit{u, v};
}

bool crosses_properly(const Segment& s, const Segment& t, double eps) {
    auto hit = intersect(s, t, 0.0);
    if (!hit) return false;
    return hit->u > eps && hit->u < 1 - eps && hit->v > eps && hit->v < 1 - eps;
}

bool overlaps_collinear(const Segment& s, const Segment& t, double eps) {
    const Vec2 d = s.direction();
    const double len = norm(d);
    if (len == 0.0) return false;
    // Both endpoints of t must lie on the line of s.
    if (std::abs(cross(d, t.a - s.a)) / len > eps) return false;
    if (std::abs(cross(d, t.b - s.a)) / len > eps) return false;
    const double p0 = dot(t.a - s.a, d) / (len * len);
    const double p1 = dot(t.b - s.a, d) / (len * len);
    const double lo = std::max(0.0, std::min(p0, p1));
    const double hi = std::min(1.0, std::max(p0, p1));
    return (hi - lo) * len > eps;
}

} // namespace oddgon
