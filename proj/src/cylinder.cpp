#include "oddgon/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace oddgon {

IdentityCheck telescoping_identity(double theta, int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
    if (!std::isfinite(theta) || std::abs(std::sin(theta / 2)) < 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "theta at a pole of cot(theta/2)");
    }
    IdentityCheck out;
    closed_form::telescoping(theta, k, out.lhs, out.rhs);
    return out;
}

IdentityCheck identity_sum(double alpha, int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
    if (!std::isfinite(alpha) || std::abs(std::sin(alpha / 2)) < 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "alpha at a pole of cot(alpha/2)");
    }
    IdentityCheck out;
    closed_form::telescoping_sum(alpha, k, out.lhs, out.rhs);
    return out;
}

namespace {

// Length of the intersection of the horizontal line y with a convex polygon.
double slice_width(std::span<const Vec2> poly, double y) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        if ((a.y - y) * (b.y - y) > 0 || a.y == b.y) continue;
        const double x = a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return hi > lo ? hi - lo : 0.0;
}

} // namespace

std::vector<Cylinder> decompose_cylinders(const Surface& surface) {
    std::vector<Cylinder> out;
    const int m = surface.spec().half();
    for (int k = 1; k <= m; ++k) {
        const double up_lo = surface.level_y(PolygonId::Upper, k - 1);
        const double up_hi = surface.level_y(PolygonId::Upper, k);
        const double low_hi = surface.level_y(PolygonId::Lower, k - 1);
        const double low_lo = surface.level_y(PolygonId::Lower, k);
        Cylinder cyl;
        cyl.index = k;
        cyl.height = up_hi - up_lo;
        cyl.width = slice_width(surface.vertices(PolygonId::Upper), 0.5 * (up_lo + up_hi)) +
                    slice_width(surface.vertices(PolygonId::Lower), 0.5 * (low_lo + low_hi));
        cyl.modulus = cyl.width / cyl.height;
        cyl.y_low = up_lo;
        cyl.y_high = up_hi;
        out.push_back(cyl);
    }
    return out;
}

ShearMatrix veech_shear(int n) {
    const OddGonSpec spec(n);
    return {1.0, 2.0 / std::tan(spec.half_alpha()), 0.0, 1.0};
}

ShearMatrix veech_generator(int n) { return ShearMatrix{-1.0, 0.0, 0.0, 1.0} * veech_shear(n); }

double sheared_x(PointFamily family, int n, int k) {
    const OddGonSpec spec(n);
    if (k < 0 || k > spec.half()) throw Error(ErrorCode::InvalidArgument, "side point level out of range");
    return closed_form::sheared_x(family, spec.alpha(), k);
}

const char* family_name(PointFamily family) {
    switch (family) {
    case PointFamily::UpperRight: return "upper-right";
    case PointFamily::UpperLeft: return "upper-left";
    case PointFamily::LowerRight: return "lower-right";
    case PointFamily::LowerLeft: return "lower-left";
    }
    return "?";
}

double VertexGuide::x(PointFamily family, int k) const {
    switch (family) {
    case PointFamily::UpperRight: return upper_right.at(k);
    case PointFamily::UpperLeft: return upper_left.at(k);
    case PointFamily::LowerRight: return lower_right.at(k);
    case PointFamily::LowerLeft: return lower_left.at(k);
    }
    return 0.0;
}

namespace {

// Copy of the other polygon sharing edge S_label with `base` in the plane.
PolygonCopy glue(const Surface& surface, const PolygonCopy& base, int label) {
    return {other(base.polygon), base.offset - surface.identification_offset(base.polygon, label), 0};
}

} // namespace

VertexGuide build_vertex_guide(const Surface& surface) {
    const int n = surface.n();
    const int m = surface.spec().half();
    VertexGuide guide;
    guide.n = n;
    guide.upper_right.resize(m + 1);
    guide.upper_left.resize(m + 1);
    guide.lower_right.resize(m + 1);
    guide.lower_left.resize(m + 1);

    auto record = [&](PolygonCopy copy, int level) {
        copy.level = level;
        const PolygonId p = copy.polygon;
        auto& right = p == PolygonId::Upper ? guide.upper_right : guide.lower_right;
        auto& left = p == PolygonId::Upper ? guide.upper_left : guide.lower_left;
        right[level] = surface.right_point(p, level).x + copy.offset.x;
        left[level] = surface.left_point(p, level).x + copy.offset.x;
        guide.max_bar_drift = std::max(guide.max_bar_drift, std::abs(copy.offset.y));
        guide.copies.push_back(copy);
    };

    // Images of P_U. Level 0 is S_1 itself, which the shear fixes.
    PolygonCopy upper{PolygonId::Upper, {0.0, 0.0}, 0};
    record(upper, 0);
    for (int k = 2; k <= m + 1; ++k) {
        const PolygonCopy lower = glue(surface, upper, k);
        if (k == 2) {
            // The P_L copy on S_2 carries the image of P_L's top edge.
            record(lower, 0);
        } else {
            guide.copies.push_back(lower);
        }
        upper = glue(surface, lower, n + 2 - k);
        record(upper, k - 1);
    }

    // Images of P_L. Level 1 (the bar on the x-axis) is fixed.
    PolygonCopy lower{PolygonId::Lower, {0.0, 0.0}, 0};
    record(lower, 1);
    for (int k = 3; k <= m + 1; ++k) {
        const PolygonCopy up = glue(surface, lower, k);
        guide.copies.push_back(up);
        lower = glue(surface, up, n + 2 - k);
        record(lower, k - 1);
    }
    return guide;
}

ReassemblyReport verify_reassembly(int n, double tol) {
    const Surface surface = Surface::build(n);
    const VertexGuide guide = build_vertex_guide(surface);
    const ShearMatrix shear = veech_shear(n);
    const int m = surface.spec().half();

    ReassemblyReport report;
    report.n = n;
    report.tol = tol;
    report.max_bar_drift = guide.max_bar_drift;
    for (PointFamily family : {PointFamily::UpperRight, PointFamily::UpperLeft, PointFamily::LowerRight,
                               PointFamily::LowerLeft}) {
        const bool upper = family == PointFamily::UpperRight || family == PointFamily::UpperLeft;
        const bool right = family == PointFamily::UpperRight || family == PointFamily::LowerRight;
        const PolygonId poly = upper ? PolygonId::Upper : PolygonId::Lower;
        for (int k = 0; k <= m; ++k) {
            const Vec2 v = right ? surface.right_point(poly, k) : surface.left_point(poly, k);
            const Vec2 image = shear.apply(v);
            const double residual = std::abs(guide.x(family, k) - image.x);
            if (image.y != v.y) report.y_identical = false;
            if (residual > report.max_residual || report.worst_vertex.empty()) {
                report.max_residual = residual;
                std::ostringstream name;
                name << family_name(family) << " k=" << k;
                report.worst_vertex = name.str();
            }
        }
    }
    report.pass = report.max_residual < tol && report.y_identical && report.max_bar_drift < tol;
    return report;
}

} // namespace oddgon
