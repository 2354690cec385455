#pragma once

#include <string>
#include <vector>

#include "oddgon/closed_forms.hpp"
#include "oddgon/surface.hpp"

namespace oddgon {

// A horizontal cylinder: one strip of P_U glued to the congruent strip of P_L.
struct Cylinder {
    int index = 0; // 1-based, counted upward from S_1
    double width = 0.0;
    double height = 0.0;
    double modulus = 0.0;
    double y_low = 0.0; // y-interval of the strip inside P_U
    double y_high = 0.0;
};

struct ShearMatrix {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    ShearMatrix operator*(const ShearMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    double determinant() const { return a * d - b * c; }
};

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual() const { return lhs > rhs ? lhs - rhs : rhs - lhs; }
};

// cot(theta/2) sin(k theta) against 1 + 2 sum_{i<k} cos(i theta) + cos(k theta).
// Rejects theta where cot(theta/2) has a pole, and k < 1.
IdentityCheck telescoping_identity(double theta, int k);
// sum_{i<=k} cot(alpha/2) sin(i alpha) against k + sum_{i<=k} (2(k-i)+1) cos(i alpha).
IdentityCheck identity_sum(double alpha, int k);

// Measured from the polygons: each cylinder's width is the sum of the midline
// widths of its two strips.
std::vector<Cylinder> decompose_cylinders(const Surface& surface);

// M_n = (1, 2 cot(pi/n); 0, 1).
ShearMatrix veech_shear(int n);
// diag(-1, 1) M_n, the orientation-reversing Veech generator.
ShearMatrix veech_generator(int n);

// Closed-form x of the image of the k-th side point under M_n, 0 <= k <= (n-1)/2.
double sheared_x(PointFamily family, int n, int k);
const char* family_name(PointFamily family);

// A translated copy of P_U or P_L laid down while building the guide.
struct PolygonCopy {
    PolygonId polygon = PolygonId::Upper;
    Vec2 offset;
    int level = 0; // guide level the copy supplies
};

// Guide x-coordinates per polygon, side and level k = 0..(n-1)/2. The y of a
// guide point equals the y of the vertex it belongs to.
struct VertexGuide {
    int n = 0;
    std::vector<double> upper_right;
    std::vector<double> upper_left;
    std::vector<double> lower_right;
    std::vector<double> lower_left;
    std::vector<PolygonCopy> copies;
    // Largest |offset.y| over the copies; zero up to rounding when every bar
    // lands on its own horizontal line.
    double max_bar_drift = 0.0;

    double x(PointFamily family, int k) const;
};

// Builds the guide by gluing polygon copies edge to edge: for k = 2, 3, ...
// a P_L copy on S_k of the right-most P_U copy, then a P_U copy on
// S_{n+2-k} of that P_L copy (and dually for P_L). Never evaluates the
// closed forms.
VertexGuide build_vertex_guide(const Surface& surface);

struct ReassemblyReport {
    int n = 0;
    double tol = 0.0;
    double max_residual = 0.0;
    std::string worst_vertex;
    bool y_identical = true;
    double max_bar_drift = 0.0;
    bool pass = false;
};

// Compares every guide point with M_n applied to the original vertex.
ReassemblyReport verify_reassembly(int n, double tol);

} // namespace oddgon
