#pragma once

// Closed-form expressions for the double n-gon, templated on the scalar type
// so the same formulas can be evaluated in double or in an extended
// precision type (e.g. boost::multiprecision::cpp_bin_float_100).

#include <cmath>

namespace oddgon {

enum class PointFamily { UpperRight, UpperLeft, LowerRight, LowerLeft };

namespace closed_form {

template <class T>
T cot(T x) {
    using std::cos;
    using std::sin;
    return cos(x) / sin(x);
}

// cot(theta/2) sin(k theta) and 1 + 2 cos(theta) + ... + 2 cos((k-1) theta) + cos(k theta).
template <class T>
void telescoping(T theta, int k, T& lhs, T& rhs) {
    using std::cos;
    using std::sin;
    lhs = cot(theta / 2) * sin(k * theta);
    rhs = T(1);
    for (int i = 1; i < k; ++i) rhs += 2 * cos(i * theta);
    rhs += cos(k * theta);
}

// sum_{i=1..k} cot(alpha/2) sin(i alpha) and k + sum_{i=1..k} (2(k-i)+1) cos(i alpha).
template <class T>
void telescoping_sum(T alpha, int k, T& lhs, T& rhs) {
    using std::cos;
    using std::sin;
    lhs = T(0);
    rhs = T(k);
    for (int i = 1; i <= k; ++i) {
        lhs += cot(alpha / 2) * sin(i * alpha);
        rhs += (2 * (k - i) + 1) * cos(i * alpha);
    }
}

// Original coordinates of the k-th side point of the standard double n-gon.
template <class T>
void side_point(PointFamily family, T alpha, int k, T& x, T& y) {
    using std::cos;
    using std::sin;
    T c(0);
    T s(0);
    for (int i = 1; i <= k; ++i) {
        c += cos(i * alpha);
        s += sin(i * alpha);
    }
    switch (family) {
    case PointFamily::UpperRight: x = 1 + c; y = s; break;
    case PointFamily::UpperLeft: x = -c; y = s; break;
    case PointFamily::LowerRight: x = -cos(alpha) + c; y = sin(alpha) - s; break;
    case PointFamily::LowerLeft: x = -1 - cos(alpha) - c; y = sin(alpha) - s; break;
    }
}

// x-coordinate of the image of the k-th side point under M_n.
template <class T>
T sheared_x(PointFamily family, T alpha, int k) {
    using std::cos;
    T sum3(0);
    T sum1(0);
    for (int i = 1; i <= k; ++i) {
        sum3 += (4 * (k - i) + 3) * cos(i * alpha);
        sum1 += (4 * (k - i) + 1) * cos(i * alpha);
    }
    switch (family) {
    case PointFamily::UpperRight: return 2 * k + 1 + sum3;
    case PointFamily::UpperLeft: return 2 * k + sum1;
    case PointFamily::LowerRight: return 2 - 2 * k + cos(alpha) - sum1;
    case PointFamily::LowerLeft: return 1 - 2 * k + cos(alpha) - sum3;
    }
    return T(0);
}

// Direct application of M_n to the side point: x + 2 cot(alpha/2) y.
template <class T>
T matrix_sheared_x(PointFamily family, T alpha, int k) {
    T x;
    T y;
    side_point(family, alpha, k, x, y);
    return x + 2 * cot(alpha / 2) * y;
}

} // namespace closed_form
} // namespace oddgon
