#pragma once

#include <array>
#include <string>

#include "fareybary/rational.hpp"

namespace fareybary {

// Integer triple (p,q,r) standing for the plane point (p/r, q/r).
struct LatticeVec {
    Int p, q, r;

    bool operator==(const LatticeVec&) const = default;

    LatticeVec normalized() const;  // divides by gcd(p,q,r)
    LatticeVec scaled(const Int& k) const { return {p * k, q * k, r * k}; }
};

struct PlanePoint {
    Rat x, y;

    bool operator==(const PlanePoint&) const = default;

    // Exact sign of c0 + c1*x + c2*y. Shared "sign oracle" interface with
    // AlgebraicPoint so the partition engines work on either.
    int sign_of(const Rat& c0, const Rat& c1, const Rat& c2) const {
        return sgn(Rat(c0 + c1 * x + c2 * y));
    }
};

// Column-major 3x3 integer matrix: col(i) is vertex i of a triangle state.
struct Mat3 {
    std::array<std::array<Int, 3>, 3> a{};  // a[row][col]

    static Mat3 identity();
    Mat3 operator*(const Mat3& rhs) const;
    LatticeVec col(int j) const { return {a[0][j], a[1][j], a[2][j]}; }
    static Mat3 from_cols(const LatticeVec& c0, const LatticeVec& c1, const LatticeVec& c2);
    Int det() const;
    bool operator==(const Mat3&) const = default;
};

// Ordered vertex triple; columns of the paper-style vertex matrix.
struct TriangleState {
    LatticeVec v1, v2, v3;
    long depth = 0;

    Mat3 matrix() const { return Mat3::from_cols(v1, v2, v3); }
    Int det() const { return matrix().det(); }
    bool degenerate() const { return sgn(det()) == 0; }
    Int radii_product() const { return v1.r * v2.r * v3.r; }
    std::array<PlanePoint, 3> points() const;
};

// Componentwise vertex-vector sum; deliberately NOT reduced (the vertex
// matrices need raw column sums; normalize separately at presentation
// boundaries).
LatticeVec farey_sum(const LatticeVec& a, const LatticeVec& b, const LatticeVec& c);

PlanePoint vec_to_point(const LatticeVec& v);  // throws on r == 0
LatticeVec point_to_vec(const PlanePoint& p);  // unique normalized common-denominator form

// Base triangle {(x,y) : 1 >= x >= y >= 0} with vertices (0,0), (1,0), (1,1).
TriangleState base_triangle();
Mat3 base_matrix();
bool in_base_triangle(const PlanePoint& p);

// |det(M)| / (2 r1 r2 r3); exact, 0 for degenerate states.
Rat triangle_area(const TriangleState& t);

// Independent route: shoelace on the three plane points.
Rat shoelace_area(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);

// Exact (alpha, beta, gamma) with alpha+beta+gamma = 1; throws on
// degenerate t. All three in [0,1] iff p is in the closed triangle.
std::array<Rat, 3> barycentric_coords(const PlanePoint& p, const TriangleState& t);

// Sign of the signed doubled area of (a, b, p): >0 when p is left of a->b.
// Works for any point type exposing sign_of(c0, c1, c2).
template <class P>
int orient(const P& p, const PlanePoint& a, const PlanePoint& b) {
    // det(b-a, p-a) = c0 + c1*px + c2*py
    Rat c1 = a.y - b.y;
    Rat c2 = b.x - a.x;
    Rat c0 = a.x * (b.y - a.y) - a.y * (b.x - a.x);
    return p.sign_of(c0, c1, c2);
}

// Closed-triangle membership for any sign-oracle point type.
// boundary is set when p lies on one of the triangle's edge lines.
template <class P>
bool triangle_contains(const P& p, const std::array<PlanePoint, 3>& v, bool* boundary = nullptr) {
    int s = sgn(Rat((v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x)));
    if (s == 0) throw DomainError("degenerate triangle in containment test");
    int o01 = orient(p, v[0], v[1]);
    int o12 = orient(p, v[1], v[2]);
    int o20 = orient(p, v[2], v[0]);
    bool inside = (s * o01 >= 0) && (s * o12 >= 0) && (s * o20 >= 0);
    if (boundary) *boundary = inside && (o01 == 0 || o12 == 0 || o20 == 0);
    return inside;
}

std::string format_point(const PlanePoint& p);
PlanePoint parse_point(const std::string& text);  // "x,y" with rational parts

}  // namespace fareybary
