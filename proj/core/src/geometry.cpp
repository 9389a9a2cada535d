#include "fareybary/geometry.hpp"

#include <cmath>
#include <sstream>

namespace fareybary {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational");
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto valid = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw DomainError("malformed rational: " + text);
    Int n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        throw DomainError("malformed rational: " + text);
    return make_rat(n, d);
}

std::string format_rat(const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

std::string to_decimal(const Rat& r, int digits) {
    Int scale = pow_int(10, static_cast<unsigned long>(digits));
    // round half up on the absolute value
    Int num = r.get_num() * scale * 2;
    Int adj = sgn(num) >= 0 ? Int(num + r.get_den()) : Int(num - r.get_den());
    Int rounded = adj / (r.get_den() * 2);
    bool neg = sgn(rounded) < 0;
    Int mag = abs(rounded);
    Int whole = mag / scale;
    Int frac = mag % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0') fs.pop_back();
    std::string out = (neg ? "-" : "") + whole.get_str();
    if (!fs.empty()) out += "." + fs;
    return out;
}

double log2_approx(const Int& z) {
    if (sgn(z) <= 0) throw DomainError("log2 of non-positive integer");
    long exp = 0;
    double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

LatticeVec LatticeVec::normalized() const {
    Int g = gcd(gcd(p, q), r);
    if (sgn(g) == 0) return *this;
    if (sgn(g) < 0) g = -g;
    return {p / g, q / g, r / g};
}

Mat3 Mat3::identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
    return m;
}

Mat3 Mat3::operator*(const Mat3& rhs) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int acc = 0;
            for (int k = 0; k < 3; ++k) acc += a[i][k] * rhs.a[k][j];
            out.a[i][j] = std::move(acc);
        }
    return out;
}

Mat3 Mat3::from_cols(const LatticeVec& c0, const LatticeVec& c1, const LatticeVec& c2) {
    Mat3 m;
    m.a = {{{c0.p, c1.p, c2.p}, {c0.q, c1.q, c2.q}, {c0.r, c1.r, c2.r}}};
    return m;
}

Int Mat3::det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::array<PlanePoint, 3> TriangleState::points() const {
    return {vec_to_point(v1), vec_to_point(v2), vec_to_point(v3)};
}

LatticeVec farey_sum(const LatticeVec& a, const LatticeVec& b, const LatticeVec& c) {
    return {a.p + b.p + c.p, a.q + b.q + c.q, a.r + b.r + c.r};
}

PlanePoint vec_to_point(const LatticeVec& v) {
    if (sgn(v.r) == 0) throw DomainError("degenerate vector: r = 0");
    return {make_rat(v.p, v.r), make_rat(v.q, v.r)};
}

LatticeVec point_to_vec(const PlanePoint& p) {
    Int den = lcm(p.x.get_den(), p.y.get_den());
    LatticeVec v{p.x.get_num() * (den / p.x.get_den()), p.y.get_num() * (den / p.y.get_den()), den};
    return v.normalized();
}

TriangleState base_triangle() {
    return {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, 0};
}

Mat3 base_matrix() { return base_triangle().matrix(); }

bool in_base_triangle(const PlanePoint& p) {
    return p.x <= 1 && p.y <= p.x && sgn(p.y) >= 0;
}

Rat triangle_area(const TriangleState& t) {
    Int d = t.det();
    if (sgn(d) == 0) return Rat(0);
    if (sgn(d) < 0) d = -d;
    return make_rat(d, 2 * t.radii_product());
}

Rat shoelace_area(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
    Rat twice = a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y);
    return rat_abs(twice) / 2;
}

std::array<Rat, 3> barycentric_coords(const PlanePoint& p, const TriangleState& t) {
    auto pts = t.points();
    auto signed2 = [](const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
        return Rat(a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    };
    Rat total = signed2(pts[0], pts[1], pts[2]);
    if (sgn(total) == 0) throw DomainError("barycentric coordinates of a degenerate triangle");
    Rat l1 = signed2(p, pts[1], pts[2]) / total;
    Rat l2 = signed2(pts[0], p, pts[2]) / total;
    Rat l3 = signed2(pts[0], pts[1], p) / total;
    return {l1, l2, l3};
}

std::string format_point(const PlanePoint& p) {
    return format_rat(p.x) + "," + format_rat(p.y);
}

PlanePoint parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw DomainError("point must be \"x,y\": " + text);
    return {parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1))};
}

}  // namespace fareybary
