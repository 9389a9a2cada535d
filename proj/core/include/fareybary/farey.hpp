#pragma once

#include <array>
#include <optional>

#include "fareybary/geometry.hpp"
#include "fareybary/sequence.hpp"

namespace fareybary {

// Step matrix A(case, a); |det| = 1 for every case and a >= 1.
Mat3 step_matrix(CaseTag tag, const Int& a);

struct Subdivision {
    TriangleState child_I, child_II, child_III;
    const TriangleState& child(CaseTag tag) const {
        switch (tag) {
            case CaseTag::I: return child_I;
            case CaseTag::II: return child_II;
            default: return child_III;
        }
    }
};

// One Farey refinement: the three children tile t and satisfy
// child(tag).matrix() == t.matrix() * step_matrix(tag, 1).
Subdivision subdivide(const TriangleState& t);

struct LocateResult {
    CaseTag tag;
    bool boundary;  // p on an internal edge or equal to the Farey-center
};

namespace detail {

// Child selection with the fixed I < II < III tie-break, for any point
// type exposing sign_of(c0, c1, c2). Throws if p is outside the parent.
template <class P>
LocateResult locate_in(const P& p, const Subdivision& sub) {
    std::array<std::array<PlanePoint, 3>, 3> pts = {
        sub.child_I.points(), sub.child_II.points(), sub.child_III.points()};
    int hits = 0;
    std::optional<CaseTag> first;
    for (int i = 0; i < 3; ++i) {
        if (triangle_contains(p, pts[i])) {
            ++hits;
            if (!first) first = static_cast<CaseTag>(i);
        }
    }
    if (!first) throw DomainError("point outside triangle in locate");
    return {*first, hits > 1};
}

// p equal to the plane point of v, by exact sign evaluation.
template <class P>
bool equals_vertex(const P& p, const LatticeVec& v) {
    if (sgn(v.r) == 0) return false;
    Rat vx = make_rat(v.p, v.r);
    Rat vy = make_rat(v.q, v.r);
    return p.sign_of(-vx, 1, 0) == 0 && p.sign_of(-vy, 0, 1) == 0;
}

template <class P>
bool in_base(const P& p) {
    // 1 - x >= 0, x - y >= 0, y >= 0
    return p.sign_of(1, -1, 0) >= 0 && p.sign_of(0, 1, -1) >= 0 && p.sign_of(0, 0, 1) >= 0;
}

// Shared driver for both partitions; Subdivider: TriangleState -> Subdivision.
template <class P, class Subdivider>
ExpansionSequence expand_with(const P& p, long max_raw_depth, Subdivider&& subdivider) {
    if (max_raw_depth < 1) throw DomainError("expansion depth must be positive");
    if (!in_base(p)) throw DomainError("point outside the base triangle");
    ExpansionSequence out;
    std::vector<CaseTag> raw;
    TriangleState state = base_triangle();
    for (long n = 0; n < max_raw_depth; ++n) {
        if (equals_vertex(p, state.v1) || equals_vertex(p, state.v2) ||
            equals_vertex(p, state.v3)) {
            out.steps = codec_compress(raw);
            out.termination = Termination::VertexHit;
            out.vertex_depth = n;
            return out;
        }
        Subdivision sub = subdivider(state);
        LocateResult loc = locate_in(p, sub);
        out.touched_boundary = out.touched_boundary || loc.boundary;
        raw.push_back(loc.tag);
        state = sub.child(loc.tag);
    }
    out.steps = codec_compress(raw);
    if (equals_vertex(p, state.v1) || equals_vertex(p, state.v2) || equals_vertex(p, state.v3)) {
        out.termination = Termination::VertexHit;
        out.vertex_depth = max_raw_depth;
    } else {
        out.termination = Termination::DepthLimit;
    }
    return out;
}

}  // namespace detail

// The child of t containing p, tie-break I < II < III.
template <class P>
LocateResult locate(const P& p, const TriangleState& t) {
    return detail::locate_in(p, subdivide(t));
}

// Farey expansion of p, stopping at a vertex hit or at max_raw_depth.
template <class P>
ExpansionSequence expand(const P& p, long max_raw_depth) {
    return detail::expand_with(p, max_raw_depth, [](const TriangleState& t) { return subdivide(t); });
}

// M0 * A(step_1) * ... * A(step_k) as a triangle state;
// |det| = 1 and r1 <= r2 <= r3 throughout.
TriangleState replay(const ExpansionSequence& seq);

}  // namespace fareybary
