#include "fareybary/delta.hpp"

#include <algorithm>
#include <limits>

namespace fareybary {

namespace {

constexpr long kMaxSteps = 200000;

Rat linf_dist(const PlanePoint& a, const PlanePoint& b) {
    return std::max(rat_abs(a.x - b.x), rat_abs(a.y - b.y));
}

PlanePoint push_coords(const std::array<Rat, 3>& c, const TriangleState& target) {
    auto pts = target.points();
    return {c[0] * pts[0].x + c[1] * pts[1].x + c[2] * pts[2].x,
            c[0] * pts[0].y + c[1] * pts[1].y + c[2] * pts[2].y};
}

// Integer barycentric coordinates of a rational point with respect to the
// base triangle: p = (u1 v1 + u2 v2 + u3 v3) / (u1 + u2 + u3). Subdivision
// steps act on these by exact integer subtractions, which turns both
// expansions into division-style algorithms: a whole run of a case-I steps
// collapses into one update. Farey: (u1,u2,u3) -> (u1 - a u3, u2 - a u3, u3);
// bary: the retained coordinates shed t3 (3^k - 1)/2 while t3 triples.
struct Coords {
    Int u1, u2, u3;
};

Coords base_coords(const PlanePoint& p) {
    LatticeVec v = point_to_vec(p);
    Coords u{v.r - v.p, v.p - v.q, v.q};
    if (sgn(u.u1) < 0 || sgn(u.u2) < 0 || sgn(u.u3) < 0)
        throw DomainError("point outside the base triangle");
    return u;
}

Mat3 mat_pow(Mat3 base, Int e) {
    Mat3 acc = Mat3::identity();
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
        e >>= 1;
        if (sgn(e) > 0) base = base * base;
    }
    return acc;
}

TriangleState advance(const TriangleState& t, const Mat3& step, long raw) {
    Mat3 m = t.matrix() * step;
    long limit = std::numeric_limits<long>::max();
    long depth = raw > limit - t.depth ? limit : t.depth + raw;
    return {m.col(0), m.col(1), m.col(2), depth};
}

PlanePoint midpoint(const PlanePoint& a, const PlanePoint& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

// Shared refinement driver. The source expansion runs on exact integer
// vector weights (u1, u2, u3): p's vector is proportional to
// u1 v1 + u2 v2 + u3 v3, and because the new vertex vector is the plain
// column sum, a subdivision step is an integer subtraction on the weights.
// That turns a whole run of case-I steps into one division, which matters:
// rational points reach an all-I tail (the third weight hits zero) through
// runs whose length can rival the coordinate denominators.
//
// Both triangles mirror each compressed step, and refinement continues
// until BOTH diameters are at or below tol. The stronger stop makes the
// inverse composition honest: the inverse walk shadows the forward
// sequence while its triangles still contain the original point, so it
// re-converges within the same tolerance instead of drifting by the wider
// source triangle.
//
// A gigantic case-I run is exact on the Farey triangle (entries grow
// linearly in the run length) but cannot be materialized on the bary side
// (entries grow like 3^a). There the run is cut at `cap` steps and the
// remaining travel of the drifting third vertex goes into a slack term:
// every later image is a convex combination of the vertices, so the cut
// costs at most that travel, which lands in the reported error bound.
DeltaResult transfer_rational(const PlanePoint& p, const Rat& tol, bool farey_source) {
    if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");
    Coords u = base_coords(p);
    TriangleState src = base_triangle();
    TriangleState dst = base_triangle();
    DeltaResult res;
    Rat slack(0);
    Int depth = 0;
    // cap so that each cut contributes well under tol (the third vertex
    // travels at most 3^-cap of the triangle size per cut)
    long cap = 8;
    {
        Rat budget = tol / 1024;
        Rat cell(1);
        while (cell > budget && cap < 4096) {
            cell /= 3;
            ++cap;
        }
    }
    // affine plane weights of the point with respect to the source
    // triangle are u_i r_i; bary vertices share one denominator, so there
    // they reduce to the u_i themselves
    auto affine = [&]() -> std::array<Rat, 3> {
        Rat a1(u.u1), a2(u.u2), a3(u.u3);
        if (farey_source) {
            a1 *= src.v1.r;
            a2 *= src.v2.r;
            a3 *= src.v3.r;
        }
        Rat total = a1 + a2 + a3;
        return {a1 / total, a2 / total, a3 / total};
    };
    auto finish = [&](PlanePoint value, const Rat& err, bool exact) {
        res.value = std::move(value);
        res.error_bound = err;
        res.exact = exact;
        res.depth_used = depth.fits_slong_p() ? depth.get_si() : std::numeric_limits<long>::max();
        return res;
    };
    auto src_step = [&](CaseTag tag, const Int& a) {
        return farey_source ? step_matrix(tag, a) : bary_step_matrix(tag);
    };
    auto dst_step = [&](CaseTag tag, const Int& a) {
        return farey_source ? bary_step_matrix(tag) : step_matrix(tag, a);
    };
    for (long iter = 0; iter < kMaxSteps; ++iter) {
        if (sgn(u.u3) == 0) {
            // pinned to the persistent (v1, v2) edge: every further step is
            // case I on both sides and the image never moves again
            auto pts = dst.points();
            auto c = affine();
            PlanePoint value{c[0] * pts[0].x + c[1] * pts[1].x,
                             c[0] * pts[0].y + c[1] * pts[1].y};
            return finish(std::move(value), slack, sgn(slack) == 0);
        }
        // A mid-walk image may only be returned while the target is exact:
        // after a cut the image can sit a hair off the true cell chain, and
        // the inverse walk would stop shadowing at an unbounded depth. Once
        // a cut happened we ride to the pin, whose value is slack-accurate.
        if (sgn(slack) == 0) {
            Rat dst_diam = linf_diameter(dst);
            if (dst_diam <= tol && linf_diameter(src) <= tol)
                return finish(push_coords(affine(), dst), dst_diam, false);
        }
        if (u.u1 >= u.u3 && u.u2 >= u.u3) {
            // case-I run
            Int a;
            if (farey_source) {
                a = u.u1 / u.u3;
                Int a2 = u.u2 / u.u3;
                if (a2 < a) a = a2;
                res.boundary = res.boundary || u.u1 == a * u.u3 || u.u2 == a * u.u3;
                u = {u.u1 - a * u.u3, u.u2 - a * u.u3, u.u3};
            } else {
                // bary weights shed t3 (3^a - 1)/2 while t3 gains 3^a, so
                // runs here are logarithmically short
                a = 0;
                Int shed = 0, t3k = u.u3;
                for (;;) {
                    Int next_shed = shed + t3k;  // condition for step a+1
                    if (u.u1 >= next_shed && u.u2 >= next_shed) {
                        ++a;
                        shed = std::move(next_shed);
                        t3k *= 3;
                    } else {
                        break;
                    }
                }
                // only the final step of a run can sit on an internal edge
                res.boundary = res.boundary || u.u1 == shed || u.u2 == shed;
                u = {u.u1 - shed, u.u2 - shed, std::move(t3k)};
            }
            depth += a;
            long raw = a.fits_slong_p() ? a.get_si() : std::numeric_limits<long>::max();
            if (farey_source) {
                // materializing 3^a on the bary side is fine into the tens
                // of thousands of steps; only truly gigantic runs get cut
                constexpr long kFullRun = 30000;
                src = advance(src, step_matrix(CaseTag::I, a), raw);
                if (a <= kFullRun) {
                    dst = advance(dst, mat_pow(bary_step_matrix(CaseTag::I), a), raw);
                } else {
                    dst = advance(dst, mat_pow(bary_step_matrix(CaseTag::I), cap), cap);
                    auto pts = dst.points();
                    slack += linf_dist(pts[2], midpoint(pts[0], pts[1]));
                }
            } else {
                src = advance(src, mat_pow(bary_step_matrix(CaseTag::I), a), raw);
                dst = advance(dst, step_matrix(CaseTag::I, a), raw);
            }
        } else if (u.u2 >= u.u1 && u.u3 >= u.u1) {
            // case II: new weights relative to (v2, v3, center)
            res.boundary = res.boundary || u.u1 == u.u2;
            Int k = farey_source ? u.u1 : 3 * u.u1;
            u = {u.u2 - u.u1, u.u3 - u.u1, std::move(k)};
            depth += 1;
            src = advance(src, src_step(CaseTag::II, 1), 1);
            dst = advance(dst, dst_step(CaseTag::II, 1), 1);
        } else {
            // case III (the minimal weight is u2)
            Int k = farey_source ? u.u2 : 3 * u.u2;
            u = {u.u1 - u.u2, u.u3 - u.u2, std::move(k)};
            depth += 1;
            src = advance(src, src_step(CaseTag::III, 1), 1);
            dst = advance(dst, dst_step(CaseTag::III, 1), 1);
        }
    }
    throw DomainError("tolerance unreachable at step cap");
}

}  // namespace

Rat linf_diameter(const TriangleState& t) {
    auto pts = t.points();
    return std::max({linf_dist(pts[0], pts[1]), linf_dist(pts[1], pts[2]), linf_dist(pts[0], pts[2])});
}

PlanePoint delta_n(const PlanePoint& p, long n) {
    if (!in_base_triangle(p)) throw DomainError("point outside the base triangle");
    ExpansionSequence seq = expand(p, n);
    TriangleState far = replay(seq);
    TriangleState bar = bary_replay(seq);
    return push_coords(barycentric_coords(p, far), bar);
}

DeltaResult delta(const PlanePoint& p, const Rat& tol) {
    return transfer_rational(p, tol, true);
}

DeltaResult delta_inverse(const PlanePoint& q, const Rat& tol) {
    return transfer_rational(q, tol, false);
}

DeltaResult delta(const AlgebraicPoint& p, const Rat& tol) {
    if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");
    if (!detail::in_base(p)) throw DomainError("point outside the base triangle");
    TriangleState far = base_triangle();
    TriangleState bar = base_triangle();
    DeltaResult res;
    for (long depth = 0;; ++depth) {
        for (int i = 0; i < 3; ++i) {
            const LatticeVec& v = (i == 0) ? far.v1 : (i == 1) ? far.v2 : far.v3;
            if (detail::equals_vertex(p, v)) {
                res.value = bar.points()[i];
                res.error_bound = 0;
                res.depth_used = depth;
                res.exact = true;
                return res;
            }
        }
        auto far_pts = far.points();
        if (orient(p, far_pts[0], far_pts[1]) == 0) {
            // pinned to the (v1, v2) edge: bound the affine image through
            // the point's coordinate enclosure instead of triangle nesting
            auto bar_pts = bar.points();
            bool vertical = far_pts[0].x == far_pts[1].x;
            Rat span = vertical ? far_pts[1].y - far_pts[0].y : far_pts[1].x - far_pts[0].x;
            Rat width = tol / 16;
            for (int iter = 0; iter < 512; ++iter) {
                RatInterval ci = vertical ? p.y_interval(width) : p.x_interval(width);
                Rat base = vertical ? far_pts[0].y : far_pts[0].x;
                RatInterval t{(ci.lo - base) / span, (ci.hi - base) / span};
                if (t.lo > t.hi) std::swap(t.lo, t.hi);
                auto lerp = [&](const Rat& tt) {
                    return PlanePoint{bar_pts[0].x + tt * (bar_pts[1].x - bar_pts[0].x),
                                      bar_pts[0].y + tt * (bar_pts[1].y - bar_pts[0].y)};
                };
                PlanePoint lo_pt = lerp(t.lo), hi_pt = lerp(t.hi);
                Rat err = linf_dist(lo_pt, hi_pt);
                if (err <= tol) {
                    res.value = lerp(t.mid());
                    res.error_bound = err;
                    res.depth_used = depth;
                    res.exact = false;
                    return res;
                }
                width /= 16;
            }
            throw DomainError("edge-pinned algebraic point did not converge");
        }
        Rat diam = linf_diameter(bar);
        if (diam <= tol) {
            // any point of the enclosing triangle works; use its centroid
            auto pts = bar.points();
            res.value = {(pts[0].x + pts[1].x + pts[2].x) / 3, (pts[0].y + pts[1].y + pts[2].y) / 3};
            res.error_bound = diam;
            res.depth_used = depth;
            res.exact = false;
            return res;
        }
        if (depth >= kMaxSteps) throw DomainError("tolerance unreachable at depth cap");
        Subdivision s = subdivide(far);
        LocateResult loc = detail::locate_in(p, s);
        res.boundary = res.boundary || loc.boundary;
        far = s.child(loc.tag);
        bar = bary_subdivide(bar).child(loc.tag);
    }
}

}  // namespace fareybary
