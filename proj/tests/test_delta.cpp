#include <doctest.h>

#include <random>

#include "fareybary/delta.hpp"
#include "test_util.hpp"

using namespace fareybary;

TEST_CASE("stage-2 golden correspondences") {
    CHECK(delta_n(parse_point("2/3,1/3"), 2) == parse_point("2/3,1/3"));
    CHECK(delta_n(parse_point("3/5,1/5"), 2) == parse_point("5/9,1/9"));
    CHECK(delta_n(parse_point("4/5,2/5"), 2) == parse_point("8/9,4/9"));
    CHECK(delta_n(parse_point("3/5,2/5"), 2) == parse_point("5/9,4/9"));
}

TEST_CASE("stage-3 vertex correspondences, both directions") {
    Rat tol = make_rat(1, 1000000);
    for (const auto& row : fbtest::delta3_table()) {
        PlanePoint farey = parse_point(row.farey);
        PlanePoint bary = parse_point(row.bary);
        CHECK(delta_n(farey, 3) == bary);
        DeltaResult inv = delta_inverse(bary, tol);
        CHECK(inv.exact);
        CHECK(inv.value == farey);
    }
}

TEST_CASE("every new vertex maps to its counterpart, all depth <= 3 cells") {
    // enumerate all sequences: the Farey center of each cell must map
    // exactly onto the bary centroid of the corresponding cell
    std::vector<ExpansionSequence> level{{}};
    for (int d = 0; d < 3; ++d) {
        std::vector<ExpansionSequence> next;
        for (const auto& seq : level) {
            for (CaseTag tag : {CaseTag::I, CaseTag::II, CaseTag::III}) {
                if (!seq.steps.empty() && tag == CaseTag::I) {
                    ExpansionSequence ext = seq;
                    ext.steps.back().a += 1;
                    next.push_back(std::move(ext));
                } else {
                    ExpansionSequence ext = seq;
                    ext.steps.push_back({1, tag});
                    next.push_back(std::move(ext));
                }
            }
        }
        for (const auto& seq : next) {
            TriangleState far = replay(seq);
            TriangleState bar = bary_replay(seq);
            PlanePoint center = vec_to_point(farey_sum(far.v1, far.v2, far.v3));
            PlanePoint centroid = vec_to_point(farey_sum(bar.v1, bar.v2, bar.v3));
            long n = far.depth + 1;
            CHECK(delta_n(center, n) == centroid);
        }
        level = std::move(next);
    }
}

TEST_CASE("vertices are stable across deeper stages") {
    for (long n = 1; n <= 6; ++n)
        CHECK(delta_n(parse_point("2/3,1/3"), n) == parse_point("2/3,1/3"));
    for (long n = 2; n <= 6; ++n)
        CHECK(delta_n(parse_point("3/5,1/5"), n) == parse_point("5/9,1/9"));
}

TEST_CASE("corners are fixed") {
    Rat tol = make_rat(1, 1000);
    for (const char* c : {"0,0", "1,0", "1,1"}) {
        DeltaResult r = delta(parse_point(c), tol);
        CHECK(r.exact);
        CHECK(r.value == parse_point(c));
    }
}

TEST_CASE("monotone refinement: deeper images stay in the stage-n triangle") {
    PlanePoint p = parse_point("1/2,1/6");
    for (long n = 1; n <= 4; ++n) {
        TriangleState enclosing = bary_replay(expand(p, n));
        auto pts = enclosing.points();
        for (long m = n; m <= n + 4; ++m) CHECK(triangle_contains(delta_n(p, m), pts));
    }
}

TEST_CASE("delta limit evaluation with certified bounds") {
    Rat tol = make_rat(1, Int(1000000000));

    // a point whose expansion starts with a long 1(II) train: the enclosing
    // triangles shrink below tol before the rational tail pins
    PlanePoint p = fbtest::tribonacci_oracle_point();
    DeltaResult r = delta(p, tol);
    CHECK_FALSE(r.exact);
    CHECK(r.error_bound <= tol);
    CHECK(sgn(r.error_bound) > 0);
    // the reported value agrees with the stage map at the used depth
    CHECK(r.value == delta_n(p, r.depth_used));
    // and sits next to the image of the exact periodic point
    CHECK(rat_abs(r.value.x - make_rat(5, 6)) <= 2 * tol);
    CHECK(rat_abs(r.value.y - make_rat(1, 2)) <= 2 * tol);

    DeltaResult v = delta(parse_point("2/3,1/3"), tol);
    CHECK(v.exact);
    CHECK(v.value == parse_point("2/3,1/3"));
    CHECK(v.boundary);

    CHECK_THROWS_AS(delta(parse_point("1/4,1/2"), tol), DomainError);
    CHECK_THROWS_AS(delta(p, Rat(0)), DomainError);
}

TEST_CASE("rational points pin or hit: delta is eventually exact") {
    // (1/2,1/6) lies on the internal edge through (0,0) and (3/5,1/5), so
    // its expansion is 2(I) followed by case-I steps forever and the image
    // freezes; the inverse walks back to the point exactly
    PlanePoint p = parse_point("1/2,1/6");
    Rat tol = make_rat(1, 1000000);
    DeltaResult r = delta(p, tol);
    CHECK(r.exact);
    CHECK(r.error_bound == 0);
    CHECK(r.value == delta_n(p, 40));  // stage maps are constant past the pin
    DeltaResult back = delta_inverse(r.value, tol);
    CHECK(back.exact);
    CHECK(back.value == p);
}

TEST_CASE("delta pins the boundary edges exactly") {
    Rat tol = make_rat(1, 1000);
    for (const char* c : {"1/4,0", "1,1/2", "2/5,2/5", "9/11,0"}) {
        PlanePoint p = parse_point(c);
        DeltaResult r = delta(p, tol);
        CHECK(r.exact);
        CHECK(r.value == p);
        DeltaResult ri = delta_inverse(p, tol);
        CHECK(ri.exact);
        CHECK(ri.value == p);
    }
}

TEST_CASE("inverse is exact on bary vertices") {
    Rat tol = make_rat(1, 1000000);
    DeltaResult r = delta_inverse(parse_point("5/9,1/9"), tol);
    CHECK(r.exact);
    CHECK(r.value == parse_point("3/5,1/5"));
}

TEST_CASE("round trip within summed tolerances") {
    Rat tol = make_rat(1, Int(1000000000));
    std::mt19937_64 eng(2024);
    std::uniform_int_distribution<long> num(1, (1 << 22) - 1);
    for (int iter = 0; iter < 12; ++iter) {
        long a = num(eng), b = num(eng);
        if (a < b) std::swap(a, b);
        if (a == b) continue;
        PlanePoint p{make_rat(a, 1 << 22), make_rat(b, 1 << 22)};
        DeltaResult fwd = delta(p, tol);
        DeltaResult back = delta_inverse(fwd.value, tol);
        CHECK(rat_abs(back.value.x - p.x) <= 2 * tol);
        CHECK(rat_abs(back.value.y - p.y) <= 2 * tol);
    }
}

TEST_CASE("gigantic case-I runs stay cheap and honestly bounded") {
    Rat tol = make_rat(1, Int(1000000000));

    // run of ~2^50 steps: the exact image has an unrepresentable
    // denominator, so the result is inexact with a tiny certified bound
    Int u1 = Int(1) << 50, u2 = (Int(1) << 50) + 12345, u3 = 1;
    Int den = u1 + u2 + u3;
    PlanePoint p{make_rat(u2 + u3, den), make_rat(u3, den)};
    DeltaResult r = delta(p, tol);
    CHECK_FALSE(r.exact);
    CHECK(sgn(r.error_bound) > 0);
    CHECK(r.error_bound <= tol / 1024);

    // a run of 20000 steps is still materialized exactly end to end
    Int w1 = 20000 * 7 + 3, w2 = 20000 * 11 + 5, w3 = 7;
    Int den2 = w1 + w2 + w3;
    PlanePoint q{make_rat(w2 + w3, den2), make_rat(w3, den2)};
    DeltaResult f = delta(q, tol);
    CHECK(f.exact);
    DeltaResult b = delta_inverse(f.value, tol);
    CHECK(b.exact);
    CHECK(b.value == q);
}

TEST_CASE("linf diameter") {
    CHECK(linf_diameter(base_triangle()) == 1);
    // vertices (1,1), (2/3,1/3), (8/9,4/9): widest pair differs by 2/3 in y
    TriangleState t2 = bary_replay(parse_sequence("1(II),1(II)"));
    CHECK(linf_diameter(t2) == make_rat(2, 3));
}
