#include <doctest.h>

#include <random>

#include "fareybary/geometry.hpp"

using namespace fareybary;

TEST_CASE("farey_sum is the raw componentwise vertex sum") {
    LatticeVec a{0, 0, 1}, b{1, 0, 1}, c{1, 1, 1};
    LatticeVec s = farey_sum(a, b, c);
    CHECK(s == LatticeVec{2, 1, 3});
    CHECK(vec_to_point(s) == PlanePoint{make_rat(2, 3), make_rat(1, 3)});

    LatticeVec v{2, 1, 3};
    CHECK(farey_sum(v, v, v) == LatticeVec{6, 3, 9});  // collinear degenerate, not reduced

    CHECK(farey_sum({1, 0, 2}, {0, 0, 1}, {1, 1, 1}) == LatticeVec{2, 1, 4});
}

TEST_CASE("vector/point correspondence") {
    CHECK(vec_to_point({2, 1, 3}) == PlanePoint{make_rat(2, 3), make_rat(1, 3)});
    CHECK(vec_to_point({0, 0, 1}) == PlanePoint{Rat(0), Rat(0)});
    CHECK(point_to_vec({make_rat(3, 5), make_rat(1, 5)}) == LatticeVec{3, 1, 5});
    CHECK_THROWS_AS(vec_to_point({1, 1, 0}), DomainError);

    // round trips: vec_to_point . point_to_vec == id, the other way normalizes
    std::mt19937_64 eng(7);
    std::uniform_int_distribution<long> d(0, 400);
    for (int i = 0; i < 200; ++i) {
        long r = d(eng) + 1, p = d(eng) % (r + 1), q = d(eng) % (p + 1);
        LatticeVec v = LatticeVec{p, q, r}.normalized();
        CHECK(point_to_vec(vec_to_point(v)) == v);
        PlanePoint pt{make_rat(p, r), make_rat(q, r)};
        CHECK(vec_to_point(point_to_vec(pt)) == pt);
    }
}

TEST_CASE("triangle areas: determinant route equals shoelace route") {
    TriangleState base = base_triangle();
    CHECK(triangle_area(base) == make_rat(1, 2));

    TriangleState big{{0, 0, 1}, {2, 0, 1}, {2, 2, 1}, 0};
    CHECK(triangle_area(big) == Rat(2));

    TriangleState flat{{0, 0, 1}, {1, 1, 2}, {1, 1, 1}, 0};  // collinear
    CHECK(flat.degenerate());
    CHECK(triangle_area(flat) == Rat(0));

    std::mt19937_64 eng(11);
    std::uniform_int_distribution<long> d(0, 60);
    int checked = 0;
    while (checked < 100) {
        TriangleState t{{d(eng), d(eng), d(eng) + 1}, {d(eng), d(eng), d(eng) + 1},
                        {d(eng), d(eng), d(eng) + 1}, 0};
        if (t.degenerate()) continue;
        auto pts = t.points();
        CHECK(triangle_area(t) == shoelace_area(pts[0], pts[1], pts[2]));
        ++checked;
    }
}

TEST_CASE("barycentric coordinates") {
    TriangleState base = base_triangle();
    auto at_v1 = barycentric_coords(vec_to_point(base.v1), base);
    CHECK(at_v1[0] == 1);
    CHECK(at_v1[1] == 0);
    CHECK(at_v1[2] == 0);

    auto center = barycentric_coords({make_rat(2, 3), make_rat(1, 3)}, base);
    CHECK(center[0] == make_rat(1, 3));
    CHECK(center[1] == make_rat(1, 3));
    CHECK(center[2] == make_rat(1, 3));

    TriangleState child{{0, 0, 1}, {1, 0, 1}, {2, 1, 3}, 1};
    auto c = barycentric_coords({make_rat(1, 2), make_rat(1, 6)}, child);
    CHECK(c[0] == make_rat(1, 3));
    CHECK(c[1] == make_rat(1, 6));
    CHECK(c[2] == make_rat(1, 2));

    TriangleState flat{{0, 0, 1}, {1, 1, 2}, {1, 1, 1}, 0};
    CHECK_THROWS_AS(barycentric_coords({Rat(0), Rat(0)}, flat), DomainError);

    // coordinates always sum to exactly one
    std::mt19937_64 eng(13);
    std::uniform_int_distribution<long> d(0, 50);
    for (int i = 0; i < 100; ++i) {
        PlanePoint p{make_rat(d(eng), 51), make_rat(d(eng), 51)};
        auto bc = barycentric_coords(p, base);
        CHECK(bc[0] + bc[1] + bc[2] == 1);
    }
}

TEST_CASE("containment and orientation agree with barycentric signs") {
    TriangleState base = base_triangle();
    auto pts = base.points();
    bool boundary = false;
    CHECK(triangle_contains(PlanePoint{make_rat(1, 2), make_rat(1, 6)}, pts, &boundary));
    CHECK_FALSE(boundary);
    CHECK(triangle_contains(PlanePoint{make_rat(1, 2), make_rat(1, 2)}, pts, &boundary));
    CHECK(boundary);  // on the x = y edge
    CHECK_FALSE(triangle_contains(PlanePoint{make_rat(1, 4), make_rat(1, 2)}, pts));
}

TEST_CASE("rational text round trips") {
    CHECK(format_rat(parse_rat("22/7")) == "22/7");
    CHECK(format_rat(parse_rat("-6/4")) == "-3/2");
    CHECK(format_rat(parse_rat("5")) == "5");
    CHECK(format_point(parse_point("3/5,1/5")) == "3/5,1/5");
    CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rat("a/3"), DomainError);
    CHECK_THROWS_AS(parse_rat(""), DomainError);
    CHECK_THROWS_AS(parse_point("1/2"), DomainError);
    CHECK(to_decimal(make_rat(1, 3), 4) == "0.3333");
    CHECK(to_decimal(make_rat(-1, 2), 3) == "-0.5");
    CHECK(to_decimal(Rat(2), 3) == "2");
}
