#include <doctest.h>

#include <vector>

#include "fareybary/minkowski.hpp"

using namespace fareybary;

TEST_CASE("question-mark endpoint and mediant values") {
    CHECK(minkowski_q(Rat(0), 8) == 0);
    CHECK(minkowski_q(Rat(1), 8) == 1);
    CHECK(minkowski_q(make_rat(1, 2), 8) == make_rat(1, 2));
    CHECK(minkowski_q(make_rat(1, 3), 8) == make_rat(1, 4));
    CHECK(minkowski_q(make_rat(2, 3), 8) == make_rat(3, 4));
    // golden-mean tail: ?(F_k/F_{k+1}) are dyadic
    CHECK(minkowski_q(make_rat(2, 5), 16) == make_rat(3, 8));
    CHECK(minkowski_q(make_rat(3, 5), 16) == make_rat(5, 8));
    CHECK_THROWS_AS(minkowski_q(Rat(2), 8), DomainError);
    CHECK_THROWS_AS(minkowski_q(Rat(-1), 8), DomainError);
}

TEST_CASE("depth-limited values sit within the dyadic bound") {
    for (long q = 3; q <= 23; q += 2) {
        Rat x = make_rat(2, q);
        for (long d = 4; d <= 16; d += 4) {
            Rat coarse = minkowski_q(x, d);
            Rat fine = minkowski_q(x, d + 24);
            CHECK(rat_abs(coarse - fine) <= make_rat(1, Int(1) << d));
        }
    }
}

TEST_CASE("question-mark is monotone on sampled rationals") {
    std::vector<Rat> xs;
    for (long q = 1; q <= 40; ++q)
        for (long p = 0; p <= q; ++p) xs.push_back(make_rat(p, q));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Rat prev(-1);
    for (const Rat& x : xs) {
        Rat v = minkowski_q(x, 64);
        if (x > 0) CHECK(v > prev);
        prev = v;
    }
}
