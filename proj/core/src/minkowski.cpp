#include "fareybary/minkowski.hpp"

namespace fareybary {

Rat minkowski_q(const Rat& x, long depth) {
    if (sgn(x) < 0 || x > 1) throw DomainError("minkowski_q domain is [0,1]");
    if (depth < 1) throw DomainError("depth must be positive");
    // endpoints of the current Farey interval and of its dyadic image
    Int lp = 0, lq = 1, rp = 1, rq = 1;
    Rat lo(0), hi(1);
    if (x == 0) return lo;
    if (x == 1) return hi;
    for (long k = 0; k < depth; ++k) {
        Int mp = lp + rp, mq = lq + rq;
        Rat mediant = make_rat(mp, mq);
        Rat mid = (lo + hi) / 2;
        if (x == mediant) return mid;
        if (x < mediant) {
            rp = mp;
            rq = mq;
            hi = mid;
        } else {
            lp = mp;
            lq = mq;
            lo = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace fareybary
