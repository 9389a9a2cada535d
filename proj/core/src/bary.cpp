#include "fareybary/bary.hpp"

#include <array>

namespace fareybary {

Mat3 bary_step_matrix(CaseTag tag) {
    Mat3 m;
    switch (tag) {
        case CaseTag::I:
            m.a = {{{3, 0, 1}, {0, 3, 1}, {0, 0, 1}}};
            break;
        case CaseTag::II:
            m.a = {{{0, 0, 1}, {3, 0, 1}, {0, 3, 1}}};
            break;
        case CaseTag::III:
            m.a = {{{3, 0, 1}, {0, 0, 1}, {0, 3, 1}}};
            break;
    }
    return m;
}

Subdivision bary_subdivide(const TriangleState& t) {
    if (t.degenerate()) throw DomainError("cannot subdivide a degenerate triangle");
    LatticeVec sum = farey_sum(t.v1, t.v2, t.v3);
    long d = t.depth + 1;
    return {
        {t.v1.scaled(3), t.v2.scaled(3), sum, d},
        {t.v2.scaled(3), t.v3.scaled(3), sum, d},
        {t.v1.scaled(3), t.v3.scaled(3), sum, d},
    };
}

namespace {

Mat3 mat_pow(Mat3 base, Int e) {
    Mat3 acc = Mat3::identity();
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
        e >>= 1;
        if (sgn(e) > 0) base = base * base;
    }
    return acc;
}

// C(tag) * C(I)^(a-1): one compressed bary step.
Mat3 bary_compressed_matrix(CaseTag tag, const Int& a) {
    if (a < 1) throw DomainError("compressed step with a < 1");
    return bary_step_matrix(tag) * mat_pow(bary_step_matrix(CaseTag::I), a - 1);
}

Mat3 product_over(const ExpansionSequence& seq) {
    Mat3 m = Mat3::identity();
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        const auto& s = seq.steps[k];
        if (k > 0 && s.tag == CaseTag::I)
            throw DomainError("malformed sequence: case I after the first step");
        m = m * bary_compressed_matrix(s.tag, s.a);
    }
    return m;
}

using RatVec = std::array<Rat, 3>;

RatVec mat_apply(const Mat3& m, const RatVec& v) {
    RatVec out;
    for (int i = 0; i < 3; ++i) out[i] = m.a[i][0] * v[0] + m.a[i][1] * v[1] + m.a[i][2] * v[2];
    return out;
}

}  // namespace

TriangleState bary_replay(const ExpansionSequence& seq) {
    Mat3 m = base_matrix() * product_over(seq);
    Int raw = seq.raw_length();
    if (!raw.fits_slong_p()) throw DomainError("sequence too deep to replay");
    return {m.col(0), m.col(1), m.col(2), raw.get_si()};
}

Rat bary_area(const ExpansionSequence& seq) {
    Int s = seq.raw_length();
    if (!s.fits_ulong_p()) throw DomainError("sequence too deep for area");
    return make_rat(1, 2 * pow3(s.get_ui()));
}

ExpansionSequence bary_expand(const PlanePoint& p, long max_raw_depth) {
    return detail::expand_with(p, max_raw_depth,
                               [](const TriangleState& t) { return bary_subdivide(t); });
}

PlanePoint periodic_fixed_point(const ExpansionSequence& preperiod, const ExpansionSequence& period) {
    if (period.steps.empty()) throw DomainError("period must be nonempty");
    Mat3 P = product_over(period);
    Int s = period.raw_length();
    if (!s.fits_ulong_p()) throw DomainError("period too long");
    Int lambda = pow3(s.get_ui());

    // char poly x^3 - tr x^2 + m2 x - det, then the multiplicity k of
    // (x - lambda) and the cofactor g with g(lambda) != 0.
    Int tr = P.a[0][0] + P.a[1][1] + P.a[2][2];
    Int m2 = P.a[0][0] * P.a[1][1] - P.a[0][1] * P.a[1][0] + P.a[0][0] * P.a[2][2] -
             P.a[0][2] * P.a[2][0] + P.a[1][1] * P.a[2][2] - P.a[1][2] * P.a[2][1];
    Int d = P.det();
    std::array<Int, 4> c = {-d, m2, -tr, Int(1)};  // lowest degree first

    std::vector<Int> cur(c.begin(), c.end());
    int mult = 0;
    while (cur.size() > 1) {
        // synthetic division by (x - lambda); exact when lambda is a root
        std::vector<Int> quot(cur.size() - 1);
        Int carry = 0;
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = cur[i] + carry * lambda;
            quot[i - 1] = carry;
        }
        Int rem = cur[0] + carry * lambda;
        if (sgn(rem) != 0) break;
        cur = std::move(quot);
        ++mult;
    }
    if (mult == 0) throw DomainError("period matrix lost its 3^s eigenvalue (internal)");

    // Project (1,1,1) onto the dominant eigenspace: the limit direction
    // of the matrix's normalized columns.
    RatVec v = {Rat(1), Rat(1), Rat(1)};
    RatVec w;
    if (mult == 3) {
        w = v;
    } else {
        // g(P) annihilates the complementary invariant subspace entirely.
        RatVec gv = {Rat(0), Rat(0), Rat(0)};
        for (std::size_t i = cur.size(); i-- > 0;) {
            gv = mat_apply(P, gv);
            for (int j = 0; j < 3; ++j) gv[j] += cur[i] * v[j];
        }
        if (mult == 1) {
            w = gv;
        } else {
            // mult == 2: h = g * (a0 + b0 (x - lambda)) with h(lambda) = 1,
            // h'(lambda) = 0, so h(P)v = a0 g(P)v + b0 (P - lambda I) g(P)v.
            Rat g_at = Rat(cur[0]) + Rat(cur[1]) * lambda;
            Rat gp_at = Rat(cur[1]);
            Rat a0 = 1 / g_at;
            Rat b0 = -gp_at / (g_at * g_at);
            RatVec pgv = mat_apply(P, gv);
            for (int j = 0; j < 3; ++j) w[j] = a0 * gv[j] + b0 * (pgv[j] - lambda * gv[j]);
        }
    }

    // verify P w = lambda w exactly
    RatVec pw = mat_apply(P, w);
    bool ok = false;
    for (int j = 0; j < 3; ++j) {
        if (pw[j] != lambda * w[j]) throw DomainError("degenerate period: projection is not an eigenvector");
        if (sgn(w[j]) != 0) ok = true;
    }
    if (!ok) throw DomainError("degenerate period: zero projection");

    // map through the preperiod and the base matrix
    Mat3 front = base_matrix() * product_over(preperiod);
    RatVec u = mat_apply(front, w);
    if (sgn(u[2]) == 0) throw DomainError("degenerate period: point at infinity");
    if (sgn(u[2]) < 0)
        for (auto& e : u) e = -e;
    return {u[0] / u[2], u[1] / u[2]};
}

}  // namespace fareybary
