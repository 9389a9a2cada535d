#include "fareybary/farey.hpp"

namespace fareybary {

Mat3 step_matrix(CaseTag tag, const Int& a) {
    if (a < 1) throw DomainError("step matrix requires a >= 1");
    Mat3 m;
    switch (tag) {
        case CaseTag::I:
            m.a = {{{1, 0, a}, {0, 1, a}, {0, 0, 1}}};
            break;
        case CaseTag::II:
            m.a = {{{0, 0, 1}, {1, 0, a}, {0, 1, a}}};
            break;
        case CaseTag::III:
            m.a = {{{1, 0, a}, {0, 0, 1}, {0, 1, a}}};
            break;
    }
    return m;
}

Subdivision subdivide(const TriangleState& t) {
    if (t.degenerate()) throw DomainError("cannot subdivide a degenerate triangle");
    LatticeVec center = farey_sum(t.v1, t.v2, t.v3);
    long d = t.depth + 1;
    return {
        {t.v1, t.v2, center, d},
        {t.v2, t.v3, center, d},
        {t.v1, t.v3, center, d},
    };
}

TriangleState replay(const ExpansionSequence& seq) {
    Mat3 m = base_matrix();
    Int raw = 0;
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        const auto& s = seq.steps[k];
        if (s.a < 1) throw DomainError("malformed sequence: a < 1");
        if (k > 0 && s.tag == CaseTag::I)
            throw DomainError("malformed sequence: case I after the first step");
        m = m * step_matrix(s.tag, s.a);
        raw += s.a;
    }
    if (!raw.fits_slong_p()) throw DomainError("sequence too deep to replay");
    return {m.col(0), m.col(1), m.col(2), raw.get_si()};
}

}  // namespace fareybary
