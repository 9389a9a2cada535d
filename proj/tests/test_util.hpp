#pragma once

// Shared helpers for the test suites: seeded sequence generators and
// frozen oracle values (computed once by independent routes and pinned).

#include <random>
#include <utility>
#include <vector>

#include "fareybary/geometry.hpp"
#include "fareybary/sequence.hpp"

namespace fbtest {

using namespace fareybary;

// Random valid compressed sequence with raw length in [1, max_raw]:
// any first case, II/III afterwards.
inline ExpansionSequence random_sequence(std::mt19937_64& eng, long max_raw) {
    std::uniform_int_distribution<long> total_d(1, max_raw);
    std::uniform_int_distribution<int> first_d(0, 2), later_d(1, 2), a_d(1, 4);
    long target = total_d(eng);
    ExpansionSequence seq;
    long used = 0;
    while (used < target) {
        long a = std::min<long>(a_d(eng), target - used);
        CaseTag tag = seq.steps.empty() ? static_cast<CaseTag>(first_d(eng))
                                        : static_cast<CaseTag>(later_d(eng));
        seq.steps.push_back({Int(a), tag});
        used += a;
    }
    return seq;
}

struct Correspondence {
    const char* farey;  // depth-3 Farey vertex (center of a depth-2 triangle)
    const char* bary;   // matching depth-3 bary vertex (centroid)
};

// The nine depth-3 vertex correspondences of the delta_3 stage map, one per
// depth-2 sequence, derived from the vertex matrices and frozen.
inline const std::vector<Correspondence>& delta3_table() {
    static const std::vector<Correspondence> table = {
        {"4/7,1/7", "14/27,1/27"},    // I,I
        {"2/3,2/9", "20/27,4/27"},    // I,II
        {"5/9,2/9", "11/27,4/27"},    // I,III
        {"6/7,3/7", "26/27,13/27"},   // II,I
        {"7/9,4/9", "23/27,16/27"},   // II,II
        {"7/9,1/3", "23/27,7/27"},    // II,III
        {"4/7,3/7", "14/27,13/27"},   // III,I
        {"2/3,4/9", "20/27,16/27"},   // III,II
        {"5/9,1/3", "11/27,7/27"},    // III,III
    };
    return table;
}

// Power-iteration oracle output at depth 50 for the pure 1(II) period:
// ratios of the new-vertex column of M0 * A(II,1)^50, within 1e-18 of the
// true fixed point.
inline PlanePoint tribonacci_oracle_point() {
    return {make_rat(Int("777078835884"), Int("1006781585533")),
            make_rat(Int("10562230626642"), Int("25169539638325"))};
}

}  // namespace fbtest
