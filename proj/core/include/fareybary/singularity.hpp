#pragma once

#include <cstdint>
#include <vector>

#include "fareybary/farey.hpp"
#include "fareybary/geometry.hpp"
#include "fareybary/sequence.hpp"

namespace fareybary {

// Per-prefix sample of the range/domain area ratio: ratio equals
// (bary area)/(Farey area) = r1 r2 r3 / 3^(s_n) exactly.
struct RatioRecord {
    long n = 0;          // compressed step index
    Int s_n;             // raw depth, sum of a_k
    Int radii_product;   // r1(n) r2(n) r3(n)
    Rat ratio;
};

std::vector<RatioRecord> ratio_series(const ExpansionSequence& seq);

// The three corner triangles of the T_L construction plus the exact
// residual area area(t) - sum of corner areas.
struct TLDecomposition {
    TriangleState t1, t2, t3;
    Rat residual_area;
};

TLDecomposition build_TL(const TriangleState& t, const Int& L);  // requires L >= 1

// Exact verification of the corner-triangle area lemma for one tuple of
// positive radii and rational L >= 1: the final polynomial inequality,
// the displayed rational-function identity, and the area-route bound
// residual <= ((L-1)/L) * area must all hold.
bool lemma_inequality_check(const Int& x, const Int& y, const Int& z, const Rat& L);

struct Quantiles {
    double min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct StatSummary {
    std::uint64_t samples = 0;
    long raw_depth = 0;
    std::uint64_t seed = 0;
    Quantiles s_over_k;     // raw length / compressed length per sample
    Quantiles log3_ratio;   // log base 3 of the area ratio per sample
};

// Uniform samples from the base triangle (denominator 2^64, rejection
// from the unit square), each expanded to raw_depth; per-sample engines
// are derived from (seed, index), so results are schedule-independent.
StatSummary monte_carlo(std::uint64_t samples, long raw_depth, std::uint64_t seed);

// The sampler itself, exposed for tests and the CLI.
PlanePoint sample_triangle_point(std::uint64_t seed, std::uint64_t index);

Quantiles quantiles_of(std::vector<double> values);

}  // namespace fareybary
