#include "fareybary/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fareybary/bary.hpp"

namespace fareybary {

std::vector<RatioRecord> ratio_series(const ExpansionSequence& seq) {
    std::vector<RatioRecord> out;
    Mat3 m = base_matrix();
    Int s = 0;
    out.push_back({0, Int(0), Int(1), Rat(1)});
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        const auto& step = seq.steps[k];
        if (k > 0 && step.tag == CaseTag::I)
            throw DomainError("malformed sequence: case I after the first step");
        m = m * step_matrix(step.tag, step.a);
        s += step.a;
        if (!s.fits_ulong_p()) throw DomainError("sequence too deep for ratio series");
        Int prod = m.a[2][0] * m.a[2][1] * m.a[2][2];
        out.push_back({static_cast<long>(k) + 1, s, prod, make_rat(prod, pow3(s.get_ui()))});
    }
    return out;
}

TLDecomposition build_TL(const TriangleState& t, const Int& L) {
    if (L < 1) throw DomainError("T_L construction needs L >= 1");
    if (t.degenerate()) throw DomainError("T_L construction needs a nondegenerate triangle");
    auto scaled_sum = [](const LatticeVec& a, const Int& ka, const LatticeVec& b, const Int& kb,
                         const LatticeVec& c, const Int& kc) {
        return LatticeVec{ka * a.p + kb * b.p + kc * c.p, ka * a.q + kb * b.q + kc * c.q,
                          ka * a.r + kb * b.r + kc * c.r};
    };
    long d = t.depth + 1;
    TLDecomposition out{
        {t.v1, t.v2, scaled_sum(t.v1, L, t.v2, L, t.v3, 1), d},
        {t.v2, t.v3, scaled_sum(t.v1, 1, t.v2, L, t.v3, L), d},
        {t.v1, t.v3, scaled_sum(t.v1, L, t.v2, 1, t.v3, L), d},
        Rat(0),
    };
    out.residual_area =
        triangle_area(t) - triangle_area(out.t1) - triangle_area(out.t2) - triangle_area(out.t3);
    return out;
}

bool lemma_inequality_check(const Int& x, const Int& y, const Int& z, const Rat& L) {
    if (x < 1 || y < 1 || z < 1) throw DomainError("radii must be positive integers");
    if (L < 1) throw DomainError("L must be >= 1");
    Rat X(x), Y(y), Z(z);
    Rat alpha = X * X * Y + X * X * Z + X * Y * Y + X * Z * Z + Y * Y * Z + Y * Z * Z;
    Rat xyz = X * Y * Z;
    Rat cubes = X * X * X + Y * Y * Y + Z * Z * Z;

    // final reduction of the lemma proof
    bool final_ineq = 2 * L * xyz <= alpha + L * L * cubes + L * L * xyz + xyz;

    // area route on the unimodular model: twice-areas are reciprocals of
    // the corner radii products
    Rat t1 = 1 / (X * (L * X + Y + L * Z) * Z);
    Rat t2 = 1 / (X * Y * (L * X + L * Y + Z));
    Rat t3 = 1 / ((X + L * Y + L * Z) * Y * Z);
    Rat residual = 1 / xyz - t1 - t2 - t3;
    bool area_ineq = residual <= ((L - 1) / L) * (1 / xyz);

    // displayed closed form of the residual, checked as an exact identity
    Rat numer = (L - 1) * (L * (L + 1) * alpha + 2 * xyz * (L * L + L + 1));
    Rat denom = L * (L * L + L + 1) * alpha + L * L * cubes + xyz * (3 * L * L + 2 * L * L * L + 1);
    bool identity = residual * xyz == numer / denom;

    return final_ineq && area_ineq && identity;
}

Quantiles quantiles_of(std::vector<double> values) {
    if (values.empty()) throw DomainError("quantiles of an empty sample");
    std::sort(values.begin(), values.end());
    auto at = [&](double q) {
        double pos = q * static_cast<double>(values.size() - 1);
        std::size_t i = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(i);
        if (i + 1 >= values.size()) return values.back();
        return values[i] * (1.0 - frac) + values[i + 1] * frac;
    };
    return {values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Rat u64_to_unit_rat(std::uint64_t v) {
    Int num(static_cast<unsigned long>(v));
    Int den = Int(1) << 64;
    return make_rat(num, den);
}

}  // namespace

PlanePoint sample_triangle_point(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    std::mt19937_64 engine(splitmix64(state));
    for (;;) {
        std::uint64_t xu = engine();
        std::uint64_t yu = engine();
        if (xu >= yu) return {u64_to_unit_rat(xu), u64_to_unit_rat(yu)};
    }
}

StatSummary monte_carlo(std::uint64_t samples, long raw_depth, std::uint64_t seed) {
    if (samples < 1) throw DomainError("need at least one sample");
    if (raw_depth < 1) throw DomainError("raw depth must be positive");
    const double log2_3 = std::log2(3.0);
    std::vector<double> s_over_k, log3_ratio;
    s_over_k.reserve(samples);
    log3_ratio.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
        PlanePoint p = sample_triangle_point(seed, i);
        ExpansionSequence seq = expand(p, raw_depth);
        if (seq.steps.empty()) continue;  // vertex hit at depth 0; measure-zero
        double s = seq.raw_length().get_d();
        double k = static_cast<double>(seq.steps.size());
        s_over_k.push_back(s / k);
        TriangleState st = replay(seq);
        double log2_prod = log2_approx(st.radii_product());
        log3_ratio.push_back(log2_prod / log2_3 - s);
    }
    StatSummary out;
    out.samples = samples;
    out.raw_depth = raw_depth;
    out.seed = seed;
    out.s_over_k = quantiles_of(std::move(s_over_k));
    out.log3_ratio = quantiles_of(std::move(log3_ratio));
    return out;
}

}  // namespace fareybary
