#include <benchmark/benchmark.h>

#include <random>

#include "fareybary/bary.hpp"
#include "fareybary/delta.hpp"
#include "fareybary/farey.hpp"
#include "fareybary/singularity.hpp"

using namespace fareybary;

namespace {

ExpansionSequence random_seq(std::mt19937_64& eng, long max_raw) {
    std::uniform_int_distribution<long> total_d(1, max_raw);
    std::uniform_int_distribution<int> first_d(0, 2), later_d(1, 2), a_d(1, 4);
    long target = total_d(eng);
    ExpansionSequence seq;
    long used = 0;
    bool first = true;
    while (used < target) {
        long a = std::min<long>(a_d(eng), target - used);
        seq.steps.push_back({Int(a), first ? static_cast<CaseTag>(first_d(eng))
                                           : static_cast<CaseTag>(later_d(eng))});
        used += a;
        first = false;
    }
    return seq;
}

void BM_expand(benchmark::State& state) {
    long depth = state.range(0);
    PlanePoint p = sample_triangle_point(1, 0);
    for (auto _ : state) {
        ExpansionSequence seq = expand(p, depth);
        benchmark::DoNotOptimize(seq.steps.size());
    }
}

void BM_replay(benchmark::State& state) {
    std::mt19937_64 eng(2);
    ExpansionSequence seq = random_seq(eng, state.range(0));
    for (auto _ : state) {
        TriangleState t = replay(seq);
        benchmark::DoNotOptimize(t.v3.r.get_mpz_t());
    }
}

void BM_bary_replay(benchmark::State& state) {
    std::mt19937_64 eng(3);
    ExpansionSequence seq = random_seq(eng, state.range(0));
    for (auto _ : state) {
        TriangleState t = bary_replay(seq);
        benchmark::DoNotOptimize(t.v3.r.get_mpz_t());
    }
}

void BM_delta(benchmark::State& state) {
    PlanePoint p = sample_triangle_point(4, 0);
    Rat tol = make_rat(1, pow_int(10, static_cast<unsigned long>(state.range(0))));
    for (auto _ : state) {
        DeltaResult r = delta(p, tol);
        benchmark::DoNotOptimize(r.depth_used);
    }
}

void BM_ratio_series(benchmark::State& state) {
    std::mt19937_64 eng(5);
    ExpansionSequence seq = random_seq(eng, state.range(0));
    for (auto _ : state) {
        auto recs = ratio_series(seq);
        benchmark::DoNotOptimize(recs.size());
    }
}

}  // namespace

BENCHMARK(BM_expand)->Arg(20)->Arg(40)->Arg(80);
BENCHMARK(BM_replay)->Arg(50)->Arg(200);
BENCHMARK(BM_bary_replay)->Arg(50)->Arg(200);
BENCHMARK(BM_delta)->Arg(6)->Arg(12);
BENCHMARK(BM_ratio_series)->Arg(50)->Arg(200);
BENCHMARK_MAIN();
