#include <benchmark/benchmark.h>

#include "graft/parallel.hpp"
#include "graft/scheme.hpp"
#include "graft/suite.hpp"
#include "graft/transform.hpp"

using namespace graft;

namespace {

IntersectionTensor cyclic_tensor(std::size_t n) {
    return intersection_numbers(validate(gen_cyclic(n)));
}

void bm_proassoc(benchmark::State& state, Exec exec) {
    const IntersectionTensor N = cyclic_tensor(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto res = proassociativity_scan(N, exec);
        benchmark::DoNotOptimize(res);
    }
}

void bm_regularity(benchmark::State& state, Exec exec) {
    const AssociationScheme sch = validate(gen_cyclic(static_cast<std::size_t>(state.range(0))));
    IntersectionTensor N = intersection_numbers(sch);
    const Kernel k(sch, std::move(N));
    const std::vector<Rational> scalars = {0, 1, 2};
    for (auto _ : state) {
        auto res = regularity_scan(k, scalars, exec);
        benchmark::DoNotOptimize(res);
    }
}

void bm_sweep(benchmark::State& state, Exec exec) {
    const AssociationScheme sch = validate(gen_hamming(3, 2));
    IntersectionTensor N = intersection_numbers(sch);
    const Kernel k(sch, std::move(N));
    std::vector<std::pair<DimObject, DimObject>> pairs;
    for (int i = 0; i < 64; ++i) {
        DimObject f, g;
        for (std::size_t a = 0; a < k.index_count(); ++a) {
            f.dims.push_back((i + a) % 4);
            g.dims.push_back((i * 3 + a) % 3);
        }
        pairs.emplace_back(std::move(f), std::move(g));
    }
    for (auto _ : state) {
        auto res = multiplicativity_sweep(k, pairs, exec);
        benchmark::DoNotOptimize(res);
    }
}

} // namespace

BENCHMARK_CAPTURE(bm_proassoc, serial, Exec::Serial)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_proassoc, openmp, Exec::OpenMP)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_sweep, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_sweep, openmp, Exec::OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_regularity, serial, Exec::Serial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_regularity, openmp, Exec::OpenMP)->Arg(3)->Unit(benchmark::kMillisecond);
