// Serial vs OpenMP kernel comparison on the sizes the oracle actually uses.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pdmho/kernels.hpp"
#include "pdmho/model.hpp"
#include "pdmho/oracle.hpp"

namespace {

using namespace pdmho;
using kernels::Exec;

struct Problem {
    std::vector<double> diag, off2, off, x, y;
    explicit Problem(std::size_t n) : diag(n), off2(n - 1), off(n - 1), x(n), y(n) {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> u(0.5, 2.0);
        for (auto& v : diag) v = 4.0 * u(rng);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            off[i] = -u(rng);
            off2[i] = off[i] * off[i];
        }
        for (auto& v : x) v = u(rng);
    }
};

void bm_sturm(benchmark::State& state, Exec exec) {
    Problem p(static_cast<std::size_t>(state.range(0)));
    std::vector<double> shifts{1.0, 2.0, 3.0, 4.0};
    std::vector<int> counts(shifts.size());
    for (auto _ : state) {
        kernels::sturm_counts(p.diag, p.off2, shifts, counts, exec);
        benchmark::DoNotOptimize(counts.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * shifts.size());
}

void bm_dot(benchmark::State& state, Exec exec) {
    Problem p(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        double d = kernels::dot(p.x, p.diag, exec);
        benchmark::DoNotOptimize(d);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_apply(benchmark::State& state, Exec exec) {
    Problem p(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        kernels::tridiag_apply(p.diag, p.off, p.x, p.y, exec);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_assemble(benchmark::State& state, Exec exec) {
    ModelParams mp;
    mp.alpha = 3.0;
    mp.omega = 4.0;
    mp.sector = RadialSector{3, 0};
    const DerivedParams dp = derive_params(mp);
    kernels::set_default_exec(exec);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        SLDiscretization d = assemble(dp, 1e-3, n);
        benchmark::DoNotOptimize(d.diag.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(bm_sturm, serial, Exec::serial)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK_CAPTURE(bm_sturm, openmp, Exec::openmp)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK_CAPTURE(bm_dot, serial, Exec::serial)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK_CAPTURE(bm_dot, openmp, Exec::openmp)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK_CAPTURE(bm_apply, serial, Exec::serial)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK_CAPTURE(bm_apply, openmp, Exec::openmp)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK_CAPTURE(bm_assemble, serial, Exec::serial)->Arg(1 << 20);
BENCHMARK_CAPTURE(bm_assemble, openmp, Exec::openmp)->Arg(1 << 20);

BENCHMARK_MAIN();
