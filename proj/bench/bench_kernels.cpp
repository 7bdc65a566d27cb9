// Serial reference vs OpenMP kernels on Fig. 3 and Fig. 4 sized workloads.
#include <benchmark/benchmark.h>

#include <vector>

#include "rabi/dynamics.hpp"
#include "rabi/ed_oracle.hpp"
#include "rabi/kernels.hpp"

using namespace rabi;

namespace {

ModelParams fig_params(int fig) {
    ModelParams p;
    if (fig == 3) {
        p.ratio_r = 0.12;
        p.kappa0 = 0.02;
        p.alpha_sq = 106;
        p.beta = 0.4193;
    } else {
        p.ratio_r = 0.2;
        p.kappa0 = -0.7;
        p.alpha_sq = 250;
        p.beta = 0.4717;
    }
    return p;
}

template <kernels::Exec E>
void BM_TransitionProb(benchmark::State& state) {
    const ModelParams p = fig_params(static_cast<int>(state.range(0)));
    const auto times = uniform_grid(0.0, 1000.0, static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        auto ts = transition_prob(p, times, kDefaultTailTol, E);
        benchmark::DoNotOptimize(ts.channel("T").data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

template <kernels::Exec E>
void BM_RabiSeries(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> amp(n), freq(n);
    for (std::size_t i = 0; i < n; ++i) {
        amp[i] = 1.0 / static_cast<double>(n);
        freq[i] = 0.01 + 1e-4 * static_cast<double>(i);
    }
    const auto times = uniform_grid(0.0, 1000.0, static_cast<std::size_t>(state.range(1)));
    std::vector<double> out(times.size());
    for (auto _ : state) {
        kernels::rabi_series(E, amp, freq, times, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_EDEvolve(benchmark::State& state) {
    ModelParams p = fig_params(4);
    p.alpha_sq = 16;
    EDConfig ed;
    ed.n_max = static_cast<unsigned>(state.range(0));
    const auto times = uniform_grid(0.0, 1000.0, 2000);
    for (auto _ : state) {
        auto r = evolve(p, ed, times, {}, false);
        benchmark::DoNotOptimize(r.concurrence.channel("C").data());
    }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_TransitionProb, kernels::Exec::Serial)->Args({3, 2000})->Args({4, 2000})->Args({4, 20000});
BENCHMARK_TEMPLATE(BM_TransitionProb, kernels::Exec::Parallel)->Args({3, 2000})->Args({4, 2000})->Args({4, 20000});
BENCHMARK_TEMPLATE(BM_RabiSeries, kernels::Exec::Serial)->Args({128, 2000})->Args({512, 20000});
BENCHMARK_TEMPLATE(BM_RabiSeries, kernels::Exec::Parallel)->Args({128, 2000})->Args({512, 20000});
BENCHMARK(BM_EDEvolve)->Arg(60)->Arg(80)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
