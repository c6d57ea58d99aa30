// Copyright 2026 The qudit-epi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference loop vs. the OpenMP batch runner. Both produce identical
// records; only wall time differs. Run with QUDIT_EPI_THREADS unset and vary
// OMP_NUM_THREADS to see scaling.

#include <benchmark/benchmark.h>

#include "qepi/channels.hpp"
#include "qepi/harness.hpp"

namespace {

qepi::TrialConfig config(std::int64_t dim, std::size_t trials) {
    qepi::TrialConfig c;
    c.dim = static_cast<std::size_t>(dim);
    c.trials = trials;
    c.seed = 12345;
    c.min_form = false;
    return c;
}

template <qepi::Experiment E>
void BM_Serial(benchmark::State &state) {
    const auto c = config(state.range(0), 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qepi::run_batch_serial(E, c));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

template <qepi::Experiment E>
void BM_Parallel(benchmark::State &state) {
    const auto c = config(state.range(0), 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qepi::run_batch(E, c));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

void BM_PartialSwapClosed(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    qepi::RandomSource rng(1, 0);
    const auto r1 = qepi::random_state(d, {}, rng);
    const auto r2 = qepi::random_state(d, {}, rng);
    const qepi::MixingParameter tau(0.3);
    for (auto _ : state) benchmark::DoNotOptimize(qepi::partial_swap_closed(r1, r2, tau));
}

void BM_PartialSwapConjugation(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    qepi::RandomSource rng(1, 0);
    const auto r1 = qepi::random_state(d, {}, rng);
    const auto r2 = qepi::random_state(d, {}, rng);
    const qepi::MixingParameter tau(0.3);
    for (auto _ : state) benchmark::DoNotOptimize(qepi::partial_swap_conjugation(r1, r2, tau));
}

} // namespace

BENCHMARK_TEMPLATE(BM_Serial, qepi::Experiment::Lemma)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Parallel, qepi::Experiment::Lemma)->DenseRange(2, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_TEMPLATE(BM_Serial, qepi::Experiment::Theorem)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Parallel, qepi::Experiment::Theorem)->DenseRange(2, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_TEMPLATE(BM_Serial, qepi::Experiment::Qepi)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Parallel, qepi::Experiment::Qepi)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PartialSwapClosed)->DenseRange(2, 6, 2);
BENCHMARK(BM_PartialSwapConjugation)->DenseRange(2, 6, 2);
BENCHMARK_MAIN();
