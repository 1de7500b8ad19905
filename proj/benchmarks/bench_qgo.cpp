// Copyright 2026 The qgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "qgo/benchgen.hpp"
#include "qgo/ir/decompose.hpp"
#include "qgo/partitioner.hpp"
#include "qgo/router.hpp"
#include "qgo/sim/matrix.hpp"
#include "qgo/sim/simulate.hpp"
#include "qgo/synthesis/synthesize.hpp"

namespace {

using namespace qgo;

// TFIM chain laid along a snake path of a 5x6 grid.
ir::Circuit snake_tfim(int steps) {
    const ir::Circuit chain = bench::gen_tfim(30, steps, 0.1);
    std::vector<int> snake;
    for (int r = 0; r < 5; ++r) {
        for (int j = 0; j < 6; ++j) {
            snake.push_back(r * 6 + (r % 2 == 0 ? j : 5 - j));
        }
    }
    ir::Circuit c(30);
    c.append_mapped(chain, snake);
    return c;
}

void BM_PartitionTfimGrid(benchmark::State &state) {
    const ir::Circuit c = snake_tfim(static_cast<int>(state.range(0)));
    const topo::Topology grid = topo::Topology::grid(5, 6);
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition::partition(c, grid, k));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
    state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_PartitionTfimGrid)
    ->ArgsProduct({{13, 26, 52}, {3, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_RouteQft(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const ir::Circuit c = bench::gen_qft(n);
    const topo::Topology line = topo::Topology::line(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(route::route(c, line));
    }
}
BENCHMARK(BM_RouteQft)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SynthesizeTwoQubit(benchmark::State &state) {
    const std::vector<synth::DirectedEdge> pair{{0, 1}, {1, 0}};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const sim::Matrix u = sim::random_unitary(4, seed++);
        benchmark::DoNotOptimize(synth::synthesize(u, 2, pair));
    }
}
BENCHMARK(BM_SynthesizeTwoQubit)->Unit(benchmark::kMillisecond);

void BM_SynthesizeToffoli(benchmark::State &state) {
    ir::Circuit c(3);
    ir::append_ccx(c, 0, 1, 2);
    const sim::Matrix u = sim::circuit_unitary(c);
    const topo::Topology line = topo::Topology::line(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(synth::synthesize(u, line, {{0, 1, 2}}));
    }
}
BENCHMARK(BM_SynthesizeToffoli)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SimulateQft(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const ir::Circuit c = bench::gen_qft(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim::simulate(c, sim::StateVector::zero(n)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}
BENCHMARK(BM_SimulateQft)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
