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

#include "qgo/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "qgo/composer.hpp"
#include "qgo/error.hpp"
#include "qgo/ir/merge.hpp"
#include "qgo/ir/qasm.hpp"
#include "qgo/rng.hpp"
#include "qgo/sim/simulate.hpp"

namespace qgo::pipeline {

using Json = nlohmann::ordered_json;
using synth::SynthesisStatus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `fn`, prefixing the stage name onto input errors.
template <typename Fn> auto staged(const char *stage, Fn &&fn) {
    try {
        return fn();
    } catch (const InputError &e) {
        throw InputError(std::string(stage) + ": " + e.what());
    } catch (const InvariantError &e) {
        throw InvariantError(std::string(stage) + ": " + e.what());
    }
}

struct BlockJob {
    synth::SynthesisResult result;
    std::exception_ptr error;
};

std::vector<synth::SynthesisResult>
synthesize_blocks(const partition::Partition &p, const ir::Circuit &source,
                  const topo::Topology &t, const OptimizeOptions &options) {
    std::vector<BlockJob> jobs(p.blocks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next++; b < jobs.size(); b = next++) {
            const partition::Block &block = p.blocks[b];
            BlockJob &job = jobs[b];
            if (block.cnot_count == 0) {
                job.result.status = SynthesisStatus::FellBackToOriginal;
                job.result.distance = 0.0;
                continue;
            }
            try {
                synth::SynthesisConfig cfg;
                cfg.threshold = options.threshold;
                cfg.cnot_budget = block.cnot_count - 1;
                cfg.time_budget_seconds = options.time_budget_seconds;
                cfg.max_nodes = options.max_nodes;
                cfg.seed = derive_seed(options.seed, b);
                job.result = synth::synthesize(sim::block_unitary(block, source), t,
                                               block.group, cfg);
            } catch (...) {
                job.error = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.jobs, 1)), 1,
                                std::max<std::size_t>(jobs.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }
    std::vector<synth::SynthesisResult> results;
    results.reserve(jobs.size());
    for (BlockJob &job : jobs) {
        if (job.error) {
            std::rethrow_exception(job.error);
        }
        results.push_back(std::move(job.result));
    }
    return results;
}

Json layout_json(const route::Layout &l) {
    return Json(l.logical_to_physical);
}

} // namespace

OptimizeOutcome run_optimize(const ir::Circuit &input, const topo::Topology &t,
                             const OptimizeOptions &options) {
    if (options.k < 2 || options.k > 5) {
        throw InputError("block size k must be between 2 and 5, got " +
                         std::to_string(options.k));
    }
    if (!(options.threshold > 0.0)) {
        throw InputError("threshold must be positive");
    }
    const auto start = Clock::now();
    OptimizeOutcome out;
    out.cnot_input = ir::cnot_count(input);

    auto t0 = Clock::now();
    staged("route", [&] {
        if (options.assume_mapped) {
            if (input.num_qubits() > t.num_qubits()) {
                throw InputError("circuit has more qubits than the topology");
            }
            out.mapped = ir::lower_swaps(input);
            if (!route::check_mapped(out.mapped, t)) {
                throw InputError("circuit is not mapped to the topology: some "
                                 "two-qubit gate is off-edge");
            }
            out.initial = route::Layout::identity(input.num_qubits());
            out.final = out.initial;
        } else {
            route::RoutingResult r = route::route(input, t, options.seed);
            out.mapped = std::move(r.circuit);
            out.initial = std::move(r.initial);
            out.final = std::move(r.final);
            out.swaps = r.swaps;
        }
    });
    out.times.route = seconds_since(t0);

    t0 = Clock::now();
    const topo::Topology local = t.induced_prefix(out.mapped.num_qubits());
    out.k = std::min(options.k, local.largest_component());
    if (out.k >= 2) {
        out.partition = staged("partition", [&] {
            return partition::partition(out.mapped, t, out.k);
        });
    }
    out.times.partition = seconds_since(t0);

    t0 = Clock::now();
    const std::vector<synth::SynthesisResult> results = staged("synthesis", [&] {
        return synthesize_blocks(out.partition, out.mapped, t, options);
    });
    out.times.synthesis = seconds_since(t0);

    t0 = Clock::now();
    staged("compose", [&] {
        if (out.k >= 2) {
            out.optimized = compose::compose(out.partition, results, out.mapped);
        } else {
            out.optimized = ir::merge_single_qubit_runs(out.mapped);
        }
    });
    for (std::size_t b = 0; b < out.partition.blocks.size(); ++b) {
        const partition::Block &block = out.partition.blocks[b];
        const synth::SynthesisResult &r = results[b];
        BlockReport rep;
        rep.group = block.group;
        rep.cnot_before = block.cnot_count;
        if (compose::use_synthesized(block, r)) {
            rep.cnot_after = r.cnot_count();
            rep.distance = r.distance;
            rep.status = SynthesisStatus::Solved;
        } else {
            rep.cnot_after = block.cnot_count;
            rep.status = r.status == SynthesisStatus::BudgetExceeded
                             ? SynthesisStatus::BudgetExceeded
                             : SynthesisStatus::FellBackToOriginal;
        }
        out.blocks.push_back(std::move(rep));
    }
    out.times.compose = seconds_since(t0);

    if (ir::cnot_count(out.optimized) > ir::cnot_count(out.mapped)) {
        throw InvariantError("compose: optimized circuit has more CNOTs than its input");
    }
    if (!route::check_mapped(out.optimized, t)) {
        throw InvariantError("compose: optimized circuit leaves the topology");
    }
    out.times.total = seconds_since(start);
    return out;
}

std::string report_json(const OptimizeOutcome &o, const OptimizeOptions &options) {
    Json j;
    j["schema"] = 1;
    j["seed"] = options.seed;
    j["k"] = o.k;
    j["threshold"] = options.threshold;
    j["qubits"] = o.mapped.num_qubits();
    j["cnot_input"] = o.cnot_input;
    j["swaps_inserted"] = o.swaps;
    j["cnot_before"] = ir::cnot_count(o.mapped);
    j["cnot_after"] = ir::cnot_count(o.optimized);
    j["reduction_rate"] = compose::cnot_reduction(o.mapped, o.optimized);
    j["single_qubit_before"] = ir::single_qubit_count(o.mapped);
    j["single_qubit_after"] = ir::single_qubit_count(o.optimized);
    Json blocks = Json::array();
    for (const BlockReport &b : o.blocks) {
        Json jb;
        jb["group"] = b.group.qubits;
        jb["cnot_before"] = b.cnot_before;
        jb["cnot_after"] = b.cnot_after;
        jb["distance"] = b.distance;
        jb["status"] = std::string(synth::status_name(b.status));
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    j["layouts"] = {{"initial", layout_json(o.initial)}, {"final", layout_json(o.final)}};
    if (options.record_timings) {
        j["wall_times"] = {{"route", o.times.route},
                           {"partition", o.times.partition},
                           {"synthesis", o.times.synthesis},
                           {"compose", o.times.compose},
                           {"total", o.times.total}};
    }
    return j.dump(2) + "\n";
}

namespace {

std::string layout_line(const char *name, const route::Layout &l) {
    std::string s = std::string("// qgo: ") + name;
    for (int p : l.logical_to_physical) {
        s += ' ' + std::to_string(p);
    }
    return s + "\n";
}

} // namespace

std::string optimized_qasm(const OptimizeOutcome &o) {
    std::string header;
    if (!o.initial.is_identity() || !o.final.is_identity()) {
        header += layout_line("initial_layout", o.initial);
        header += layout_line("final_layout", o.final);
    }
    return header + ir::write_qasm(o.optimized);
}

LayoutAnnotations read_layouts(std::string_view text) {
    LayoutAnnotations out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string slashes, tag, name;
        if (!(ls >> slashes >> tag >> name) || slashes != "//" || tag != "qgo:") {
            continue;
        }
        route::Layout l;
        int p = 0;
        while (ls >> p) {
            l.logical_to_physical.push_back(p);
        }
        if (name == "initial_layout") {
            out.initial = std::move(l);
        } else if (name == "final_layout") {
            out.final = std::move(l);
        }
    }
    return out;
}

std::string partition_json(const partition::Partition &p) {
    Json blocks = Json::array();
    for (const partition::Block &b : p.blocks) {
        blocks.push_back({{"group", b.group.qubits},
                          {"gates", b.gates},
                          {"cnot_count", b.cnot_count}});
    }
    return blocks.dump(2) + "\n";
}

std::string stats_json(const ir::Circuit &c) {
    int two = 0;
    for (const ir::Gate &g : c.gates()) {
        two += g.is_two_qubit() ? 1 : 0;
    }
    Json j;
    j["qubits"] = c.num_qubits();
    j["clbits"] = c.num_clbits();
    j["gates"] = c.size();
    j["cnots"] = ir::cnot_count(c);
    j["two_qubit_gates"] = two;
    j["single_qubit_gates"] = ir::single_qubit_count(c);
    j["depth"] = ir::depth(c);
    j["measurements"] = c.measurements().size();
    return j.dump(2) + "\n";
}

namespace {

void check_layout(const std::optional<route::Layout> &l, int n, const char *name) {
    if (!l) {
        return;
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    bool ok = static_cast<int>(l->logical_to_physical.size()) == n;
    for (int p : l->logical_to_physical) {
        ok = ok && p >= 0 && p < n && seen[static_cast<std::size_t>(p)]++ == 0;
    }
    if (!ok) {
        throw InputError(std::string(name) + " is not a permutation of " +
                         std::to_string(n) + " qubits");
    }
}

} // namespace

VerifyReport run_verify(const ir::Circuit &original, const ir::Circuit &optimized,
                        const LayoutAnnotations &layouts, std::uint64_t seed) {
    const int n = optimized.num_qubits();
    if (n < original.num_qubits()) {
        throw InputError("optimized circuit has " + std::to_string(n) +
                         " qubits, fewer than the original's " +
                         std::to_string(original.num_qubits()));
    }
    if (n > kMaxVerifyQubits) {
        throw InputError("verification simulates at most " +
                         std::to_string(kMaxVerifyQubits) + " qubits, got " +
                         std::to_string(n));
    }
    check_layout(layouts.initial, n, "initial layout");
    check_layout(layouts.final, n, "final layout");
    const route::Layout initial = layouts.initial.value_or(route::Layout::identity(n));
    const route::Layout final = layouts.final.value_or(route::Layout::identity(n));

    ir::Circuit wide(n);
    for (const ir::Gate &g : original.gates()) {
        wide.add(g);
    }
    auto infidelity = [&](const sim::StateVector &logical) {
        const sim::StateVector expected = sim::permute_qubits(
            sim::simulate(wide, logical), final.logical_to_physical);
        const sim::StateVector actual = sim::simulate(
            optimized, sim::permute_qubits(logical, initial.logical_to_physical));
        return sim::state_infidelity(expected, actual);
    };

    VerifyReport r;
    r.simulated_qubits = n;
    r.infidelity = infidelity(sim::StateVector::zero(n));
    if (n <= kRandomVerifyQubits) {
        double worst = 0.0;
        const std::size_t dim_in = std::size_t{1} << original.num_qubits();
        for (int i = 0; i < kRandomVerifyInputs; ++i) {
            const sim::StateVector small = sim::StateVector::random(
                original.num_qubits(), derive_seed(seed, static_cast<std::uint64_t>(i)));
            std::vector<sim::Complex> amps(std::size_t{1} << n);
            std::copy_n(small.amplitudes().begin(), dim_in, amps.begin());
            worst = std::max(worst, infidelity(sim::StateVector(std::move(amps))));
        }
        r.max_random_infidelity = worst;
        r.random_inputs = kRandomVerifyInputs;
    }
    return r;
}

std::string verify_json(const VerifyReport &r) {
    Json j;
    j["simulated_qubits"] = r.simulated_qubits;
    j["infidelity"] = r.infidelity;
    j["random_inputs"] = r.random_inputs;
    if (r.max_random_infidelity) {
        j["max_random_infidelity"] = *r.max_random_infidelity;
    }
    return j.dump(2) + "\n";
}

} // namespace qgo::pipeline
