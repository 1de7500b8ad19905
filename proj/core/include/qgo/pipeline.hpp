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

/**
 * @file pipeline.hpp
 * End-to-end optimization: route, partition, synthesize blocks in parallel,
 * compose. Also the verification and JSON reporting used by the CLI.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/partitioner.hpp"
#include "qgo/router.hpp"
#include "qgo/synthesis/synthesize.hpp"
#include "qgo/topology.hpp"

namespace qgo::pipeline {

struct OptimizeOptions {
    int k{3};
    double threshold{1e-10};
    double time_budget_seconds{60.0};
    int max_nodes{200};
    int jobs{1};
    std::uint64_t seed{0};
    bool assume_mapped{false};
    /// Include wall_times in the report. Timings differ run to run, so
    /// byte-identical reports need this off.
    bool record_timings{true};
};

struct BlockReport {
    topo::QubitGroup group;
    int cnot_before{0};
    int cnot_after{0};
    double distance{0.0};
    synth::SynthesisStatus status{synth::SynthesisStatus::FellBackToOriginal};
};

struct StageTimes {
    double route{0.0};
    double partition{0.0};
    double synthesis{0.0};
    double compose{0.0};
    double total{0.0};
};

struct OptimizeOutcome {
    ir::Circuit mapped;    // routed (or as given with assume_mapped), SWAPs lowered
    ir::Circuit optimized; // same qubit count as `mapped`
    route::Layout initial;
    route::Layout final;
    int swaps{0};
    int cnot_input{0};
    int k{0}; // block size actually used
    partition::Partition partition;
    std::vector<BlockReport> blocks;
    StageTimes times;
};

/**
 * Runs the full flow on `input`. Errors carry the failing stage as a prefix
 * ("route: ...", "partition: ..."). The requested k is lowered to the largest
 * connected component of the device qubits the circuit occupies. Throws
 * InvariantError if the result has more CNOTs than `mapped` or leaves the
 * topology.
 */
[[nodiscard]] OptimizeOutcome run_optimize(const ir::Circuit &input,
                                           const topo::Topology &t,
                                           const OptimizeOptions &options);

/// Report JSON (schema 1), pretty-printed with a trailing newline.
[[nodiscard]] std::string report_json(const OptimizeOutcome &outcome,
                                      const OptimizeOptions &options);

/// QASM of the optimized circuit, preceded by `// qgo: initial_layout` and
/// `// qgo: final_layout` comment lines when the layouts are not identity.
[[nodiscard]] std::string optimized_qasm(const OptimizeOutcome &outcome);

/// Layouts recorded in optimized QASM text, if present.
struct LayoutAnnotations {
    std::optional<route::Layout> initial;
    std::optional<route::Layout> final;
};
[[nodiscard]] LayoutAnnotations read_layouts(std::string_view qasm_text);

/// Blocks as JSON: [{"group": [...], "gates": [...], "cnot_count": n}, ...].
[[nodiscard]] std::string partition_json(const partition::Partition &p);

/// Circuit statistics as JSON.
[[nodiscard]] std::string stats_json(const ir::Circuit &c);

struct VerifyReport {
    int simulated_qubits{0};
    double infidelity{0.0}; // on |0...0>
    std::optional<double> max_random_infidelity;
    int random_inputs{0};
};

inline constexpr int kMaxVerifyQubits = 16;
inline constexpr int kRandomVerifyQubits = 6;
inline constexpr int kRandomVerifyInputs = 10;

/**
 * Compares `original` (logical qubits) with `optimized`, which may act on
 * more device qubits and carry layouts: the input state is placed through
 * the initial layout, extra qubits start in |0>, and the reference output is
 * read back through the final layout. Up to kRandomVerifyQubits simulated
 * qubits, kRandomVerifyInputs seeded random inputs are checked too.
 * Throws InputError on qubit-count mismatch or above kMaxVerifyQubits.
 */
[[nodiscard]] VerifyReport run_verify(const ir::Circuit &original,
                                      const ir::Circuit &optimized,
                                      const LayoutAnnotations &layouts,
                                      std::uint64_t seed = 0);

[[nodiscard]] std::string verify_json(const VerifyReport &r);

} // namespace qgo::pipeline
