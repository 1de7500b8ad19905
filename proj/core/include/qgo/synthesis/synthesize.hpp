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
 * @file synthesize.hpp
 * Topology-aware resynthesis of a small unitary.
 *
 * Best-first search over CNOT structures. The root has no CNOTs; a node's
 * successors append one CNOT on a directed edge of the group's induced
 * subgraph (never the same CNOT twice in a row). Each node's parameters are
 * fitted with optimize_params and nodes are expanded in order of
 * (distance, CNOT count, creation order). The first node within the
 * threshold wins, after its circuit is re-checked by direct simulation.
 */
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/sim/matrix.hpp"
#include "qgo/synthesis/optimizer.hpp"
#include "qgo/synthesis/template.hpp"
#include "qgo/topology.hpp"

namespace qgo::synth {

enum class SynthesisStatus { Solved, FellBackToOriginal, BudgetExceeded };

[[nodiscard]] std::string_view status_name(SynthesisStatus s) noexcept;

struct SynthesisConfig {
    double threshold{1e-10};
    /// Largest CNOT count explored; negative means unbounded.
    int cnot_budget{-1};
    double time_budget_seconds{60.0};
    /// Cap on fitted templates. Unlike the time budget this keeps results
    /// identical across machines and loads.
    int max_nodes{200};
    std::uint64_t seed{0};
    OptimizerOptions optimizer{};
};

struct SynthesisResult {
    SynthesisStatus status{SynthesisStatus::BudgetExceeded};
    /// Best circuit found, on local qubits 0..k-1 (position j is the j-th
    /// smallest qubit of the group).
    ir::Circuit circuit;
    Template structure;
    std::vector<double> params;
    double distance{1.0};
    int nodes{0};

    [[nodiscard]] int cnot_count() const noexcept { return ir::cnot_count(circuit); }
};

/// Synthesizes `target` (dimension 2^k) using the given local CNOT edges.
[[nodiscard]] SynthesisResult synthesize(const sim::Matrix &target, int num_qubits,
                                         std::span<const DirectedEdge> edges,
                                         const SynthesisConfig &config = {});

/// Synthesizes `target` for `group`, using the edges `t` induces on it.
[[nodiscard]] SynthesisResult synthesize(const sim::Matrix &target,
                                         const topo::Topology &t,
                                         const topo::QubitGroup &group,
                                         const SynthesisConfig &config = {});

/// distance(target, unitary of `c`) computed by straightforward simulation.
[[nodiscard]] double verify_distance(const ir::Circuit &c, const sim::Matrix &target);

} // namespace qgo::synth
