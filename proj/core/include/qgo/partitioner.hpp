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
 * @file partitioner.hpp
 * Greedy partitioning of a mapped circuit into k-qubit blocks.
 *
 * Each step computes, for every connected k-qubit group, the largest set of
 * remaining gates executable on that group (a gate qualifies when all its
 * qubits are in the group and every earlier remaining gate on those qubits
 * qualifies). The group whose set holds the most CNOTs wins; ties go to the
 * set with more gates, then to the lexicographically smallest group. The
 * winning set becomes the next block and leaves the DAG. Sets are cached per
 * group and recomputed only for groups touching qubits the last block
 * consumed, which keeps the loop linear in the gate count.
 */
#pragma once

#include <span>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/ir/dag.hpp"
#include "qgo/topology.hpp"

namespace qgo::partition {

struct Block {
    topo::QubitGroup group;
    std::vector<int> gates; // indices into the source circuit, ascending
    int cnot_count{0};
};

struct Partition {
    std::vector<Block> blocks;

    /// Group of each block, in block order.
    [[nodiscard]] std::vector<topo::QubitGroup> mapping() const;
};

/// Executable gate set of `group` over the remaining gates of `dag`, in
/// source order.
[[nodiscard]] std::vector<int> executable_gates(const ir::DependencyDag &dag,
                                                const topo::QubitGroup &group);

/// Number of CNOT gates among `gates` of `source`.
[[nodiscard]] int score(const ir::Circuit &source, std::span<const int> gates);
[[nodiscard]] int score(std::span<const ir::Gate> gates);

/**
 * Partitions `c` into blocks of `k` qubits. Requires every two-qubit gate to
 * sit on a topology edge and no SWAP gates. Groups are restricted to the
 * circuit's qubits [0, num_qubits). Throws InputError when the circuit is
 * unmapped, k is outside [2, 5] or exceeds the largest connected component,
 * or some gate cannot be placed in any group.
 */
[[nodiscard]] Partition partition(const ir::Circuit &c, const topo::Topology &t,
                                  int k);

} // namespace qgo::partition
