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
 * @file dag.hpp
 * Gate dependency DAG.
 *
 * Nodes are gate indices into the source circuit. There is an edge
 * (a -> b, q) whenever b is the next gate after a acting on qubit q, so each
 * qubit's gates form a path ("chain"). The DAG also tracks which gates have
 * been removed; removals must keep the remaining set closed under
 * successors, i.e. only a prefix of each chain can be removed.
 */
#pragma once

#include <array>
#include <span>
#include <vector>

#include "qgo/ir/circuit.hpp"

namespace qgo::ir {

struct DagEdge {
    int from;
    int to;
    Qubit qubit;
    bool operator==(const DagEdge &) const = default;
};

class DependencyDag {
  public:
    DependencyDag() = default;
    explicit DependencyDag(const Circuit &c);

    [[nodiscard]] int num_gates() const noexcept {
        return static_cast<int>(wires_.size());
    }
    [[nodiscard]] int num_qubits() const noexcept {
        return static_cast<int>(chains_.size());
    }
    [[nodiscard]] int num_remaining() const noexcept { return remaining_; }
    [[nodiscard]] bool empty() const noexcept { return remaining_ == 0; }

    /// Qubits of gate g (one or two entries).
    [[nodiscard]] std::span<const Qubit> wires(int g) const noexcept {
        return {wires_[static_cast<std::size_t>(g)].data(),
                static_cast<std::size_t>(arity_[static_cast<std::size_t>(g)])};
    }
    [[nodiscard]] bool is_cnot(int g) const noexcept {
        return cnot_[static_cast<std::size_t>(g)];
    }
    [[nodiscard]] bool removed(int g) const noexcept {
        return removed_[static_cast<std::size_t>(g)];
    }

    /// All gates on qubit q in program order, removed ones included.
    [[nodiscard]] const std::vector<int> &chain(Qubit q) const noexcept {
        return chains_[static_cast<std::size_t>(q)];
    }
    /// Position in chain(q) of the first remaining gate.
    [[nodiscard]] std::size_t head(Qubit q) const noexcept {
        return head_[static_cast<std::size_t>(q)];
    }

    /// Remaining predecessors of g, at most one per qubit of g.
    [[nodiscard]] std::vector<int> predecessors(int g) const;
    [[nodiscard]] std::vector<int> successors(int g) const;
    /// Edges among remaining gates.
    [[nodiscard]] std::vector<DagEdge> edges() const;
    /// Remaining gates without remaining predecessors, ascending.
    [[nodiscard]] std::vector<int> frontier() const;
    /// Remaining gates in a topological order (ascending index).
    [[nodiscard]] std::vector<int> topological_order() const;

    /// Removes a prefix-closed set of remaining gates. Throws InvariantError
    /// if some gate has a remaining predecessor outside the set.
    void remove(std::span<const int> gates);

  private:
    std::vector<std::array<Qubit, 2>> wires_;
    std::vector<std::array<std::size_t, 2>> chain_pos_;
    std::vector<std::uint8_t> arity_;
    std::vector<bool> cnot_;
    std::vector<bool> removed_;
    std::vector<std::vector<int>> chains_;
    std::vector<std::size_t> head_;
    int remaining_{0};
};

/// Measurements are not part of the DAG.
[[nodiscard]] inline DependencyDag build_dag(const Circuit &c) {
    return DependencyDag(c);
}

} // namespace qgo::ir
