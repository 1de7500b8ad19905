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

#include "qgo/ir/dag.hpp"

#include <algorithm>
#include <string>

#include "qgo/error.hpp"

namespace qgo::ir {

DependencyDag::DependencyDag(const Circuit &c)
    : chains_(static_cast<std::size_t>(c.num_qubits())),
      head_(static_cast<std::size_t>(c.num_qubits()), 0) {
    const std::size_t n = c.size();
    wires_.resize(n);
    chain_pos_.resize(n);
    arity_.resize(n);
    cnot_.resize(n);
    removed_.assign(n, false);
    for (std::size_t g = 0; g < n; ++g) {
        const Gate &gate = c[g];
        arity_[g] = static_cast<std::uint8_t>(gate.arity());
        cnot_[g] = gate.kind == GateKind::CNOT;
        for (int s = 0; s < gate.arity(); ++s) {
            const auto slot = static_cast<std::size_t>(s);
            const Qubit q = gate.qubits[slot];
            wires_[g][slot] = q;
            auto &ch = chains_[static_cast<std::size_t>(q)];
            chain_pos_[g][slot] = ch.size();
            ch.push_back(static_cast<int>(g));
        }
    }
    remaining_ = static_cast<int>(n);
}

std::vector<int> DependencyDag::predecessors(int g) const {
    std::vector<int> out;
    const auto gi = static_cast<std::size_t>(g);
    for (int s = 0; s < arity_[gi]; ++s) {
        const auto slot = static_cast<std::size_t>(s);
        const auto &ch = chains_[static_cast<std::size_t>(wires_[gi][slot])];
        const std::size_t pos = chain_pos_[gi][slot];
        if (pos > 0 && !removed_[static_cast<std::size_t>(ch[pos - 1])]) {
            out.push_back(ch[pos - 1]);
        }
    }
    return out;
}

std::vector<int> DependencyDag::successors(int g) const {
    std::vector<int> out;
    const auto gi = static_cast<std::size_t>(g);
    for (int s = 0; s < arity_[gi]; ++s) {
        const auto slot = static_cast<std::size_t>(s);
        const auto &ch = chains_[static_cast<std::size_t>(wires_[gi][slot])];
        const std::size_t pos = chain_pos_[gi][slot];
        if (pos + 1 < ch.size()) {
            out.push_back(ch[pos + 1]);
        }
    }
    return out;
}

std::vector<DagEdge> DependencyDag::edges() const {
    std::vector<DagEdge> out;
    for (std::size_t q = 0; q < chains_.size(); ++q) {
        const auto &ch = chains_[q];
        for (std::size_t i = head_[q]; i + 1 < ch.size(); ++i) {
            out.push_back({ch[i], ch[i + 1], static_cast<Qubit>(q)});
        }
    }
    std::sort(out.begin(), out.end(), [](const DagEdge &a, const DagEdge &b) {
        return std::tie(a.from, a.to, a.qubit) < std::tie(b.from, b.to, b.qubit);
    });
    return out;
}

std::vector<int> DependencyDag::frontier() const {
    std::vector<int> out;
    for (std::size_t q = 0; q < chains_.size(); ++q) {
        if (head_[q] >= chains_[q].size()) {
            continue;
        }
        const int g = chains_[q][head_[q]];
        if (predecessors(g).empty() &&
            std::find(out.begin(), out.end(), g) == out.end()) {
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> DependencyDag::topological_order() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(remaining_));
    for (int g = 0; g < num_gates(); ++g) {
        if (!removed_[static_cast<std::size_t>(g)]) {
            out.push_back(g);
        }
    }
    return out;
}

void DependencyDag::remove(std::span<const int> gates) {
    std::vector<int> sorted(gates.begin(), gates.end());
    std::sort(sorted.begin(), sorted.end());
    // Processing in program order means each gate must be at the head of
    // every one of its chains when reached.
    for (int g : sorted) {
        const auto gi = static_cast<std::size_t>(g);
        if (g < 0 || gi >= removed_.size() || removed_[gi]) {
            throw InvariantError("gate " + std::to_string(g) +
                                 " is not a remaining DAG node");
        }
        for (int s = 0; s < arity_[gi]; ++s) {
            const auto slot = static_cast<std::size_t>(s);
            const auto q = static_cast<std::size_t>(wires_[gi][slot]);
            if (head_[q] != chain_pos_[gi][slot]) {
                throw InvariantError("removing gate " + std::to_string(g) +
                                     " would leave a remaining predecessor");
            }
        }
        for (int s = 0; s < arity_[gi]; ++s) {
            ++head_[static_cast<std::size_t>(wires_[gi][static_cast<std::size_t>(s)])];
        }
        removed_[gi] = true;
        --remaining_;
    }
}

} // namespace qgo::ir
