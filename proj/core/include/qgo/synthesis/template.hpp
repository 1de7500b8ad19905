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
 * @file template.hpp
 * CNOT structures with parameterized single-qubit gates.
 *
 * Layout of a template on k qubits with CNOT list c_1..c_m:
 *
 *     U3(q0) ... U3(q_{k-1})  CNOT(c_1) U3(ctl_1) U3(tgt_1)  ...  CNOT(c_m) U3(ctl_m) U3(tgt_m)
 *
 * Every U3 owns three consecutive parameters (θ, φ, λ) in that order, so a
 * template has 3k + 6m parameters.
 */
#pragma once

#include <span>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/topology.hpp"

namespace qgo::synth {

/// CNOT between local qubit positions.
struct DirectedEdge {
    int control;
    int target;
    auto operator<=>(const DirectedEdge &) const = default;
};

struct Template {
    int num_qubits{0};
    std::vector<DirectedEdge> cnots;

    [[nodiscard]] std::size_t param_count() const noexcept {
        return 3 * static_cast<std::size_t>(num_qubits) + 6 * cnots.size();
    }
    [[nodiscard]] int cnot_count() const noexcept {
        return static_cast<int>(cnots.size());
    }
    bool operator==(const Template &) const = default;
};

/// Circuit on `tpl.num_qubits` local qubits; throws InputError when the
/// parameter count does not match.
[[nodiscard]] ir::Circuit instantiate(const Template &tpl,
                                      std::span<const double> params);

/// Directed edges of the subgraph induced on `group`, in local positions:
/// for each adjacent pair (i < j) first i->j, then j->i.
[[nodiscard]] std::vector<DirectedEdge> local_edges(const topo::Topology &t,
                                                    const topo::QubitGroup &group);

} // namespace qgo::synth
