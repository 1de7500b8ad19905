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
 * @file router.hpp
 * Physical qubit mapping by greedy lookahead SWAP insertion.
 *
 * Gates are routed in program order. When a CNOT's physical qubits are not
 * adjacent, a SWAP is chosen among the edges touching either endpoint that
 * bring the endpoints one hop closer; the winner minimizes the summed hop
 * distance of the next `lookahead` two-qubit gates, ties going to the lower
 * edge index. Each SWAP is emitted as three CNOTs.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/topology.hpp"

namespace qgo::route {

/// Bijection logical -> physical over all device qubits. Logical indices at
/// or above the circuit's qubit count are idle ancillas.
struct Layout {
    std::vector<int> logical_to_physical;

    [[nodiscard]] static Layout identity(int n);
    [[nodiscard]] std::vector<int> physical_to_logical() const;
    [[nodiscard]] bool is_identity() const noexcept;
    bool operator==(const Layout &) const = default;
};

struct RouterOptions {
    int lookahead = 20;
    /// Route once from the identity, restart from the resulting final
    /// layout, and keep whichever pass inserted fewer SWAPs.
    bool refine_layout = true;
};

struct RoutingResult {
    ir::Circuit circuit; // on topology.num_qubits() physical qubits
    Layout initial;
    Layout final;
    int swaps{0};
};

/**
 * Maps `c` onto `t`. `seed` is accepted for interface stability; the
 * strategy is deterministic and does not consume randomness. Throws
 * InputError when the device has too few qubits or two interacting qubits
 * are in different components.
 */
[[nodiscard]] RoutingResult route(const ir::Circuit &c, const topo::Topology &t,
                                  std::uint64_t seed = 0,
                                  const RouterOptions &options = {});

/// True iff every two-qubit gate acts on an edge of `t`.
[[nodiscard]] bool check_mapped(const ir::Circuit &c, const topo::Topology &t);

} // namespace qgo::route
