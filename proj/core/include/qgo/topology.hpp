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
 * @file topology.hpp
 * Device connectivity and connected qubit groups.
 *
 * A qubit group is valid when its induced subgraph is connected; only valid
 * groups can host a block, since every two-qubit gate of a mapped circuit
 * sits on a device edge.
 */
#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qgo::topo {

using Edge = std::pair<int, int>;

class Topology {
  public:
    Topology() = default;
    /// Edges are normalized to (min, max) and keep their given order, which
    /// defines the edge index. Throws InputError on self-loops, duplicates or
    /// out-of-range endpoints.
    Topology(int num_qubits, std::vector<Edge> edges);

    [[nodiscard]] static Topology line(int n);
    /// Row-major `rows` x `cols` lattice.
    [[nodiscard]] static Topology grid(int rows, int cols);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept {
        return edges_;
    }
    [[nodiscard]] const std::vector<int> &neighbors(int q) const noexcept {
        return adj_[static_cast<std::size_t>(q)];
    }
    [[nodiscard]] bool adjacent(int a, int b) const noexcept;

    /// All-pairs hop distances; -1 when unreachable.
    [[nodiscard]] std::vector<std::vector<int>> distances() const;

    /// Size of the largest connected component.
    [[nodiscard]] int largest_component() const;

    /// Subgraph induced on qubits [0, n).
    [[nodiscard]] Topology induced_prefix(int n) const;

  private:
    int num_qubits_{0};
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct QubitGroup {
    std::vector<int> qubits; // sorted, distinct

    [[nodiscard]] std::size_t size() const noexcept { return qubits.size(); }
    [[nodiscard]] bool contains(int q) const noexcept;
    auto operator<=>(const QubitGroup &) const = default;
};

/// Accepts `line-N`, `grid-RxC`, or a JSON document
/// {"num_qubits": n, "edges": [[a, b], ...]}.
[[nodiscard]] Topology load_topology(std::string_view spec);

/// True iff the subgraph induced on `qubits` is connected (and non-empty).
[[nodiscard]] bool is_valid_group(const Topology &t, std::span<const int> qubits);

/**
 * Every connected k-subset exactly once, in lexicographic order of the
 * sorted qubit lists. Subsets are grown from their minimum vertex through
 * exclusive neighbourhoods, so the cost is proportional to the number of
 * connected subsets rather than C(n, k). Throws InputError unless
 * 1 <= k <= 5.
 */
[[nodiscard]] std::vector<QubitGroup> enumerate_valid_groups(const Topology &t,
                                                             int k);

} // namespace qgo::topo
