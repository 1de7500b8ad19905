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

#include "qgo/partitioner.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qgo/error.hpp"
#include "qgo/router.hpp"

namespace qgo::partition {

using ir::GateKind;

std::vector<topo::QubitGroup> Partition::mapping() const {
    std::vector<topo::QubitGroup> m;
    m.reserve(blocks.size());
    for (const Block &b : blocks) {
        m.push_back(b.group);
    }
    return m;
}

std::vector<int> executable_gates(const ir::DependencyDag &dag,
                                  const topo::QubitGroup &group) {
    const auto &qs = group.qubits;
    const std::size_t k = qs.size();
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) {
        pos[i] = dag.head(qs[i]);
    }
    auto slot_of = [&](int q) -> std::size_t {
        const auto it = std::lower_bound(qs.begin(), qs.end(), q);
        return it != qs.end() && *it == q ? static_cast<std::size_t>(it - qs.begin())
                                          : k;
    };

    std::vector<int> out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < k; ++i) {
            const auto &chain = dag.chain(qs[i]);
            while (pos[i] < chain.size()) {
                const int g = chain[pos[i]];
                const auto wires = dag.wires(g);
                if (wires.size() == 1) {
                    out.push_back(g);
                    ++pos[i];
                    progress = true;
                    continue;
                }
                const int other = wires[0] == qs[i] ? wires[1] : wires[0];
                const std::size_t j = slot_of(other);
                if (j == k) {
                    break; // needs a qubit outside the group; blocked for good
                }
                const auto &other_chain = dag.chain(other);
                if (pos[j] >= other_chain.size() || other_chain[pos[j]] != g) {
                    break; // wait until `other` catches up
                }
                out.push_back(g);
                ++pos[i];
                ++pos[j];
                progress = true;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int score(const ir::Circuit &source, std::span<const int> gates) {
    int n = 0;
    for (int g : gates) {
        n += source[static_cast<std::size_t>(g)].kind == GateKind::CNOT ? 1 : 0;
    }
    return n;
}

int score(std::span<const ir::Gate> gates) {
    return static_cast<int>(std::count_if(
        gates.begin(), gates.end(),
        [](const ir::Gate &g) { return g.kind == GateKind::CNOT; }));
}

namespace {

struct Candidate {
    std::vector<int> gates;
    int cnots{0};
};

} // namespace

Partition partition(const ir::Circuit &c, const topo::Topology &t, int k) {
    if (k < 2 || k > 5) {
        throw InputError("block size k must be between 2 and 5, got " +
                         std::to_string(k));
    }
    if (c.num_qubits() > t.num_qubits()) {
        throw InputError("circuit has more qubits than the topology");
    }
    for (const ir::Gate &g : c.gates()) {
        if (g.kind == GateKind::SWAP) {
            throw InputError("partitioning requires SWAP gates lowered to CNOTs");
        }
    }
    if (!route::check_mapped(c, t)) {
        throw InputError("circuit is not mapped to the topology: some "
                         "two-qubit gate is off-edge");
    }
    const topo::Topology local = t.induced_prefix(c.num_qubits());
    if (k > local.largest_component()) {
        throw InputError("k = " + std::to_string(k) +
                         " exceeds the largest connected component (" +
                         std::to_string(local.largest_component()) + " qubits)");
    }

    const std::vector<topo::QubitGroup> groups =
        topo::enumerate_valid_groups(local, k);
    std::vector<std::vector<std::size_t>> groups_of(
        static_cast<std::size_t>(c.num_qubits()));
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (int q : groups[gi].qubits) {
            groups_of[static_cast<std::size_t>(q)].push_back(gi);
        }
    }

    ir::DependencyDag dag(c);
    std::vector<Candidate> cache(groups.size());
    auto refresh = [&](std::size_t gi) {
        cache[gi].gates = executable_gates(dag, groups[gi]);
        cache[gi].cnots = score(c, cache[gi].gates);
    };
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        refresh(gi);
    }

    Partition result;
    std::vector<std::size_t> stamp(groups.size(), 0);
    std::size_t step = 0;
    while (!dag.empty()) {
        ++step;
        std::size_t best = 0;
        for (std::size_t gi = 1; gi < groups.size(); ++gi) {
            const Candidate &a = cache[gi];
            const Candidate &b = cache[best];
            if (a.cnots > b.cnots ||
                (a.cnots == b.cnots && a.gates.size() > b.gates.size())) {
                best = gi;
            }
        }
        if (cache[best].gates.empty()) {
            const int stuck = dag.frontier().front();
            throw InputError("gate " + std::to_string(stuck) +
                             " cannot be placed in any connected " +
                             std::to_string(k) + "-qubit group");
        }

        Block block{groups[best], std::move(cache[best].gates), cache[best].cnots};
        dag.remove(block.gates);

        std::vector<int> touched;
        for (int g : block.gates) {
            for (int q : dag.wires(g)) {
                touched.push_back(q);
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int q : touched) {
            for (std::size_t gi : groups_of[static_cast<std::size_t>(q)]) {
                if (stamp[gi] != step) {
                    stamp[gi] = step;
                    refresh(gi);
                }
            }
        }
        result.blocks.push_back(std::move(block));
    }
    return result;
}

} // namespace qgo::partition
