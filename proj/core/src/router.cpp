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

#include "qgo/router.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "qgo/error.hpp"

namespace qgo::route {

using ir::Circuit;
using ir::Gate;

Layout Layout::identity(int n) {
    Layout l;
    l.logical_to_physical.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        l.logical_to_physical[static_cast<std::size_t>(i)] = i;
    }
    return l;
}

std::vector<int> Layout::physical_to_logical() const {
    std::vector<int> inv(logical_to_physical.size());
    for (std::size_t l = 0; l < logical_to_physical.size(); ++l) {
        inv[static_cast<std::size_t>(logical_to_physical[l])] = static_cast<int>(l);
    }
    return inv;
}

bool Layout::is_identity() const noexcept {
    for (std::size_t i = 0; i < logical_to_physical.size(); ++i) {
        if (logical_to_physical[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

bool check_mapped(const Circuit &c, const topo::Topology &t) {
    for (const Gate &g : c.gates()) {
        if (g.is_two_qubit() && !t.adjacent(g.qubits[0], g.qubits[1])) {
            return false;
        }
    }
    return true;
}

namespace {

class Pass {
  public:
    Pass(const Circuit &c, const topo::Topology &t,
         const std::vector<std::vector<int>> &dist, int lookahead)
        : c_(c), t_(t), dist_(dist), lookahead_(lookahead) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_two_qubit()) {
                two_qubit_.push_back(i);
            }
        }
    }

    RoutingResult run(const Layout &initial) {
        RoutingResult r;
        r.initial = initial;
        l2p_ = initial.logical_to_physical;
        p2l_ = initial.physical_to_logical();
        Circuit out(t_.num_qubits(), c_.num_clbits());
        std::size_t next_two = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Gate &g = c_[i];
            if (g.is_two_qubit()) {
                while (hops(g.qubits[0], g.qubits[1]) > 1) {
                    insert_swap(out, next_two);
                    ++r.swaps;
                }
                ++next_two;
            }
            Gate mapped = g;
            for (int s = 0; s < g.arity(); ++s) {
                const auto slot = static_cast<std::size_t>(s);
                mapped.qubits[slot] = phys(g.qubits[slot]);
            }
            out.add(mapped);
        }
        for (const auto &m : c_.measurements()) {
            out.measure(phys(m.qubit), m.clbit);
        }
        r.circuit = std::move(out);
        r.final.logical_to_physical = l2p_;
        return r;
    }

  private:
    int phys(int logical) const {
        return l2p_[static_cast<std::size_t>(logical)];
    }
    int dist(int pa, int pb) const {
        return dist_[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];
    }
    int hops(int la, int lb) const {
        const int d = dist(phys(la), phys(lb));
        if (d < 0) {
            throw InputError("qubits " + std::to_string(la) + " and " +
                             std::to_string(lb) +
                             " are mapped to disconnected topology regions");
        }
        return d;
    }

    // Summed hop distance of the upcoming two-qubit gates if physical qubits
    // u and v were swapped.
    long lookahead_cost(std::size_t from, int u, int v) const {
        auto where = [&](int logical) {
            const int p = phys(logical);
            return p == u ? v : p == v ? u : p;
        };
        long cost = 0;
        const std::size_t end =
            std::min(two_qubit_.size(), from + static_cast<std::size_t>(lookahead_));
        for (std::size_t j = from; j < end; ++j) {
            const Gate &g = c_[two_qubit_[j]];
            cost += dist(where(g.qubits[0]), where(g.qubits[1]));
        }
        return cost;
    }

    void insert_swap(Circuit &out, std::size_t next_two) {
        const Gate &g = c_[two_qubit_[next_two]];
        const int pa = phys(g.qubits[0]);
        const int pb = phys(g.qubits[1]);
        const int d = dist(pa, pb);
        long best_cost = std::numeric_limits<long>::max();
        topo::Edge best{-1, -1};
        for (const topo::Edge &e : t_.edges()) {
            const auto [u, v] = e;
            // Only swaps that move an endpoint one hop closer: guarantees
            // progress on the blocked gate.
            const bool closer = (u == pa && dist(v, pb) < d) ||
                                (v == pa && dist(u, pb) < d) ||
                                (u == pb && dist(v, pa) < d) ||
                                (v == pb && dist(u, pa) < d);
            if (!closer) {
                continue;
            }
            const long cost = lookahead_cost(next_two, u, v);
            if (cost < best_cost) {
                best_cost = cost;
                best = e;
            }
        }
        if (best.first < 0) {
            throw InvariantError("router found no distance-reducing swap");
        }
        const auto [u, v] = best;
        out.add(Gate::cnot(u, v));
        out.add(Gate::cnot(v, u));
        out.add(Gate::cnot(u, v));
        const int lu = p2l_[static_cast<std::size_t>(u)];
        const int lv = p2l_[static_cast<std::size_t>(v)];
        std::swap(p2l_[static_cast<std::size_t>(u)], p2l_[static_cast<std::size_t>(v)]);
        l2p_[static_cast<std::size_t>(lu)] = v;
        l2p_[static_cast<std::size_t>(lv)] = u;
    }

    const Circuit &c_;
    const topo::Topology &t_;
    const std::vector<std::vector<int>> &dist_;
    int lookahead_;
    std::vector<std::size_t> two_qubit_;
    std::vector<int> l2p_;
    std::vector<int> p2l_;
};

} // namespace

RoutingResult route(const Circuit &c, const topo::Topology &t,
                    [[maybe_unused]] std::uint64_t seed,
                    const RouterOptions &options) {
    if (c.num_qubits() > t.num_qubits()) {
        throw InputError("circuit needs " + std::to_string(c.num_qubits()) +
                         " qubits but the topology has " +
                         std::to_string(t.num_qubits()));
    }
    const Circuit lowered = ir::lower_swaps(c);
    // Widen to the device so ancilla qubits have logical indices too.
    Circuit wide(t.num_qubits(), lowered.num_clbits());
    for (const Gate &g : lowered.gates()) {
        wide.add(g);
    }
    wide.set_measurements(lowered.measurements(), lowered.num_clbits());

    const auto dist = t.distances();
    Pass pass(wide, t, dist, options.lookahead);
    RoutingResult first = pass.run(Layout::identity(t.num_qubits()));
    if (!options.refine_layout || first.swaps == 0) {
        return first;
    }
    RoutingResult second = pass.run(first.final);
    return second.swaps < first.swaps ? std::move(second) : std::move(first);
}

} // namespace qgo::route
