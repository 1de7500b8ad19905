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

#include "qgo/synthesis/template.hpp"

#include <string>

#include "qgo/error.hpp"

namespace qgo::synth {

using ir::Gate;

ir::Circuit instantiate(const Template &tpl, std::span<const double> params) {
    if (params.size() != tpl.param_count()) {
        throw InputError("template expects " + std::to_string(tpl.param_count()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    ir::Circuit c(tpl.num_qubits);
    std::size_t p = 0;
    auto u3 = [&](int q) {
        c.add(Gate::u3(q, params[p], params[p + 1], params[p + 2]));
        p += 3;
    };
    for (int q = 0; q < tpl.num_qubits; ++q) {
        u3(q);
    }
    for (const DirectedEdge &e : tpl.cnots) {
        c.add(Gate::cnot(e.control, e.target));
        u3(e.control);
        u3(e.target);
    }
    return c;
}

std::vector<DirectedEdge> local_edges(const topo::Topology &t,
                                      const topo::QubitGroup &group) {
    std::vector<DirectedEdge> out;
    const auto &qs = group.qubits;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
            if (t.adjacent(qs[i], qs[j])) {
                out.push_back({static_cast<int>(i), static_cast<int>(j)});
                out.push_back({static_cast<int>(j), static_cast<int>(i)});
            }
        }
    }
    return out;
}

} // namespace qgo::synth
