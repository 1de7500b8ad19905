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

#include "qgo/ir/merge.hpp"

#include <optional>
#include <vector>

#include "qgo/sim/kernels.hpp"

namespace qgo::ir {

namespace {

struct Run {
    sim::Mat2 product{1.0, 0.0, 0.0, 1.0};
    int length{0};
    std::optional<Gate> only; // the gate itself while length == 1
};

} // namespace

Circuit merge_single_qubit_runs(const Circuit &c) {
    Circuit out(c.num_qubits(), c.num_clbits());
    std::vector<Run> runs(static_cast<std::size_t>(c.num_qubits()));

    auto flush = [&](Qubit q) {
        Run &run = runs[static_cast<std::size_t>(q)];
        if (run.length == 0) {
            return;
        }
        if (!sim::is_identity_up_to_phase(run.product, kIdentityTolerance)) {
            if (run.length == 1 && run.only->kind == GateKind::U3) {
                out.add(*run.only);
            } else {
                const auto [theta, phi, lambda] = sim::u3_angles(run.product);
                out.add(Gate::u3(q, theta, phi, lambda));
            }
        }
        run = Run{};
    };

    for (const Gate &g : c.gates()) {
        if (g.arity() == 1) {
            Run &run = runs[static_cast<std::size_t>(g.qubits[0])];
            run.product = sim::mat2_mul(sim::single_qubit_matrix(g), run.product);
            run.only = run.length == 0 ? std::optional<Gate>(g) : std::nullopt;
            ++run.length;
        } else {
            for (Qubit q : g.wires()) {
                flush(q);
            }
            out.add(g);
        }
    }
    for (Qubit q = 0; q < c.num_qubits(); ++q) {
        flush(q);
    }
    out.set_measurements(c.measurements(), c.num_clbits());
    return out;
}

} // namespace qgo::ir
