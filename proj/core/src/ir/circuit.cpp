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

#include "qgo/ir/circuit.hpp"

#include <algorithm>
#include <string>

#include "qgo/error.hpp"

namespace qgo::ir {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
        return "rx";
    case GateKind::RY:
        return "ry";
    case GateKind::RZ:
        return "rz";
    case GateKind::U3:
        return "u3";
    case GateKind::H:
        return "h";
    case GateKind::X:
        return "x";
    case GateKind::CNOT:
        return "cx";
    case GateKind::SWAP:
        return "swap";
    case GateKind::Measure:
        return "measure";
    case GateKind::Barrier:
        return "barrier";
    }
    return "?";
}

int gate_arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::SWAP:
        return 2;
    case GateKind::Barrier:
        return 0;
    default:
        return 1;
    }
}

int gate_param_count(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return 1;
    case GateKind::U3:
        return 3;
    default:
        return 0;
    }
}

bool Gate::acts_on(Qubit q) const noexcept {
    const auto w = wires();
    return std::find(w.begin(), w.end(), q) != w.end();
}

Circuit::Circuit(int num_qubits, int num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits),
      measured_(static_cast<std::size_t>(std::max(num_qubits, 0)), false) {
    if (num_qubits < 0 || num_clbits < 0) {
        throw InputError("register sizes must be non-negative");
    }
}

void Circuit::add(const Gate &gate) {
    if (!gate.is_unitary()) {
        throw InputError("only unitary gates can be added to the gate list");
    }
    const auto w = gate.wires();
    for (Qubit q : w) {
        if (q < 0 || q >= num_qubits_) {
            throw InputError("qubit index " + std::to_string(q) +
                             " out of range for " +
                             std::to_string(num_qubits_) + " qubits");
        }
        if (measured_[static_cast<std::size_t>(q)]) {
            throw InputError("gate after measurement on qubit " +
                             std::to_string(q));
        }
    }
    if (w.size() == 2 && w[0] == w[1]) {
        throw InputError("two-qubit gate repeats qubit " + std::to_string(w[0]));
    }
    gates_.push_back(gate);
}

void Circuit::measure(Qubit qubit, int clbit) {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw InputError("measured qubit " + std::to_string(qubit) +
                         " out of range");
    }
    if (clbit < 0 || clbit >= num_clbits_) {
        throw InputError("classical bit " + std::to_string(clbit) +
                         " out of range");
    }
    measured_[static_cast<std::size_t>(qubit)] = true;
    measurements_.push_back({qubit, clbit});
}

void Circuit::append_mapped(const Circuit &other,
                            std::span<const Qubit> relabel) {
    for (const Gate &g : other.gates()) {
        Gate mapped = g;
        for (int i = 0; i < g.arity(); ++i) {
            mapped.qubits[static_cast<std::size_t>(i)] =
                relabel[static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(i)])];
        }
        add(mapped);
    }
}

void Circuit::set_measurements(std::vector<Measurement> measurements,
                               int num_clbits) {
    measurements_.clear();
    std::fill(measured_.begin(), measured_.end(), false);
    num_clbits_ = num_clbits;
    for (const auto &m : measurements) {
        measure(m.qubit, m.clbit);
    }
}

int cnot_count(std::span<const Gate> gates) noexcept {
    int n = 0;
    for (const Gate &g : gates) {
        if (g.kind == GateKind::CNOT) {
            n += 1;
        } else if (g.kind == GateKind::SWAP) {
            n += 3;
        }
    }
    return n;
}

int single_qubit_count(const Circuit &c) noexcept {
    return static_cast<int>(std::count_if(
        c.gates().begin(), c.gates().end(),
        [](const Gate &g) { return g.arity() == 1; }));
}

int depth(const Circuit &c) {
    std::vector<int> level(static_cast<std::size_t>(c.num_qubits()), 0);
    int d = 0;
    for (const Gate &g : c.gates()) {
        int l = 0;
        for (Qubit q : g.wires()) {
            l = std::max(l, level[static_cast<std::size_t>(q)]);
        }
        ++l;
        for (Qubit q : g.wires()) {
            level[static_cast<std::size_t>(q)] = l;
        }
        d = std::max(d, l);
    }
    return d;
}

Circuit lower_swaps(const Circuit &c) {
    Circuit out(c.num_qubits(), c.num_clbits());
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::SWAP) {
            const Qubit a = g.qubits[0];
            const Qubit b = g.qubits[1];
            out.add(Gate::cnot(a, b));
            out.add(Gate::cnot(b, a));
            out.add(Gate::cnot(a, b));
        } else {
            out.add(g);
        }
    }
    out.set_measurements(c.measurements(), c.num_clbits());
    return out;
}

} // namespace qgo::ir
