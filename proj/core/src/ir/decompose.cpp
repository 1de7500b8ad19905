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

#include "qgo/ir/decompose.hpp"

#include <numbers>

namespace qgo::ir {

void append_cz(Circuit &c, Qubit a, Qubit b) {
    c.add(Gate::h(b));
    c.add(Gate::cnot(a, b));
    c.add(Gate::h(b));
}

void append_cphase(Circuit &c, Qubit a, Qubit b, double lambda) {
    c.add(Gate::rz(a, lambda / 2));
    c.add(Gate::cnot(a, b));
    c.add(Gate::rz(b, -lambda / 2));
    c.add(Gate::cnot(a, b));
    c.add(Gate::rz(b, lambda / 2));
}

void append_rzz(Circuit &c, Qubit a, Qubit b, double theta) {
    c.add(Gate::cnot(a, b));
    c.add(Gate::rz(b, theta));
    c.add(Gate::cnot(a, b));
}

void append_ccx(Circuit &c, Qubit a, Qubit b, Qubit t) {
    constexpr double quarter = std::numbers::pi / 4;
    c.add(Gate::h(t));
    c.add(Gate::cnot(b, t));
    c.add(phase(t, -quarter));
    c.add(Gate::cnot(a, t));
    c.add(phase(t, quarter));
    c.add(Gate::cnot(b, t));
    c.add(phase(t, -quarter));
    c.add(Gate::cnot(a, t));
    c.add(phase(b, quarter));
    c.add(phase(t, quarter));
    c.add(Gate::h(t));
    c.add(Gate::cnot(a, b));
    c.add(phase(a, quarter));
    c.add(phase(b, -quarter));
    c.add(Gate::cnot(a, b));
}

} // namespace qgo::ir
