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

// Fixed lowerings of composite gates into {CNOT, single-qubit}. The CNOT
// counts of these are constants other code relies on.
#pragma once

#include "qgo/ir/circuit.hpp"

namespace qgo::ir {

/// diag(1, e^{i lambda}) exactly, as U3(0, 0, lambda).
[[nodiscard]] inline Gate phase(Qubit q, double lambda) {
    return Gate::u3(q, 0.0, 0.0, lambda);
}

/// CZ: 1 CNOT.
void append_cz(Circuit &c, Qubit a, Qubit b);

/// Controlled phase diag(1,1,1,e^{i lambda}) up to global phase: 2 CNOTs.
void append_cphase(Circuit &c, Qubit a, Qubit b, double lambda);

/// exp(-i theta/2 Z⊗Z): CNOT, RZ(theta) on b, CNOT. 2 CNOTs.
void append_rzz(Circuit &c, Qubit a, Qubit b, double theta);

/// Toffoli with controls a, b and target t: 6 CNOTs, exact (no global
/// phase) since T gates are emitted as phase gates.
void append_ccx(Circuit &c, Qubit a, Qubit b, Qubit t);

} // namespace qgo::ir
