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
 * @file qasm.hpp
 * OpenQASM 2.0 subset reader and writer.
 *
 * Accepted: one `qreg`, at most one `creg`, the gates rx ry rz u3 h x cx swap
 * plus the aliases id u1 p u2 u z y s sdg t tdg sx cz cp cu1 ccx, which are
 * rewritten into the internal gate set (single-qubit aliases up to global
 * phase). `barrier` is accepted and dropped. `measure` must form a terminal
 * layer per qubit. Angle arguments are arithmetic expressions over numbers
 * and `pi`.
 */
#pragma once

#include <string>
#include <string_view>

#include "qgo/ir/circuit.hpp"

namespace qgo::ir {

/// Throws ParseError naming the line and token on any unsupported input.
[[nodiscard]] Circuit parse_qasm(std::string_view text);

/// Angles are written with 17 significant digits so parsing is lossless.
[[nodiscard]] std::string write_qasm(const Circuit &c);

} // namespace qgo::ir
