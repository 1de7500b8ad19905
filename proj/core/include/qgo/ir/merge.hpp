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

#pragma once

#include "qgo/ir/circuit.hpp"

namespace qgo::ir {

/// Entry tolerance below which a merged run counts as identity.
inline constexpr double kIdentityTolerance = 1e-12;

/**
 * Collapses every maximal run of single-qubit gates on a qubit into at most
 * one U3 (global phase dropped). Runs equal to the identity are deleted.
 * A run that already is a single U3 is kept verbatim, so the pass is
 * idempotent. Two-qubit gates and measurements are untouched.
 */
[[nodiscard]] Circuit merge_single_qubit_runs(const Circuit &c);

} // namespace qgo::ir
