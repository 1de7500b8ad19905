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
 * @file composer.hpp
 * Stitches synthesized blocks back into one circuit.
 */
#pragma once

#include <span>

#include "qgo/ir/circuit.hpp"
#include "qgo/partitioner.hpp"
#include "qgo/synthesis/synthesize.hpp"

namespace qgo::compose {

/// True when the synthesized circuit replaces the block: status Solved and
/// strictly fewer CNOTs.
[[nodiscard]] bool use_synthesized(const partition::Block &block,
                                   const synth::SynthesisResult &result);

/**
 * Concatenates, block by block, either the synthesized circuit (relabelled
 * from local positions to the block's group) or the block's original gates,
 * merges single-qubit runs, and re-appends the source's measurements.
 * Throws InputError when the result count does not match the block count.
 */
[[nodiscard]] ir::Circuit compose(const partition::Partition &p,
                                  std::span<const synth::SynthesisResult> results,
                                  const ir::Circuit &source);

/// (cnot(before) - cnot(after)) / cnot(before); 0 when before has none.
[[nodiscard]] double cnot_reduction(const ir::Circuit &before,
                                    const ir::Circuit &after);

} // namespace qgo::compose
