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

#include "qgo/composer.hpp"

#include <string>

#include "qgo/error.hpp"
#include "qgo/ir/merge.hpp"

namespace qgo::compose {

bool use_synthesized(const partition::Block &block,
                     const synth::SynthesisResult &result) {
    return result.status == synth::SynthesisStatus::Solved &&
           result.cnot_count() < block.cnot_count;
}

ir::Circuit compose(const partition::Partition &p,
                    std::span<const synth::SynthesisResult> results,
                    const ir::Circuit &source) {
    if (results.size() != p.blocks.size()) {
        throw InputError("got " + std::to_string(results.size()) +
                         " synthesis results for " +
                         std::to_string(p.blocks.size()) + " blocks");
    }
    ir::Circuit out(source.num_qubits(), source.num_clbits());
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const partition::Block &block = p.blocks[b];
        const synth::SynthesisResult &r = results[b];
        if (use_synthesized(block, r)) {
            if (r.circuit.num_qubits() != static_cast<int>(block.group.size())) {
                throw InputError("synthesized circuit for block " + std::to_string(b) +
                                 " does not match its group size");
            }
            out.append_mapped(r.circuit, block.group.qubits);
        } else {
            for (int g : block.gates) {
                out.add(source[static_cast<std::size_t>(g)]);
            }
        }
    }
    out = ir::merge_single_qubit_runs(out);
    out.set_measurements(source.measurements(), source.num_clbits());
    return out;
}

double cnot_reduction(const ir::Circuit &before, const ir::Circuit &after) {
    const int b = ir::cnot_count(before);
    if (b == 0) {
        return 0.0;
    }
    return static_cast<double>(b - ir::cnot_count(after)) / static_cast<double>(b);
}

} // namespace qgo::compose
