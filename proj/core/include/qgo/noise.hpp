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
 * @file noise.hpp
 * Outcome distributions, a Monte-Carlo depolarizing-noise sampler and the
 * multiplicative success-rate model.
 *
 * Bitstrings list qubit n-1 first, so basis index i prints as its binary
 * representation.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qgo/ir/circuit.hpp"

namespace qgo::noise {

using OutcomeDistribution = std::map<std::string, double>;

struct NoiseSpec {
    double two_qubit_error_p{0.0};
    double single_qubit_error_p{0.0};
};

/// Largest circuit sample_noisy accepts.
inline constexpr int kMaxSampledQubits = 16;

[[nodiscard]] std::string bitstring(std::uint64_t index, int num_qubits);

/// (1/2) Σ |p(x) - q(x)| over the union of supports.
[[nodiscard]] double tvd(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// Born probabilities of every qubit after running `c` on |0...0>; entries
/// below `cutoff` are omitted.
[[nodiscard]] OutcomeDistribution ideal_distribution(const ir::Circuit &c,
                                                     double cutoff = 1e-14);

/**
 * Empirical distribution over `shots` runs. After each CNOT a uniformly random
 * non-identity two-qubit Pauli hits its qubits with probability
 * two_qubit_error_p (after each single-qubit gate, a random X, Y or Z with
 * probability single_qubit_error_p). Shot s draws from a generator seeded
 * with derive_seed(seed, s), so the result does not depend on `jobs`.
 * Throws InputError for zero shots, probabilities outside [0, 1] or more
 * than kMaxSampledQubits qubits.
 */
[[nodiscard]] OutcomeDistribution sample_noisy(const ir::Circuit &c,
                                               const NoiseSpec &noise,
                                               std::uint64_t shots,
                                               std::uint64_t seed, int jobs = 1);

/// Π over gates of (1 - error probability); a SWAP counts as three CNOTs.
[[nodiscard]] double success_rate(const ir::Circuit &c, const NoiseSpec &noise);

} // namespace qgo::noise
