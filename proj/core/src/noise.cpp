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

#include "qgo/noise.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "qgo/error.hpp"
#include "qgo/rng.hpp"
#include "qgo/sim/kernels.hpp"
#include "qgo/sim/simulate.hpp"

namespace qgo::noise {

using ir::Gate;
using ir::GateKind;
using sim::Complex;

std::string bitstring(std::uint64_t index, int num_qubits) {
    std::string s(static_cast<std::size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) {
            s[static_cast<std::size_t>(num_qubits - 1 - q)] = '1';
        }
    }
    return s;
}

double tvd(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    double sum = 0.0;
    auto a = p.begin();
    auto b = q.begin();
    while (a != p.end() || b != q.end()) {
        if (b == q.end() || (a != p.end() && a->first < b->first)) {
            sum += std::abs(a->second);
            ++a;
        } else if (a == p.end() || b->first < a->first) {
            sum += std::abs(b->second);
            ++b;
        } else {
            sum += std::abs(a->second - b->second);
            ++a;
            ++b;
        }
    }
    return 0.5 * sum;
}

OutcomeDistribution ideal_distribution(const ir::Circuit &c, double cutoff) {
    const sim::StateVector s = sim::simulate(c, sim::StateVector::zero(c.num_qubits()));
    const std::vector<double> probs = s.probabilities();
    OutcomeDistribution out;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] >= cutoff && probs[i] > 0.0) {
            out.emplace(bitstring(i, c.num_qubits()), probs[i]);
        }
    }
    return out;
}

namespace {

const sim::Mat2 kPaulis[4] = {
    {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}},
    {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}},
    {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}},
    {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}},
};

struct Fault {
    std::size_t after_gate;
    int pauli_first;  // 0..3, Pauli on the gate's first qubit
    int pauli_second; // 0..3, on the second qubit (two-qubit gates)
};

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError(std::string(what) + " must lie in [0, 1]");
    }
}

class ShotSampler {
  public:
    ShotSampler(const ir::Circuit &c, const NoiseSpec &noise)
        : c_(c), noise_(noise) {
        const sim::StateVector s =
            sim::simulate(c, sim::StateVector::zero(c.num_qubits()));
        const std::vector<double> probs = s.probabilities();
        cumulative_.resize(probs.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            cumulative_[i] = acc;
        }
    }

    std::uint64_t shot(std::uint64_t seed) const {
        Rng rng(seed);
        std::vector<Fault> faults;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Gate &g = c_[i];
            if (g.is_two_qubit()) {
                if (uniform01(rng) < noise_.two_qubit_error_p) {
                    const auto which = 1 + static_cast<int>(uniform_index(rng, 15));
                    faults.push_back({i, which / 4, which % 4});
                }
            } else if (noise_.single_qubit_error_p > 0.0 &&
                       uniform01(rng) < noise_.single_qubit_error_p) {
                faults.push_back({i, 1 + static_cast<int>(uniform_index(rng, 3)), 0});
            }
        }
        if (faults.empty()) {
            return draw(cumulative_, uniform01(rng));
        }
        sim::StateVector s = sim::StateVector::zero(c_.num_qubits());
        auto amps = s.amplitudes();
        std::size_t next = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Gate &g = c_[i];
            sim::apply_gate(amps, 1, g);
            for (; next < faults.size() && faults[next].after_gate == i; ++next) {
                sim::apply_1q(amps, 1, g.qubits[0], kPaulis[faults[next].pauli_first]);
                if (g.is_two_qubit()) {
                    sim::apply_1q(amps, 1, g.qubits[1],
                                  kPaulis[faults[next].pauli_second]);
                }
            }
        }
        std::vector<double> cum(s.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            acc += std::norm(amps[i]);
            cum[i] = acc;
        }
        return draw(cum, uniform01(rng));
    }

  private:
    static std::uint64_t draw(const std::vector<double> &cum, double u) {
        const double x = u * cum.back();
        const auto it = std::upper_bound(cum.begin(), cum.end(), x);
        const auto idx = static_cast<std::size_t>(it - cum.begin());
        return std::min(idx, cum.size() - 1);
    }

    const ir::Circuit &c_;
    NoiseSpec noise_;
    std::vector<double> cumulative_;
};

} // namespace

OutcomeDistribution sample_noisy(const ir::Circuit &c, const NoiseSpec &noise,
                                 std::uint64_t shots, std::uint64_t seed, int jobs) {
    if (shots == 0) {
        throw InputError("shots must be positive");
    }
    check_probability(noise.two_qubit_error_p, "two-qubit error probability");
    check_probability(noise.single_qubit_error_p, "single-qubit error probability");
    if (c.num_qubits() > kMaxSampledQubits) {
        throw InputError("noisy sampling supports at most " +
                         std::to_string(kMaxSampledQubits) + " qubits");
    }
    const ir::Circuit lowered = ir::lower_swaps(c);
    const ShotSampler sampler(lowered, noise);
    const std::size_t workers =
        std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, shots);
    std::vector<std::vector<std::uint64_t>> counts(
        workers, std::vector<std::uint64_t>(std::size_t{1} << c.num_qubits(), 0));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t s = w; s < shots; s += workers) {
                    ++counts[w][sampler.shot(derive_seed(seed, s))];
                }
            });
        }
    }
    OutcomeDistribution out;
    for (std::size_t i = 0; i < counts[0].size(); ++i) {
        std::uint64_t total = 0;
        for (const auto &cw : counts) {
            total += cw[i];
        }
        if (total > 0) {
            out.emplace(bitstring(i, c.num_qubits()),
                        static_cast<double>(total) / static_cast<double>(shots));
        }
    }
    return out;
}

double success_rate(const ir::Circuit &c, const NoiseSpec &noise) {
    check_probability(noise.two_qubit_error_p, "two-qubit error probability");
    check_probability(noise.single_qubit_error_p, "single-qubit error probability");
    double rate = 1.0;
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::CNOT) {
            rate *= 1.0 - noise.two_qubit_error_p;
        } else if (g.kind == GateKind::SWAP) {
            rate *= std::pow(1.0 - noise.two_qubit_error_p, 3);
        } else {
            rate *= 1.0 - noise.single_qubit_error_p;
        }
    }
    return rate;
}

} // namespace qgo::noise
