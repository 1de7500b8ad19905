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

#include "qgo/sim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgo/error.hpp"
#include "qgo/partitioner.hpp"
#include "qgo/rng.hpp"
#include "qgo/sim/kernels.hpp"

namespace qgo::sim {

using ir::Gate;

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
    const std::size_t n = amps_.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw InputError("statevector length must be a power of two");
    }
    while ((std::size_t{1} << num_qubits_) < n) {
        ++num_qubits_;
    }
}

StateVector StateVector::zero(int num_qubits) {
    return basis(num_qubits, 0);
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    if (num_qubits < 0 || num_qubits > kMaxSimulatedQubits) {
        throw InputError("cannot allocate a statevector on " +
                         std::to_string(num_qubits) + " qubits");
    }
    std::vector<Complex> a(std::size_t{1} << num_qubits);
    if (index >= a.size()) {
        throw InputError("basis index out of range");
    }
    a[index] = 1.0;
    return StateVector(std::move(a));
}

StateVector StateVector::random(int num_qubits, std::uint64_t seed) {
    StateVector s = zero(num_qubits);
    Rng rng(seed);
    double norm2 = 0.0;
    for (Complex &a : s.amps_) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = {re, im};
        norm2 += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex &a : s.amps_) {
        a *= inv;
    }
    return s;
}

double StateVector::norm() const noexcept {
    double n2 = 0.0;
    for (const Complex &a : amps_) {
        n2 += std::norm(a);
    }
    return std::sqrt(n2);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return p;
}

StateVector simulate(const ir::Circuit &c, StateVector input) {
    if (c.num_qubits() > kMaxSimulatedQubits) {
        throw InputError("simulation limited to " +
                         std::to_string(kMaxSimulatedQubits) + " qubits");
    }
    if (input.num_qubits() != c.num_qubits()) {
        throw InputError("input state has " +
                         std::to_string(input.num_qubits()) +
                         " qubits, circuit has " +
                         std::to_string(c.num_qubits()));
    }
    for (const Gate &g : c.gates()) {
        apply_gate(input.amplitudes(), 1, g);
    }
    return input;
}

double state_infidelity(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw InputError("statevector length mismatch");
    }
    Complex overlap{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::max(0.0, 1.0 - std::norm(overlap));
}

double distance(const Matrix &u, const Matrix &v) {
    if (u.dim() != v.dim() || u.dim() == 0) {
        throw InputError("distance: dimension mismatch");
    }
    const double d =
        1.0 - std::abs(trace_inner(u, v)) / static_cast<double>(u.dim());
    return std::clamp(d, 0.0, 1.0);
}

Matrix gates_unitary(std::span<const Gate> gates,
                     std::span<const ir::Qubit> group) {
    if (group.size() > static_cast<std::size_t>(kMaxUnitaryQubits)) {
        throw InputError("unitary limited to " +
                         std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << group.size();
    Matrix u = Matrix::identity(dim);
    auto axis_of = [&](ir::Qubit q) {
        const auto it = std::lower_bound(group.begin(), group.end(), q);
        if (it == group.end() || *it != q) {
            throw InvariantError("gate qubit " + std::to_string(q) +
                                 " outside the unitary's qubit group");
        }
        return static_cast<ir::Qubit>(it - group.begin());
    };
    for (const Gate &g : gates) {
        Gate local = g;
        for (int i = 0; i < g.arity(); ++i) {
            const auto s = static_cast<std::size_t>(i);
            local.qubits[s] = axis_of(g.qubits[s]);
        }
        apply_gate(u.data(), dim, local);
    }
    return u;
}

Matrix block_unitary(const partition::Block &block, const ir::Circuit &source) {
    std::vector<Gate> gates;
    gates.reserve(block.gates.size());
    for (int idx : block.gates) {
        gates.push_back(source[static_cast<std::size_t>(idx)]);
    }
    return gates_unitary(gates, block.group.qubits);
}

Matrix circuit_unitary(const ir::Circuit &c) {
    std::vector<ir::Qubit> all(static_cast<std::size_t>(c.num_qubits()));
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<ir::Qubit>(i);
    }
    return gates_unitary(c.gates(), all);
}

StateVector permute_qubits(const StateVector &s, std::span<const int> perm) {
    const int n = s.num_qubits();
    if (static_cast<int>(perm.size()) != n) {
        throw InputError("permutation size does not match qubit count");
    }
    std::vector<Complex> out(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        std::size_t y = 0;
        for (int j = 0; j < n; ++j) {
            if (x >> j & 1U) {
                y |= std::size_t{1} << perm[static_cast<std::size_t>(j)];
            }
        }
        out[y] = s[x];
    }
    return StateVector(std::move(out));
}

} // namespace qgo::sim
