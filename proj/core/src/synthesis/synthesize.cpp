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

#include "qgo/synthesis/synthesize.hpp"

#include <chrono>
#include <cmath>
#include <queue>
#include <string>
#include <tuple>

#include "qgo/error.hpp"
#include "qgo/rng.hpp"
#include "qgo/sim/simulate.hpp"

namespace qgo::synth {

std::string_view status_name(SynthesisStatus s) noexcept {
    switch (s) {
    case SynthesisStatus::Solved:
        return "solved";
    case SynthesisStatus::FellBackToOriginal:
        return "fell_back_to_original";
    case SynthesisStatus::BudgetExceeded:
        return "budget_exceeded";
    }
    return "unknown";
}

double verify_distance(const ir::Circuit &c, const sim::Matrix &target) {
    std::vector<int> local(static_cast<std::size_t>(c.num_qubits()));
    for (int q = 0; q < c.num_qubits(); ++q) {
        local[static_cast<std::size_t>(q)] = q;
    }
    return sim::distance(sim::gates_unitary(c.gates(), local), target);
}

namespace {

struct Node {
    double distance;
    int cnots;
    std::size_t order;
    Template structure;
    std::vector<double> params;
};

struct Worse {
    bool operator()(const Node &a, const Node &b) const {
        return std::tie(a.distance, a.cnots, a.order) >
               std::tie(b.distance, b.cnots, b.order);
    }
};

std::uint64_t structure_hash(const Template &tpl) {
    std::uint64_t h = 0x51ed270b27a5f3c1ULL;
    for (const DirectedEdge &e : tpl.cnots) {
        h = mix64(h ^ static_cast<std::uint64_t>(e.control * 8 + e.target + 1));
    }
    return h;
}

} // namespace

SynthesisResult synthesize(const sim::Matrix &target, int num_qubits,
                           std::span<const DirectedEdge> edges,
                           const SynthesisConfig &config) {
    if (num_qubits < 1 || num_qubits > 6) {
        throw InputError("synthesis supports 1 to 6 qubits, got " +
                         std::to_string(num_qubits));
    }
    if (target.dim() != (std::size_t{1} << num_qubits)) {
        throw InputError("target is " + std::to_string(target.dim()) + "x" +
                         std::to_string(target.dim()) + " but the group has " +
                         std::to_string(num_qubits) + " qubits");
    }
    if (target.unitarity_error() > 1e-8) {
        throw InputError("target matrix is not unitary");
    }
    for (const DirectedEdge &e : edges) {
        if (e.control < 0 || e.control >= num_qubits || e.target < 0 ||
            e.target >= num_qubits || e.control == e.target) {
            throw InputError("invalid local CNOT edge");
        }
    }

    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
        return used.count() > config.time_budget_seconds;
    };
    OptimizerOptions opt = config.optimizer;
    opt.stop_distance = config.threshold;

    SynthesisResult result;
    std::size_t created = 0;
    auto fit = [&](Template tpl) {
        OptimizeResult r = optimize_params(tpl, target,
                                           derive_seed(config.seed, structure_hash(tpl)), opt);
        ++result.nodes;
        return Node{r.distance, tpl.cnot_count(), created++, std::move(tpl),
                    std::move(r.params)};
    };
    Node best_seen{2.0, 0, 0, {}, {}};
    // Returns true once `node` is a verified solution.
    auto consider = [&](const Node &node) {
        if (node.distance < best_seen.distance) {
            best_seen = node;
        }
        if (node.distance > config.threshold) {
            return false;
        }
        ir::Circuit c = instantiate(node.structure, node.params);
        const double d = verify_distance(c, target);
        if (d > config.threshold) {
            return false;
        }
        result.status = SynthesisStatus::Solved;
        result.circuit = std::move(c);
        result.structure = node.structure;
        result.params = node.params;
        result.distance = d;
        return true;
    };

    std::priority_queue<Node, std::vector<Node>, Worse> open;
    {
        Node root = fit(Template{num_qubits, {}});
        if (consider(root)) {
            return result;
        }
        open.push(std::move(root));
    }
    bool budget_hit = false;
    while (!open.empty() && !budget_hit) {
        const Node node = open.top();
        open.pop();
        if (config.cnot_budget >= 0 && node.cnots >= config.cnot_budget) {
            continue;
        }
        for (const DirectedEdge &e : edges) {
            if (!node.structure.cnots.empty() && node.structure.cnots.back() == e) {
                continue;
            }
            if (result.nodes >= config.max_nodes || out_of_time()) {
                budget_hit = true;
                break;
            }
            Template child = node.structure;
            child.cnots.push_back(e);
            Node fitted = fit(std::move(child));
            if (consider(fitted)) {
                return result;
            }
            open.push(std::move(fitted));
        }
    }

    result.status = SynthesisStatus::BudgetExceeded;
    result.structure = best_seen.structure;
    result.params = best_seen.params;
    result.circuit = instantiate(best_seen.structure, best_seen.params);
    result.distance = verify_distance(result.circuit, target);
    return result;
}

SynthesisResult synthesize(const sim::Matrix &target, const topo::Topology &t,
                           const topo::QubitGroup &group,
                           const SynthesisConfig &config) {
    const std::vector<DirectedEdge> edges = local_edges(t, group);
    return synthesize(target, static_cast<int>(group.size()), edges, config);
}

} // namespace qgo::synth
