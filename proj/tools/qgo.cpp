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

// qgo: command-line front end.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgo/benchgen.hpp"
#include "qgo/error.hpp"
#include "qgo/ir/qasm.hpp"
#include "qgo/noise.hpp"
#include "qgo/pipeline.hpp"
#include "qgo/sim/simulate.hpp"
#include "qgo/synthesis/synthesize.hpp"
#include "qgo/topology.hpp"

namespace {

using namespace qgo;

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string &path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << text;
}

ir::Circuit load_circuit(const std::string &path) {
    try {
        return ir::parse_qasm(read_file(path));
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

// Default topology: a line over the circuit's qubits.
topo::Topology topology_for(const std::string &spec, const ir::Circuit &c) {
    if (spec.empty()) {
        return topo::Topology::line(std::max(c.num_qubits(), 1));
    }
    return topo::load_topology(spec);
}

struct Common {
    std::string topology;
    int k = 3;
    double threshold = 1e-10;
    double time_budget = 60.0;
    int max_nodes = 200;
    int jobs = 1;
    std::uint64_t seed = 0;
};

void add_synthesis_flags(CLI::App *cmd, Common &c) {
    cmd->add_option("--threshold", c.threshold, "Synthesis distance threshold")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-budget", c.time_budget, "Seconds allowed per block")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-nodes", c.max_nodes, "Templates fitted per block")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qgo: topology-aware quantum circuit optimizer"};
    app.require_subcommand(1);
    Common common;

    // optimize
    auto *opt = app.add_subcommand("optimize", "Route, partition, resynthesize, compose");
    std::string opt_in, opt_out, opt_report;
    bool assume_mapped = false;
    bool no_timings = false;
    opt->add_option("input", opt_in, "Input OpenQASM 2.0 file ('-' for stdin)")->required();
    opt->add_option("-o,--output", opt_out, "Output QASM file (default stdout)");
    opt->add_option("--topology", common.topology,
                    "line-N, grid-RxC or a JSON file (default: line over the circuit)");
    opt->add_option("--k", common.k, "Block size")->capture_default_str()->check(CLI::Range(2, 5));
    opt->add_option("--jobs", common.jobs, "Synthesis worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    opt->add_flag("--assume-mapped", assume_mapped,
                  "Skip routing; fail if a two-qubit gate is off-edge");
    opt->add_option("--report", opt_report, "Write a JSON report");
    opt->add_flag("--no-timings", no_timings, "Omit wall times from the report");
    add_synthesis_flags(opt, common);

    // partition
    auto *part = app.add_subcommand("partition", "Partition a mapped circuit into blocks");
    std::string part_in, part_dump;
    part->add_option("input", part_in, "Mapped QASM file")->required();
    part->add_option("--topology", common.topology, "Topology spec");
    part->add_option("--k", common.k, "Block size")->capture_default_str()->check(CLI::Range(2, 5));
    part->add_option("--dump-blocks", part_dump, "Write blocks as JSON (default stdout)");

    // synth
    auto *syn = app.add_subcommand("synth", "Resynthesize a small circuit's unitary");
    std::string syn_in, syn_out;
    syn->add_option("input", syn_in, "QASM file on at most 5 qubits")->required();
    syn->add_option("-o,--output", syn_out, "Output QASM file (default stdout)");
    syn->add_option("--topology", common.topology,
                    "Connectivity over the circuit's qubits (default line)");
    add_synthesis_flags(syn, common);

    // verify
    auto *ver = app.add_subcommand("verify", "Compare two circuits by simulation");
    std::string ver_a, ver_b;
    ver->add_option("original", ver_a, "Original QASM")->required();
    ver->add_option("optimized", ver_b, "Optimized QASM")->required();
    ver->add_option("--seed", common.seed, "Seed for random input states")->capture_default_str();

    // simulate
    auto *simc = app.add_subcommand("simulate", "Sample measurement outcomes under noise");
    std::string sim_in;
    double noise_p = 0.0;
    std::uint64_t shots = 8192;
    simc->add_option("input", sim_in, "QASM file")->required();
    simc->add_option("--noise-p", noise_p, "Error probability per CNOT")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    simc->add_option("--shots", shots, "Number of shots")->capture_default_str();
    simc->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    simc->add_option("--jobs", common.jobs, "Worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    // bench
    auto *ben = app.add_subcommand("bench", "Emit a benchmark circuit as QASM");
    std::string family, ben_out;
    int size = 0;
    ben->add_option("--family", family, "qft, tfim, qaoa or adder")->required();
    ben->add_option("--n", size, "Qubits (operand bits for adder)")->required();
    ben->add_option("--seed", common.seed, "Graph/angle seed (qaoa)")->capture_default_str();
    ben->add_option("-o,--output", ben_out, "Output file (default stdout)");

    // stats
    auto *sta = app.add_subcommand("stats", "Print circuit statistics as JSON");
    std::string sta_in;
    sta->add_option("input", sta_in, "QASM file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*opt) {
            const ir::Circuit c = load_circuit(opt_in);
            const topo::Topology t = topology_for(common.topology, c);
            pipeline::OptimizeOptions o;
            o.k = common.k;
            o.threshold = common.threshold;
            o.time_budget_seconds = common.time_budget;
            o.max_nodes = common.max_nodes;
            o.jobs = common.jobs;
            o.seed = common.seed;
            o.assume_mapped = assume_mapped;
            o.record_timings = !no_timings;
            const pipeline::OptimizeOutcome r = pipeline::run_optimize(c, t, o);
            write_output(opt_out, pipeline::optimized_qasm(r));
            if (!opt_report.empty()) {
                write_output(opt_report, pipeline::report_json(r, o));
            }
        } else if (*part) {
            const ir::Circuit c = load_circuit(part_in);
            const topo::Topology t = topology_for(common.topology, c);
            const auto p = partition::partition(ir::lower_swaps(c), t, common.k);
            write_output(part_dump, pipeline::partition_json(p));
        } else if (*syn) {
            const ir::Circuit c = load_circuit(syn_in);
            if (c.num_qubits() > 5) {
                throw InputError("synth accepts at most 5 qubits");
            }
            const topo::Topology t = topology_for(common.topology, c);
            topo::QubitGroup group;
            for (int q = 0; q < c.num_qubits(); ++q) {
                group.qubits.push_back(q);
            }
            synth::SynthesisConfig cfg;
            cfg.threshold = common.threshold;
            cfg.time_budget_seconds = common.time_budget;
            cfg.max_nodes = common.max_nodes;
            cfg.seed = common.seed;
            cfg.cnot_budget = ir::cnot_count(c) - 1;
            const auto r = synth::synthesize(sim::circuit_unitary(c), t, group, cfg);
            std::fprintf(stderr, "status %s, %d -> %d CNOTs, distance %.3g\n",
                         std::string(synth::status_name(r.status)).c_str(),
                         ir::cnot_count(c), r.cnot_count(), r.distance);
            write_output(syn_out, ir::write_qasm(r.status == synth::SynthesisStatus::Solved
                                                     ? r.circuit
                                                     : c));
        } else if (*ver) {
            const ir::Circuit a = load_circuit(ver_a);
            const std::string text = read_file(ver_b);
            ir::Circuit b;
            try {
                b = ir::parse_qasm(text);
            } catch (const ParseError &e) {
                throw InputError(ver_b + ": " + e.what());
            }
            const auto r = pipeline::run_verify(a, b, pipeline::read_layouts(text), common.seed);
            write_output("", pipeline::verify_json(r));
        } else if (*simc) {
            const ir::Circuit c = load_circuit(sim_in);
            const noise::NoiseSpec spec{noise_p, 0.0};
            const auto dist = noise::sample_noisy(c, spec, shots, common.seed, common.jobs);
            nlohmann::ordered_json j;
            j["shots"] = shots;
            j["noise_p"] = noise_p;
            j["seed"] = common.seed;
            j["distribution"] = dist;
            j["tvd_to_ideal"] = noise::tvd(dist, noise::ideal_distribution(c));
            j["success_rate"] = noise::success_rate(c, spec);
            write_output("", j.dump(2) + "\n");
        } else if (*ben) {
            write_output(ben_out, ir::write_qasm(bench::generate(family, size, common.seed)));
        } else if (*sta) {
            write_output("", pipeline::stats_json(load_circuit(sta_in)));
        }
    } catch (const InputError &e) {
        std::fprintf(stderr, "qgo: error: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "qgo: internal error: %s\n", e.what());
        return kExitInternal;
    }
    return 0;
}
