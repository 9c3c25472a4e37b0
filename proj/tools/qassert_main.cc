// Copyright 2026 The qassert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qassert/circuit_lang.h"
#include "qassert/report.h"
#include "qassert/runner.h"

using namespace qassert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Circuit load(const std::string &path) {
    auto source = read_file(path);
    try {
        return parse_circuit(source);
    } catch (const ParseError &e) {
        throw UsageError(e.format(path));
    }
}

struct RunArgs {
    std::string file;
    uint64_t shots = 1024;
    uint64_t seed = 0;
    double gate_p = 0;
    double readout_p = 0;
    bool depolarizing = false;
    std::vector<std::string> expect;
    std::string format = "table";
    bool filtered = false;
    unsigned threads = 0;
};

int do_run(const RunArgs &args) {
    Circuit lowered = lower_assertions(load(args.file));

    RunConfig config;
    config.shots = args.shots;
    config.seed = args.seed;
    config.threads = args.threads;
    bool noisy = args.gate_p != 0 || args.readout_p != 0 || args.depolarizing;
    if (noisy) {
        config.noise = NoiseModel{args.gate_p, args.readout_p, args.depolarizing};
        try {
            config.noise->validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    if (args.shots == 0) {
        throw UsageError("--shots must be positive");
    }

    RunStatistics stats = run_shots(lowered, config);

    size_t data_width = stats.data_positions().size();
    for (const auto &bits : args.expect) {
        if (bits.size() != data_width || bits.find_first_not_of("01") != std::string::npos) {
            throw UsageError("--expect '" + bits + "' must be a " + std::to_string(data_width) +
                             "-bit string over the data registers");
        }
    }

    std::optional<FilterReport> report;
    if (!args.expect.empty() && !stats.assertion_positions().empty()) {
        report = compute_filter_report(stats, accept_bitstrings(args.expect));
    }

    RunMetadata meta;
    meta.circuit_name = args.file;
    meta.seed = args.seed;
    meta.noise = config.noise;
    meta.expected = args.expect;
    meta.postselected_view = args.filtered;
    const RunStatistics &shown = args.filtered ? stats.postselected() : stats;
    auto format = args.format == "json" ? ReportFormat::Json : ReportFormat::Table;
    std::cout << render_report(shown, report, format, meta);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Statevector simulator with dynamic runtime assertions"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto *run = app.add_subcommand("run", "Lower assertions, run shots and report outcome statistics");
    run->add_option("file", run_args.file, "Circuit file (.qac)")->required();
    run->add_option("--shots", run_args.shots, "Number of shots")->default_val(1024);
    run->add_option("--seed", run_args.seed, "Master seed")->default_val(0);
    run->add_option("--noise-gate-p", run_args.gate_p, "Per-qubit error probability after each gate")
        ->check(CLI::Range(0.0, 1.0));
    run->add_option("--noise-readout-p", run_args.readout_p, "Readout flip probability")
        ->check(CLI::Range(0.0, 1.0));
    run->add_flag("--depolarizing", run_args.depolarizing, "Gate errors are uniform X/Y/Z instead of X");
    run->add_option("--expect", run_args.expect, "Accepted data bitstring (repeatable)");
    run->add_option("--format", run_args.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    run->add_flag("--filtered", run_args.filtered, "Show only shots that pass every assertion");
    run->add_option("--threads", run_args.threads, "Worker threads (0 = all cores)");

    std::string lower_file;
    auto *lower = app.add_subcommand("lower", "Print the circuit with assertions expanded into gadgets");
    lower->add_option("file", lower_file, "Circuit file (.qac)")->required();

    std::string check_file;
    auto *check = app.add_subcommand("check", "Parse and validate a circuit");
    check->add_option("file", check_file, "Circuit file (.qac)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run) {
            return do_run(run_args);
        }
        if (*lower) {
            std::cout << pretty_print(lower_assertions(load(lower_file)));
            return kExitOk;
        }
        if (*check) {
            auto circuit = load(check_file);
            std::cout << check_file << ": ok (" << circuit.num_qubits << " qubits, " << circuit.instructions.size()
                      << " instructions, " << circuit.count_assertions() << " assertions)\n";
            return kExitOk;
        }
    } catch (const UsageError &e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
