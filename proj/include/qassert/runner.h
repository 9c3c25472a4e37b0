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

#ifndef QASSERT_RUNNER_H
#define QASSERT_RUNNER_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qassert/circuit.h"
#include "qassert/noise.h"
#include "qassert/rng.h"
#include "qassert/state_vector.h"

namespace qassert {

struct ShotRecord {
    std::map<std::string, bool> creg_values;
    /// Assertion label -> true if the assertion passed (its ancilla read 0).
    std::map<std::string, bool> assertion_passed;
};

struct ShotResult {
    ShotRecord record;
    StateVector final_state;
};

struct RunConfig {
    uint64_t shots = 1024;
    uint64_t seed = 0;
    std::optional<NoiseModel> noise;
    /// Starting state of the low qubits. Remaining (ancilla) qubits start in
    /// |0>. Defaults to |0...0>.
    std::optional<StateVector> initial_state;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Aggregated outcome counts. Bitstrings list one character per creg in
/// `creg_names` order (leftmost = first declared).
struct RunStatistics {
    uint64_t total_shots = 0;
    std::vector<std::string> creg_names;
    std::map<std::string, uint64_t> counts;
    /// Every assertion label, including those that never failed.
    std::map<std::string, uint64_t> assertion_fail_counts;

    /// Adds another run of the same circuit. Order-independent.
    void merge(const RunStatistics &other);

    /// Positions in the bitstring that hold assertion ancilla results.
    std::vector<size_t> assertion_positions() const;
    std::vector<size_t> data_positions() const;
    /// Data bits of `bitstring` (assertion positions removed).
    std::string data_bits(std::string_view bitstring) const;
    bool all_assertions_pass(std::string_view bitstring) const;

    /// Shots in which every assertion passed. Assertion counters are kept (all
    /// zero).
    RunStatistics postselected() const;
};

/// Empty statistics for a lowered circuit, with every assertion label present.
RunStatistics empty_statistics(const Circuit &lowered);

/// One shot. Throws std::invalid_argument for circuits that still contain
/// assertions.
ShotResult execute_shot(const Circuit &lowered, RngStream &rng, const NoiseModel *noise = nullptr,
                        const StateVector *initial_state = nullptr);

/// Shot k uses RngStream::for_shot(seed, k). The result depends only on the
/// circuit and the config, not on how shots are split across threads.
RunStatistics run_shots(const Circuit &lowered, const RunConfig &config);
RunStatistics run_shots(const Circuit &lowered, uint64_t shots, uint64_t master_seed,
                        std::optional<NoiseModel> noise = std::nullopt);

/// Runs only shots [first, first + count) of a run, for split execution.
RunStatistics run_shot_range(const Circuit &lowered, const RunConfig &config, uint64_t first, uint64_t count);

/// Exact noiseless probability of each creg bitstring, obtained by branching on
/// every measurement. Branches below kBranchFloor are dropped.
std::map<std::string, double> outcome_distribution(const Circuit &lowered,
                                                   const std::optional<StateVector> &initial_state = std::nullopt);

/// Input to the start state of a run; pads `initial` with |0> ancillas.
StateVector initial_state_for(const Circuit &lowered, const StateVector *initial);

using ExpectedPredicate = std::function<bool(std::string_view data_bits)>;

/// Predicate accepting exactly the listed data bitstrings.
ExpectedPredicate accept_bitstrings(std::vector<std::string> accepted);

struct FilterReport {
    double raw_error_rate = 0;
    /// Absent when no shot passed every assertion.
    std::optional<double> filtered_error_rate;
    /// (raw - filtered) / raw. Absent when raw is 0 or filtered is absent.
    std::optional<double> relative_reduction;
    double kept_fraction = 0;
    uint64_t kept_shots = 0;
};

/// raw = violating / total; filtered = (passing and violating) / passing;
/// kept = passing / total. "Violating" means the data bits fail `expected`.
/// Throws std::invalid_argument on empty statistics.
FilterReport compute_filter_report(const RunStatistics &stats, const ExpectedPredicate &expected);

}  // namespace qassert

#endif
