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

#include "qassert/runner.h"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include "qassert/measurement.h"

namespace qassert {

namespace {

void require_lowered(const Circuit &circuit) {
    if (circuit.has_assertions()) {
        throw std::invalid_argument("circuit still contains assertions; lower it before running");
    }
}

/// Creg slot of every measurement, in instruction order.
std::vector<size_t> measurement_slots(const Circuit &circuit) {
    std::map<std::string_view, size_t> slot_of;
    for (size_t k = 0; k < circuit.creg_names.size(); k++) {
        slot_of[circuit.creg_names[k]] = k;
    }
    std::vector<size_t> slots;
    for (const auto &instr : circuit.instructions) {
        if (const auto *m = std::get_if<MeasureInstr>(&instr.op)) {
            auto it = slot_of.find(m->creg);
            if (it == slot_of.end()) {
                throw std::invalid_argument("measurement into undeclared register '" + m->creg + "'");
            }
            slots.push_back(it->second);
        }
    }
    return slots;
}

/// Runs one trajectory, writing recorded bits into `bits`.
StateVector run_trajectory(const Circuit &circuit, std::span<const size_t> slots, RngStream &rng,
                           const NoiseModel *noise, const StateVector *initial, std::string &bits) {
    StateVector state = initial_state_for(circuit, initial);
    bits.assign(circuit.creg_names.size(), '0');
    size_t next_slot = 0;
    for (const auto &instr : circuit.instructions) {
        if (const auto *g = std::get_if<GateInstr>(&instr.op)) {
            state.apply(g->gate);
            if (noise != nullptr) {
                auto touched = g->gate.operands();
                apply_gate_noise(state, touched, *noise, rng);
            }
        } else if (const auto *m = std::get_if<MeasureInstr>(&instr.op)) {
            bool bit = measure_in_place(state, m->qubit, rng).outcome;
            if (noise != nullptr) {
                bit = apply_readout_noise(bit, *noise, rng);
            }
            bits[slots[next_slot++]] = bit ? '1' : '0';
        }
    }
    return state;
}

void record(RunStatistics &stats, const std::string &bits) {
    stats.total_shots++;
    stats.counts[bits]++;
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1' && is_assertion_creg(stats.creg_names[k])) {
            stats.assertion_fail_counts[stats.creg_names[k].substr(kAssertCregPrefix.size())]++;
        }
    }
}

}  // namespace

void RunStatistics::merge(const RunStatistics &other) {
    if (other.creg_names != creg_names) {
        throw std::invalid_argument("cannot merge statistics of different circuits");
    }
    total_shots += other.total_shots;
    for (const auto &[bits, n] : other.counts) {
        counts[bits] += n;
    }
    for (const auto &[label, n] : other.assertion_fail_counts) {
        assertion_fail_counts[label] += n;
    }
}

std::vector<size_t> RunStatistics::assertion_positions() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < creg_names.size(); k++) {
        if (is_assertion_creg(creg_names[k])) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<size_t> RunStatistics::data_positions() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < creg_names.size(); k++) {
        if (!is_assertion_creg(creg_names[k])) {
            out.push_back(k);
        }
    }
    return out;
}

std::string RunStatistics::data_bits(std::string_view bitstring) const {
    std::string out;
    for (size_t k : data_positions()) {
        out += bitstring[k];
    }
    return out;
}

bool RunStatistics::all_assertions_pass(std::string_view bitstring) const {
    return std::ranges::all_of(assertion_positions(), [&](size_t k) { return bitstring[k] == '0'; });
}

RunStatistics RunStatistics::postselected() const {
    RunStatistics out;
    out.creg_names = creg_names;
    for (const auto &[label, n] : assertion_fail_counts) {
        out.assertion_fail_counts[label] = 0;
    }
    for (const auto &[bits, n] : counts) {
        if (all_assertions_pass(bits)) {
            out.counts[bits] = n;
            out.total_shots += n;
        }
    }
    return out;
}

RunStatistics empty_statistics(const Circuit &lowered) {
    RunStatistics stats;
    stats.creg_names = lowered.creg_names;
    for (const auto &name : lowered.creg_names) {
        if (is_assertion_creg(name)) {
            stats.assertion_fail_counts[name.substr(kAssertCregPrefix.size())] = 0;
        }
    }
    return stats;
}

StateVector initial_state_for(const Circuit &lowered, const StateVector *initial) {
    if (initial == nullptr) {
        return StateVector::basis(lowered.num_qubits);
    }
    if (initial->num_qubits() > lowered.num_qubits) {
        throw std::invalid_argument("initial state has more qubits than the circuit");
    }
    if (initial->num_qubits() == lowered.num_qubits) {
        return *initial;
    }
    return initial->tensor(StateVector::basis(lowered.num_qubits - initial->num_qubits()));
}

ShotResult execute_shot(const Circuit &lowered, RngStream &rng, const NoiseModel *noise,
                        const StateVector *initial_state) {
    require_lowered(lowered);
    if (noise != nullptr) {
        noise->validate();
    }
    auto slots = measurement_slots(lowered);
    std::string bits;
    StateVector final_state = run_trajectory(lowered, slots, rng, noise, initial_state, bits);
    ShotRecord rec;
    for (size_t k = 0; k < bits.size(); k++) {
        const auto &name = lowered.creg_names[k];
        rec.creg_values[name] = bits[k] == '1';
        if (is_assertion_creg(name)) {
            rec.assertion_passed[name.substr(kAssertCregPrefix.size())] = bits[k] == '0';
        }
    }
    return {std::move(rec), std::move(final_state)};
}

RunStatistics run_shot_range(const Circuit &lowered, const RunConfig &config, uint64_t first, uint64_t count) {
    require_lowered(lowered);
    const NoiseModel *noise = config.noise ? &*config.noise : nullptr;
    if (noise != nullptr) {
        noise->validate();
    }
    const StateVector *initial = config.initial_state ? &*config.initial_state : nullptr;
    auto slots = measurement_slots(lowered);
    RunStatistics stats = empty_statistics(lowered);
    std::string bits;
    for (uint64_t k = first; k < first + count; k++) {
        auto rng = RngStream::for_shot(config.seed, k);
        run_trajectory(lowered, slots, rng, noise, initial, bits);
        record(stats, bits);
    }
    return stats;
}

RunStatistics run_shots(const Circuit &lowered, const RunConfig &config) {
    require_lowered(lowered);
    uint64_t threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::clamp<uint64_t>(threads, 1, std::max<uint64_t>(1, config.shots / 1024));
    if (threads == 1) {
        return run_shot_range(lowered, config, 0, config.shots);
    }

    std::vector<RunStatistics> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        uint64_t per = config.shots / threads;
        uint64_t extra = config.shots % threads;
        uint64_t first = 0;
        for (uint64_t t = 0; t < threads; t++) {
            uint64_t count = per + (t < extra ? 1 : 0);
            workers.emplace_back([&, t, first, count] {
                try {
                    partial[t] = run_shot_range(lowered, config, first, count);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
            first += count;
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    RunStatistics stats = empty_statistics(lowered);
    for (const auto &p : partial) {
        stats.merge(p);
    }
    return stats;
}

RunStatistics run_shots(const Circuit &lowered, uint64_t shots, uint64_t master_seed,
                        std::optional<NoiseModel> noise) {
    RunConfig config;
    config.shots = shots;
    config.seed = master_seed;
    config.noise = std::move(noise);
    return run_shots(lowered, config);
}

std::map<std::string, double> outcome_distribution(const Circuit &lowered,
                                                   const std::optional<StateVector> &initial_state) {
    require_lowered(lowered);
    auto slots = measurement_slots(lowered);
    std::map<std::string, double> dist;
    const auto &instrs = lowered.instructions;

    auto recurse = [&](auto &self, size_t pc, size_t slot, StateVector state, std::string bits,
                       double weight) -> void {
        for (; pc < instrs.size(); pc++) {
            if (const auto *g = std::get_if<GateInstr>(&instrs[pc].op)) {
                state.apply(g->gate);
                continue;
            }
            const auto &m = std::get<MeasureInstr>(instrs[pc].op);
            double p1 = prob_one(state, m.qubit);
            for (bool bit : {false, true}) {
                double p = bit ? p1 : 1.0 - p1;
                if (weight * p < kBranchFloor) {
                    continue;
                }
                auto branch = postselect(state, m.qubit, bit);
                if (!branch) {
                    continue;
                }
                std::string next_bits = bits;
                next_bits[slots[slot]] = bit ? '1' : '0';
                self(self, pc + 1, slot + 1, std::move(*branch), std::move(next_bits), weight * p);
            }
            return;
        }
        dist[bits] += weight;
    };

    const StateVector *initial = initial_state ? &*initial_state : nullptr;
    recurse(recurse, 0, 0, initial_state_for(lowered, initial), std::string(lowered.creg_names.size(), '0'), 1.0);
    return dist;
}

ExpectedPredicate accept_bitstrings(std::vector<std::string> accepted) {
    std::set<std::string, std::less<>> set(accepted.begin(), accepted.end());
    return [set = std::move(set)](std::string_view bits) { return set.contains(bits); };
}

FilterReport compute_filter_report(const RunStatistics &stats, const ExpectedPredicate &expected) {
    if (stats.total_shots == 0) {
        throw std::invalid_argument("filter report needs at least one shot");
    }
    uint64_t violating = 0;
    uint64_t passing = 0;
    uint64_t passing_violating = 0;
    for (const auto &[bits, n] : stats.counts) {
        bool bad = !expected(stats.data_bits(bits));
        bool pass = stats.all_assertions_pass(bits);
        violating += bad ? n : 0;
        passing += pass ? n : 0;
        passing_violating += (bad && pass) ? n : 0;
    }
    FilterReport report;
    auto total = static_cast<double>(stats.total_shots);
    report.raw_error_rate = static_cast<double>(violating) / total;
    report.kept_shots = passing;
    report.kept_fraction = static_cast<double>(passing) / total;
    if (passing > 0) {
        report.filtered_error_rate = static_cast<double>(passing_violating) / static_cast<double>(passing);
        if (report.raw_error_rate > 0) {
            report.relative_reduction =
                (report.raw_error_rate - *report.filtered_error_rate) / report.raw_error_rate;
        }
    }
    return report;
}

}  // namespace qassert
