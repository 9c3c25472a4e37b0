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

#include "qassert/measurement.h"

#include <algorithm>
#include <cmath>

namespace qassert {

double prob_one(const StateVector &state, QubitId q) {
    state.check_qubit(q);
    uint64_t m = uint64_t{1} << q.index;
    double p = 0;
    for (uint64_t i = 0; i < state.size(); i++) {
        if (i & m) {
            p += std::norm(state[i]);
        }
    }
    return std::clamp(p, 0.0, 1.0);
}

MeasurementRecord measure_in_place(StateVector &state, QubitId q, RngStream &rng) {
    double p1 = prob_one(state, q);
    bool outcome = rng.uniform() < p1;
    double p = outcome ? p1 : 1.0 - p1;
    if (!(p > 0)) {
        throw InternalError("sampled a measurement branch with zero probability");
    }
    // Renormalize by the branch mass summed directly rather than 1 - p1, which
    // loses precision when p1 is close to 1.
    uint64_t m = uint64_t{1} << q.index;
    double mass = 0;
    for (uint64_t i = 0; i < state.size(); i++) {
        if (static_cast<bool>(i & m) == outcome) {
            mass += std::norm(state[i]);
        }
    }
    state.project(q, outcome, mass);
    return {q, outcome, p};
}

std::pair<MeasurementRecord, StateVector> measure(StateVector state, QubitId q, RngStream &rng) {
    auto record = measure_in_place(state, q, rng);
    return {record, std::move(state)};
}

std::optional<StateVector> postselect(StateVector state, QubitId q, bool bit) {
    state.check_qubit(q);
    uint64_t m = uint64_t{1} << q.index;
    double mass = 0;
    for (uint64_t i = 0; i < state.size(); i++) {
        if (static_cast<bool>(i & m) == bit) {
            mass += std::norm(state[i]);
        }
    }
    if (mass < kBranchFloor) {
        return std::nullopt;
    }
    state.project(q, bit, mass);
    return state;
}

StateVector discard_qubit(const StateVector &state, QubitId q, bool bit) {
    state.check_qubit(q);
    if (state.num_qubits() < 2) {
        throw std::invalid_argument("cannot discard the only qubit of a state");
    }
    uint64_t low_mask = (uint64_t{1} << q.index) - 1;
    std::vector<Amplitude> out(state.size() / 2);
    double mass = 0;
    for (uint64_t j = 0; j < out.size(); j++) {
        uint64_t i = (j & low_mask) | ((j & ~low_mask) << 1) | (uint64_t{bit} << q.index);
        out[j] = state[i];
        mass += std::norm(out[j]);
    }
    if (mass < kBranchFloor) {
        throw std::invalid_argument("qubit " + std::to_string(q.index) + " never reads " + std::to_string(bit));
    }
    double scale = 1.0 / std::sqrt(mass);
    for (auto &a : out) {
        a *= scale;
    }
    return StateVector::from_amplitudes(std::move(out));
}

}  // namespace qassert
