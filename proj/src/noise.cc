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

#include "qassert/noise.h"

#include <cmath>
#include <string>

namespace qassert {

void NoiseModel::validate() const {
    auto check = [](double p, const char *name) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
        }
    };
    check(gate_flip_p, "gate error probability");
    check(readout_flip_p, "readout error probability");
}

void apply_gate_noise(StateVector &state, std::span<const QubitId> touched, const NoiseModel &model,
                      RngStream &rng) {
    // No draws at all when noise is off, so a zero-noise run consumes the
    // same random stream as a noiseless one.
    if (model.gate_flip_p == 0) {
        return;
    }
    for (auto q : touched) {
        if (!rng.bernoulli(model.gate_flip_p)) {
            continue;
        }
        GateKind pauli = GateKind::X;
        if (model.depolarizing) {
            constexpr GateKind kPaulis[] = {GateKind::X, GateKind::Y, GateKind::Z};
            pauli = kPaulis[rng() % 3];
        }
        state.apply(Gate::single(pauli, q));
    }
}

bool apply_readout_noise(bool bit, const NoiseModel &model, RngStream &rng) {
    if (model.readout_flip_p == 0) {
        return bit;
    }
    return bit != rng.bernoulli(model.readout_flip_p);
}

}  // namespace qassert
