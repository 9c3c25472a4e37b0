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

#ifndef QASSERT_NOISE_H
#define QASSERT_NOISE_H

#include <span>

#include "qassert/rng.h"
#include "qassert/state_vector.h"

namespace qassert {

/// Stochastic Pauli errors applied as quantum trajectories.
struct NoiseModel {
    /// Chance of an error on each qubit a gate touches, applied after the gate.
    double gate_flip_p = 0;
    /// Chance that a recorded measurement bit is flipped.
    double readout_flip_p = 0;
    /// Gate errors are a uniformly chosen X, Y or Z instead of always X.
    bool depolarizing = false;

    /// Throws std::invalid_argument unless both probabilities are in [0, 1].
    void validate() const;
    bool is_noiseless() const { return gate_flip_p == 0 && readout_flip_p == 0; }
};

void apply_gate_noise(StateVector &state, std::span<const QubitId> touched, const NoiseModel &model, RngStream &rng);

bool apply_readout_noise(bool bit, const NoiseModel &model, RngStream &rng);

}  // namespace qassert

#endif
