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

#ifndef QASSERT_MEASUREMENT_H
#define QASSERT_MEASUREMENT_H

#include <optional>
#include <utility>

#include "qassert/rng.h"
#include "qassert/state_vector.h"

namespace qassert {

/// Branches with probability below this are treated as impossible.
constexpr double kBranchFloor = 1e-12;

struct MeasurementRecord {
    QubitId qubit;
    bool outcome;
    /// Born-rule probability of `outcome` at the moment of measurement.
    double probability_of_outcome;
};

/// Probability that measuring `q` yields 1.
double prob_one(const StateVector &state, QubitId q);
inline double prob_zero(const StateVector &state, QubitId q) {
    return 1.0 - prob_one(state, q);
}

/// Samples a computational-basis measurement of `q` and collapses `state`.
/// The post-state is renormalized with the exact branch mass.
MeasurementRecord measure_in_place(StateVector &state, QubitId q, RngStream &rng);

std::pair<MeasurementRecord, StateVector> measure(StateVector state, QubitId q, RngStream &rng);

/// The normalized branch of `state` in which `q` reads `bit`, or nullopt if
/// that branch has probability below kBranchFloor.
std::optional<StateVector> postselect(StateVector state, QubitId q, bool bit);

/// Removes qubit `q` from a state in which it reads `bit` with nonzero
/// probability, keeping only that branch (renormalized). Higher qubits shift
/// down by one. Throws std::invalid_argument if the branch is impossible or the
/// state has a single qubit.
StateVector discard_qubit(const StateVector &state, QubitId q, bool bit);

}  // namespace qassert

#endif
