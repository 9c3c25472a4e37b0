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

#include "qassert/assertions.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "qassert/measurement.h"

namespace qassert {

namespace {

/// Bit mask of the targets whose CNOT count in the entanglement gadget is odd.
uint64_t effective_parity_mask(const std::vector<QubitId> &targets) {
    uint64_t mask = 0;
    for (auto q : targets) {
        mask ^= uint64_t{1} << q.index;
    }
    if (targets.size() % 2 == 1) {
        mask ^= uint64_t{1} << targets.back().index;
    }
    return mask;
}

void check_targets(const AssertionSpec &spec, const StateVector &input) {
    spec.validate();
    for (auto q : spec.targets) {
        if (q.index >= input.num_qubits()) {
            throw std::invalid_argument("assertion target " + std::to_string(q.index) + " is outside the " +
                                        std::to_string(input.num_qubits()) + "-qubit input state");
        }
    }
}

/// Indices where the ancilla would read 1 for the basis-diagonal gadgets.
bool diagonal_gadget_fires(const AssertionSpec &spec, uint64_t index) {
    if (spec.kind == AssertionKind::ClassicalEquals) {
        return static_cast<bool>((index >> spec.targets[0].index) & 1) != spec.expected;
    }
    uint64_t mask = effective_parity_mask(spec.targets);
    return static_cast<bool>(std::popcount(index & mask) & 1) != spec.expected;
}

}  // namespace

void AssertionSpec::validate() const {
    switch (kind) {
        case AssertionKind::ClassicalEquals:
        case AssertionKind::UniformSuperposition:
            if (targets.size() != 1) {
                throw std::invalid_argument("this assertion takes exactly one target qubit, got " +
                                            std::to_string(targets.size()));
            }
            break;
        case AssertionKind::Entangled: {
            if (targets.size() < 2) {
                throw std::invalid_argument("entanglement assertion needs at least two target qubits");
            }
            std::set<QubitId> seen(targets.begin(), targets.end());
            if (seen.size() != targets.size()) {
                throw std::invalid_argument("entanglement assertion has duplicate target qubits");
            }
            break;
        }
    }
}

size_t AssertionGadget::cnot_count() const {
    return std::ranges::count_if(gates, [](const Gate &g) { return g.kind == GateKind::CNOT; });
}

AssertionGadget build_classical_assertion(QubitId q, bool expected, QubitId ancilla) {
    return {ancilla, expected, {Gate::cnot(q, ancilla)}};
}

AssertionGadget build_entanglement_assertion(const std::vector<QubitId> &targets, bool parity, QubitId ancilla) {
    AssertionSpec::entangled(targets, parity).validate();
    AssertionGadget gadget{ancilla, parity, {}};
    for (auto q : targets) {
        gadget.gates.push_back(Gate::cnot(q, ancilla));
    }
    if (targets.size() % 2 == 1) {
        gadget.gates.push_back(Gate::cnot(targets.back(), ancilla));
    }
    return gadget;
}

AssertionGadget build_superposition_assertion(QubitId q, QubitId ancilla) {
    return {ancilla,
            false,
            {Gate::cnot(q, ancilla), Gate::h(q), Gate::h(ancilla), Gate::cnot(q, ancilla)}};
}

AssertionGadget build_gadget(const AssertionSpec &spec, QubitId ancilla) {
    spec.validate();
    if (std::ranges::find(spec.targets, ancilla) != spec.targets.end()) {
        throw std::invalid_argument("ancilla qubit " + std::to_string(ancilla.index) + " is also an assertion target");
    }
    switch (spec.kind) {
        case AssertionKind::ClassicalEquals:
            return build_classical_assertion(spec.targets[0], spec.expected, ancilla);
        case AssertionKind::Entangled:
            return build_entanglement_assertion(spec.targets, spec.expected, ancilla);
        case AssertionKind::UniformSuperposition:
            return build_superposition_assertion(spec.targets[0], ancilla);
    }
    throw std::invalid_argument("unknown assertion kind");
}

double predicted_error_probability(const AssertionSpec &spec, const StateVector &input) {
    check_targets(spec, input);
    if (spec.kind != AssertionKind::UniformSuperposition) {
        double p = 0;
        for (uint64_t i = 0; i < input.size(); i++) {
            if (diagonal_gadget_fires(spec, i)) {
                p += std::norm(input[i]);
            }
        }
        return p;
    }
    uint64_t m = uint64_t{1} << spec.targets[0].index;
    double plus_mass = 0;
    double minus_mass = 0;
    for (uint64_t i = 0; i < input.size(); i++) {
        if (i & m) {
            continue;
        }
        Amplitude a = input[i];
        Amplitude b = input[i | m];
        plus_mass += std::norm(a + b);
        minus_mass += std::norm(a - b);
    }
    return minus_mass / (plus_mass + minus_mass);
}

std::optional<StateVector> predicted_branch_state(const AssertionSpec &spec, const StateVector &input,
                                                  bool ancilla_bit) {
    check_targets(spec, input);
    std::vector<Amplitude> out(input.size());
    if (spec.kind != AssertionKind::UniformSuperposition) {
        for (uint64_t i = 0; i < input.size(); i++) {
            if (diagonal_gadget_fires(spec, i) == ancilla_bit) {
                out[i] = input[i];
            }
        }
    } else {
        // Per spectator assignment the target ends in (a +/- b)/2 * (|0> + |1>).
        uint64_t m = uint64_t{1} << spec.targets[0].index;
        for (uint64_t i = 0; i < input.size(); i++) {
            if (i & m) {
                continue;
            }
            Amplitude a = input[i];
            Amplitude b = input[i | m];
            Amplitude v = ancilla_bit ? (a - b) / 2.0 : (a + b) / 2.0;
            out[i] = v;
            out[i | m] = v;
        }
    }
    double mass = 0;
    for (const auto &a : out) {
        mass += std::norm(a);
    }
    if (mass < kBranchFloor) {
        return std::nullopt;
    }
    double scale = 1.0 / std::sqrt(mass);
    for (auto &a : out) {
        a *= scale;
    }
    return StateVector::from_amplitudes(std::move(out));
}

}  // namespace qassert
