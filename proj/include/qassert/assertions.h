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

#ifndef QASSERT_ASSERTIONS_H
#define QASSERT_ASSERTIONS_H

#include <optional>
#include <vector>

#include "qassert/state_vector.h"

namespace qassert {

enum class AssertionKind : uint8_t { ClassicalEquals, Entangled, UniformSuperposition };

/// What an assertion claims about its target qubits.
///
/// `expected` is the asserted bit for ClassicalEquals, the asserted parity for
/// Entangled (0 for a|0..0> + b|1..1>-type states, 1 for the odd analogue such
/// as a|01> + b|10>), and unused for UniformSuperposition (asserts |+>).
struct AssertionSpec {
    AssertionKind kind;
    std::vector<QubitId> targets;
    bool expected = false;

    static AssertionSpec classical(QubitId q, bool value) { return {AssertionKind::ClassicalEquals, {q}, value}; }
    static AssertionSpec entangled(std::vector<QubitId> qs, bool parity) {
        return {AssertionKind::Entangled, std::move(qs), parity};
    }
    static AssertionSpec superposition(QubitId q) { return {AssertionKind::UniformSuperposition, {q}, false}; }

    /// Throws std::invalid_argument if the target list has the wrong shape.
    void validate() const;

    friend bool operator==(const AssertionSpec &, const AssertionSpec &) = default;
};

/// Gate-level realization of an assertion on one fresh ancilla. The ancilla
/// starts in |ancilla_init>, the gates run, then the ancilla is measured; a 1
/// reports an assertion error.
struct AssertionGadget {
    QubitId ancilla;
    bool ancilla_init = false;
    std::vector<Gate> gates;

    size_t cnot_count() const;
};

/// One CNOT from `q` into the ancilla. The ancilla starts at `expected`, so it
/// ends at q XOR expected.
AssertionGadget build_classical_assertion(QubitId q, bool expected, QubitId ancilla);

/// Parity check of `targets` into the ancilla. With an odd number of targets
/// the last target's CNOT is repeated so the CNOT count stays even; the
/// repeated pair cancels, so the checked parity then covers all but the last
/// target.
AssertionGadget build_entanglement_assertion(const std::vector<QubitId> &targets, bool parity, QubitId ancilla);

/// CNOT(q -> anc), H(q), H(anc), CNOT(q -> anc). The ancilla reads 0 on |+>
/// and 1 on |->.
AssertionGadget build_superposition_assertion(QubitId q, QubitId ancilla);

/// Dispatches on spec.kind. Validates the spec and rejects an ancilla that is
/// also a target.
AssertionGadget build_gadget(const AssertionSpec &spec, QubitId ancilla);

// Closed-form predictions. `input` is the joint state of the targets and any
// spectator qubits, without the ancilla. Results are computed directly from
// the amplitudes and do not run the gadget.

/// Probability that the ancilla reads 1.
///
/// ClassicalEquals(e): mass with target bit != e.
/// Entangled(p): mass whose parity over the checked targets differs from p.
/// UniformSuperposition: sum_r |a_r - b_r|^2 / sum_r (|a_r + b_r|^2 + |a_r - b_r|^2)
/// where (a_r, b_r) are the target's 0/1 amplitudes for each spectator
/// assignment r. For a single real qubit this is (2 - 4ab)/4.
double predicted_error_probability(const AssertionSpec &spec, const StateVector &input);

/// Normalized post-state of `input`'s qubits after the gadget, given the
/// ancilla read `ancilla_bit`. nullopt if that branch has probability below
/// kBranchFloor.
std::optional<StateVector> predicted_branch_state(const AssertionSpec &spec, const StateVector &input,
                                                  bool ancilla_bit);

inline std::optional<StateVector> predicted_pass_state(const AssertionSpec &spec, const StateVector &input) {
    return predicted_branch_state(spec, input, false);
}
inline std::optional<StateVector> predicted_fail_state(const AssertionSpec &spec, const StateVector &input) {
    return predicted_branch_state(spec, input, true);
}

}  // namespace qassert

#endif
