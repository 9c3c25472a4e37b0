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

#include <complex>
#include <numbers>

#include "dense_oracle.h"
#include "gtest/gtest.h"
#include "qassert/measurement.h"
#include "test_util.h"

using namespace qassert;
using qassert::testing::from_kets;
using qassert::testing::random_state;

namespace {

const double kR = 1 / std::numbers::sqrt2;
const double kPi = std::numbers::pi;

/// input (x) |ancilla_init>, then the gadget's gates. The ancilla is the
/// highest qubit.
StateVector run_gadget(const AssertionGadget &g, const StateVector &input) {
    auto state = input.tensor(StateVector::basis(1, g.ancilla_init));
    for (const auto &gate : g.gates) {
        state.apply(gate);
    }
    return state;
}

struct Simulated {
    double error_probability;
    std::optional<StateVector> pass;
    std::optional<StateVector> fail;
};

Simulated simulate(const AssertionSpec &spec, const StateVector &input) {
    QubitId anc{input.num_qubits()};
    auto joint = run_gadget(build_gadget(spec, anc), input);
    Simulated out{prob_one(joint, anc), std::nullopt, std::nullopt};
    if (auto p = postselect(joint, anc, false)) {
        out.pass = discard_qubit(*p, anc, false);
    }
    if (auto f = postselect(joint, anc, true)) {
        out.fail = discard_qubit(*f, anc, true);
    }
    return out;
}

void expect_branch_matches(const std::optional<StateVector> &simulated, const std::optional<StateVector> &predicted,
                           double tol) {
    ASSERT_EQ(simulated.has_value(), predicted.has_value());
    if (simulated) {
        EXPECT_NEAR(fidelity(*simulated, *predicted), 1, tol);
    }
}

const StateVector kPlus = StateVector::qubit(kR, kR);

}  // namespace

TEST(BuildClassical, one_cnot_into_ancilla) {
    auto g = build_classical_assertion({0}, false, {1});
    EXPECT_FALSE(g.ancilla_init);
    ASSERT_EQ(g.gates.size(), 1u);
    EXPECT_EQ(g.gates[0], Gate::cnot({0}, {1}));
    EXPECT_TRUE(build_classical_assertion({0}, true, {1}).ancilla_init);
}

TEST(BuildClassical, basis_inputs) {
    auto zero = run_gadget(build_classical_assertion({0}, false, {1}), StateVector::basis(1, 0));
    EXPECT_EQ(prob_one(zero, {1}), 0.0);
    // Expecting 1 on |1>: ancilla = 1 xor 1 = 0.
    auto one = run_gadget(build_classical_assertion({0}, true, {1}), StateVector::basis(1, 1));
    EXPECT_EQ(prob_one(one, {1}), 0.0);
    auto wrong = run_gadget(build_classical_assertion({0}, false, {1}), StateVector::basis(1, 1));
    EXPECT_EQ(prob_one(wrong, {1}), 1.0);
}

TEST(BuildClassical, superposed_input_error_is_b_squared_and_pass_projects_to_zero) {
    auto input = StateVector::qubit(0.6, Amplitude(0, 0.8));
    auto spec = AssertionSpec::classical({0}, false);
    auto sim = simulate(spec, input);
    EXPECT_NEAR(sim.error_probability, 0.64, 1e-12);
    EXPECT_NEAR(predicted_error_probability(spec, input), 0.64, 1e-15);
    ASSERT_TRUE(sim.pass);
    EXPECT_TRUE(states_equal_up_to_global_phase(*sim.pass, StateVector::basis(1, 0), 1e-12));
    ASSERT_TRUE(sim.fail);
    EXPECT_TRUE(states_equal_up_to_global_phase(*sim.fail, StateVector::basis(1, 1), 1e-12));
}

TEST(BuildEntanglement, cnot_count_is_always_even) {
    for (uint32_t n = 2; n <= 8; n++) {
        std::vector<QubitId> targets;
        for (uint32_t k = 0; k < n; k++) {
            targets.push_back({k});
        }
        auto g = build_entanglement_assertion(targets, false, {n});
        EXPECT_EQ(g.cnot_count() % 2, 0u) << n;
        EXPECT_EQ(g.cnot_count(), n % 2 == 0 ? n : n + 1);
        for (const auto &gate : g.gates) {
            EXPECT_EQ(gate.target, QubitId{n});
        }
    }
}

TEST(BuildEntanglement, rejects_bad_targets) {
    EXPECT_THROW(build_entanglement_assertion({{0}}, false, {1}), std::invalid_argument);
    EXPECT_THROW(build_entanglement_assertion({{0}, {0}}, false, {1}), std::invalid_argument);
    EXPECT_THROW(build_gadget(AssertionSpec::entangled({{0}, {1}}, false), {1}), std::invalid_argument);
    EXPECT_THROW(build_gadget(AssertionSpec{AssertionKind::ClassicalEquals, {{0}, {1}}, false}, {2}),
                 std::invalid_argument);
}

TEST(BuildEntanglement, bell_input_passes_and_is_untouched) {
    auto bell = from_kets(2, {{"00", 0.6}, {"11", Amplitude(0, 0.8)}});
    auto joint = run_gadget(build_entanglement_assertion({{0}, {1}}, false, {2}), bell);
    EXPECT_NEAR(prob_one(joint, {2}), 0, 1e-15);
    EXPECT_TRUE(states_equal_up_to_global_phase(joint, bell.tensor(StateVector::basis(1, 0)), 1e-12));
}

TEST(BuildEntanglement, odd_parity_form) {
    auto odd = from_kets(2, {{"01", 0.6}, {"10", 0.8}});
    auto spec = AssertionSpec::entangled({{0}, {1}}, true);
    auto sim = simulate(spec, odd);
    EXPECT_NEAR(sim.error_probability, 0, 1e-15);
    EXPECT_TRUE(states_equal_up_to_global_phase(*sim.pass, odd, 1e-12));
    EXPECT_NEAR(predicted_error_probability(spec, from_kets(2, {{"00", 1}})), 1, 1e-15);
}

TEST(BuildEntanglement, generic_input_splits_into_parity_branches) {
    Amplitude a = 0.5, b = Amplitude(0, 0.5), c = -0.5, d = Amplitude(0.3, 0.4);
    auto input = from_kets(2, {{"00", a}, {"11", b}, {"10", c}, {"01", d}});
    double norm = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    auto spec = AssertionSpec::entangled({{0}, {1}}, false);
    auto sim = simulate(spec, input);
    double expected = (std::norm(c) + std::norm(d)) / norm;
    EXPECT_NEAR(sim.error_probability, expected, 1e-12);
    EXPECT_NEAR(predicted_error_probability(spec, input), expected, 1e-12);
    EXPECT_TRUE(states_equal_up_to_global_phase(*sim.pass, from_kets(2, {{"00", a}, {"11", b}}), 1e-12));
    EXPECT_TRUE(states_equal_up_to_global_phase(*sim.fail, from_kets(2, {{"10", c}, {"01", d}}), 1e-12));
}

TEST(BuildEntanglement, half_error_rate_on_product_input_by_matrix_oracle) {
    // (|00> + |01>)/sqrt(2): d = 1/sqrt(2), c = 0. Brute force with full
    // matrices: P(ancilla = 1) = || (I (x) |1><1|_anc) U psi ||^2.
    auto input = from_kets(2, {{"00", 1}, {"01", 1}});
    auto gadget = build_entanglement_assertion({{0}, {1}}, false, {2});
    oracle::Vector psi = oracle::Vector::Zero(8);
    psi(0) = kR;
    psi(ket_to_index("010")) = kR;
    for (const auto &g : gadget.gates) {
        psi = oracle::gate_matrix(g, 3) * psi;
    }
    double brute = (oracle::embed({{2, oracle::projector(true)}}, 3) * psi).squaredNorm();
    EXPECT_NEAR(brute, 0.5, 1e-15);
    EXPECT_NEAR(predicted_error_probability(AssertionSpec::entangled({{0}, {1}}, false), input), 0.5, 1e-15);
}

TEST(BuildEntanglement, ghz_inputs_return_ancilla_to_init) {
    for (uint32_t n = 2; n <= 5; n++) {
        std::vector<QubitId> targets;
        for (uint32_t k = 0; k < n; k++) {
            targets.push_back({k});
        }
        std::vector<Amplitude> amps(uint64_t{1} << n);
        amps.front() = 0.6;
        amps.back() = Amplitude(0, 0.8);
        auto ghz = StateVector::from_amplitudes(amps);
        auto joint = run_gadget(build_entanglement_assertion(targets, false, {n}), ghz);
        EXPECT_NEAR(prob_one(joint, {n}), 0, 1e-15) << n;
        EXPECT_TRUE(states_equal_up_to_global_phase(joint, ghz.tensor(StateVector::basis(1, 0)), 1e-12));
    }
}

TEST(BuildEntanglement, odd_target_gadget_ignores_the_duplicated_qubit) {
    // Three targets: the last target's CNOTs cancel, so components that differ
    // only in qubit 2 are not told apart. (|000> + |001>)/sqrt(2) is not GHZ
    // but passes.
    auto spec = AssertionSpec::entangled({{0}, {1}, {2}}, false);
    auto not_ghz = from_kets(3, {{"000", 1}, {"001", 1}});
    EXPECT_NEAR(simulate(spec, not_ghz).error_probability, 0, 1e-15);
    EXPECT_NEAR(predicted_error_probability(spec, not_ghz), 0, 1e-15);
    // A flip on one of the other targets is still caught.
    auto flipped = from_kets(3, {{"000", 1}, {"101", 1}});
    EXPECT_NEAR(simulate(spec, flipped).error_probability, 0.5, 1e-12);
}

TEST(BuildSuperposition, gate_sequence) {
    auto g = build_superposition_assertion({0}, {1});
    EXPECT_FALSE(g.ancilla_init);
    std::vector<Gate> expected{Gate::cnot({0}, {1}), Gate::h({0}), Gate::h({1}), Gate::cnot({0}, {1})};
    EXPECT_EQ(g.gates, expected);
}

TEST(BuildSuperposition, intermediate_states_follow_derivation) {
    double a = 0.6, b = 0.8;
    auto g = build_superposition_assertion({0}, {1});
    auto s = StateVector::qubit(a, b).tensor(StateVector::basis(1, 0));
    s.apply(g.gates[0]);
    EXPECT_TRUE(states_equal_up_to_global_phase(s, from_kets(2, {{"00", a}, {"11", b}}), 1e-12));
    s.apply(g.gates[1]);
    s.apply(g.gates[2]);
    auto psi3 = from_kets(2, {{"00", (a + b) / 2}, {"01", (a - b) / 2}, {"10", (a - b) / 2}, {"11", (a + b) / 2}});
    EXPECT_TRUE(states_equal_up_to_global_phase(s, psi3, 1e-12));
    s.apply(g.gates[3]);
    auto psi4 = from_kets(2, {{"00", (a + b) / 2}, {"01", (a - b) / 2}, {"10", (a + b) / 2}, {"11", (a - b) / 2}});
    EXPECT_TRUE(states_equal_up_to_global_phase(s, psi4, 1e-12));
}

TEST(BuildSuperposition, plus_minus_and_basis_inputs) {
    auto spec = AssertionSpec::superposition({0});
    auto plus = simulate(spec, kPlus);
    EXPECT_NEAR(plus.error_probability, 0, 1e-15);
    EXPECT_TRUE(states_equal_up_to_global_phase(*plus.pass, kPlus, 1e-12));

    auto minus = simulate(spec, StateVector::qubit(kR, -kR));
    EXPECT_NEAR(minus.error_probability, 1, 1e-15);
    EXPECT_TRUE(states_equal_up_to_global_phase(*minus.fail, kPlus, 1e-12));

    for (uint64_t basis : {0, 1}) {
        auto sim = simulate(spec, StateVector::basis(1, basis));
        EXPECT_NEAR(sim.error_probability, 0.5, 1e-15);
        EXPECT_TRUE(states_equal_up_to_global_phase(*sim.pass, kPlus, 1e-12));
        EXPECT_TRUE(states_equal_up_to_global_phase(*sim.fail, kPlus, 1e-12));
    }
}

TEST(PredictedErrorProbability, superposition_closed_forms) {
    auto spec = AssertionSpec::superposition({0});
    EXPECT_NEAR(predicted_error_probability(spec, kPlus), 0, 1e-15);
    EXPECT_NEAR(predicted_error_probability(spec, StateVector::basis(1, 0)), 0.5, 1e-15);
    for (int k = 0; k <= 16; k++) {
        double t = k * kPi / 16;
        double a = std::cos(t), b = std::sin(t);
        EXPECT_NEAR(predicted_error_probability(spec, StateVector::qubit(a, b)), (2 - 4 * a * b) / 4, 1e-12);
    }
    // Complex amplitudes can also give 50/50 statistics.
    EXPECT_NEAR(predicted_error_probability(spec, StateVector::qubit(kR, Amplitude(0, kR))), 0.5, 1e-15);
}

TEST(PredictedErrorProbability, shape_errors) {
    EXPECT_THROW(predicted_error_probability(AssertionSpec::classical({3}, false), StateVector::basis(2)),
                 std::invalid_argument);
    EXPECT_THROW(predicted_pass_state(AssertionSpec::entangled({{0}}, false), StateVector::basis(2)),
                 std::invalid_argument);
}

TEST(PredictedPassState, projection_claims) {
    auto classical = predicted_pass_state(AssertionSpec::classical({0}, false), StateVector::qubit(0.6, 0.8));
    ASSERT_TRUE(classical);
    EXPECT_TRUE(states_equal_up_to_global_phase(*classical, StateVector::basis(1, 0), 1e-12));

    EXPECT_FALSE(predicted_pass_state(AssertionSpec::classical({0}, false), StateVector::basis(1, 1)));

    auto input = from_kets(2, {{"00", 0.4}, {"11", 0.2}, {"10", 0.5}, {"01", 0.3}});
    auto ent = predicted_pass_state(AssertionSpec::entangled({{0}, {1}}, false), input);
    EXPECT_TRUE(states_equal_up_to_global_phase(*ent, from_kets(2, {{"00", 0.4}, {"11", 0.2}}), 1e-12));

    for (int k = 0; k <= 8; k++) {
        double t = k * kPi / 8 + 0.1;
        auto sup = predicted_pass_state(AssertionSpec::superposition({0}), StateVector::qubit(std::cos(t), std::sin(t)));
        ASSERT_TRUE(sup);
        EXPECT_TRUE(states_equal_up_to_global_phase(*sup, kPlus, 1e-12));
    }
}

// Gadget simulation against the closed-form oracle on
// a = cos(theta), b = e^{i phi} sin(theta).
TEST(OracleAgreement, grid) {
    for (int ti = 0; ti <= 4; ti++) {
        for (double phi : {0.0, kPi / 2, kPi}) {
            double t = ti * kPi / 8;
            Amplitude a = std::cos(t), b = std::polar(std::sin(t), phi);
            std::vector<std::pair<AssertionSpec, StateVector>> cases = {
                {AssertionSpec::classical({0}, false), StateVector::qubit(a, b)},
                {AssertionSpec::classical({0}, true), StateVector::qubit(a, b)},
                {AssertionSpec::superposition({0}), StateVector::qubit(a, b)},
                {AssertionSpec::entangled({{0}, {1}}, false), from_kets(2, {{"00", a}, {"10", b}})},
                {AssertionSpec::entangled({{0}, {1}}, false), from_kets(2, {{"00", a}, {"11", b}})},
                {AssertionSpec::entangled({{0}, {1}}, true), from_kets(2, {{"01", a}, {"11", b}})},
                {AssertionSpec::entangled({{0}, {1}, {2}}, false), from_kets(3, {{"000", a}, {"110", b}})},
                // Spectator qubit next to the asserted one.
                {AssertionSpec::superposition({1}), StateVector::qubit(kR, -kR).tensor(StateVector::qubit(a, b))},
            };
            for (const auto &[spec, input] : cases) {
                auto sim = simulate(spec, input);
                EXPECT_NEAR(sim.error_probability, predicted_error_probability(spec, input), 1e-10);
                expect_branch_matches(sim.pass, predicted_pass_state(spec, input), 1e-10);
                expect_branch_matches(sim.fail, predicted_fail_state(spec, input), 1e-10);
            }
        }
    }
}

TEST(OracleAgreement, random_states_with_spectators) {
    std::mt19937_64 gen(77);
    for (int trial = 0; trial < 30; trial++) {
        auto input = random_state(3, gen);
        for (const auto &spec : {AssertionSpec::classical({1}, true), AssertionSpec::superposition({2}),
                                 AssertionSpec::entangled({{2}, {0}}, false),
                                 AssertionSpec::entangled({{0}, {1}, {2}}, true)}) {
            auto sim = simulate(spec, input);
            EXPECT_NEAR(sim.error_probability, predicted_error_probability(spec, input), 1e-10);
            expect_branch_matches(sim.pass, predicted_pass_state(spec, input), 1e-10);
            expect_branch_matches(sim.fail, predicted_fail_state(spec, input), 1e-10);
        }
    }
}

TEST(Superposition, both_branches_have_equal_magnitudes) {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 30; trial++) {
        auto input = random_state(1, gen);
        auto sim = simulate(AssertionSpec::superposition({0}), input);
        for (const auto &branch : {sim.pass, sim.fail}) {
            if (branch) {
                EXPECT_NEAR(std::abs((*branch)[0]), kR, 1e-12);
                EXPECT_NEAR(std::abs((*branch)[1]), kR, 1e-12);
            }
        }
    }
}

TEST(Disentanglement, satisfied_assertions_factor_out_the_ancilla) {
    auto bell = from_kets(2, {{"00", 1}, {"11", 1}});
    auto odd = from_kets(2, {{"01", 1}, {"10", -1}});
    std::vector<std::pair<AssertionGadget, StateVector>> cases = {
        {build_classical_assertion({0}, false, {1}), StateVector::basis(1, 0)},
        {build_classical_assertion({0}, true, {1}), StateVector::basis(1, 1)},
        {build_entanglement_assertion({{0}, {1}}, false, {2}), bell},
        {build_entanglement_assertion({{0}, {1}}, true, {2}), odd},
        {build_superposition_assertion({0}, {1}), kPlus},
    };
    for (const auto &[gadget, input] : cases) {
        auto joint = run_gadget(gadget, input);
        EXPECT_TRUE(states_equal_up_to_global_phase(joint, input.tensor(StateVector::basis(1, 0)), 1e-12));
    }
}
