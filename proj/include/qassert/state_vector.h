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

#ifndef QASSERT_STATE_VECTOR_H
#define QASSERT_STATE_VECTOR_H

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qassert {

using Amplitude = std::complex<double>;

constexpr uint32_t kMaxQubits = 24;
constexpr double kNormTolerance = 1e-10;

/// Raised when a simulation invariant (normalization, finiteness) is violated.
/// These indicate bugs rather than bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct QubitId {
    uint32_t index;
    friend auto operator<=>(const QubitId &, const QubitId &) = default;
};

enum class GateKind : uint8_t { H, X, Y, Z, S, CNOT };

std::string_view gate_name(GateKind kind);

/// A gate from the fixed set {H, X, Y, Z, S, CNOT}. For CNOT, `control` is the
/// first operand and `target` the second; single-qubit gates use `target` only.
struct Gate {
    GateKind kind;
    QubitId target;
    QubitId control{0};

    static Gate h(QubitId q) { return {GateKind::H, q}; }
    static Gate x(QubitId q) { return {GateKind::X, q}; }
    static Gate y(QubitId q) { return {GateKind::Y, q}; }
    static Gate z(QubitId q) { return {GateKind::Z, q}; }
    static Gate s(QubitId q) { return {GateKind::S, q}; }
    /// Throws std::invalid_argument when control == target.
    static Gate cnot(QubitId control, QubitId target);
    static Gate single(GateKind kind, QubitId q);

    bool is_two_qubit() const { return kind == GateKind::CNOT; }
    /// Qubits the gate acts on, control first.
    std::vector<QubitId> operands() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Dense statevector over `num_qubits` qubits.
///
/// Bit convention: qubit k is bit k (least significant first) of the basis
/// index. Ket strings are written with qubit 0 as the leftmost character, so
/// "|10>" is index 1 and "|01>" is index 2.
class StateVector {
   public:
    /// |basis_index>. Throws std::invalid_argument on out-of-range arguments.
    static StateVector basis(uint32_t num_qubits, uint64_t basis_index = 0);
    /// Takes ownership of explicit amplitudes. The vector length must be a power
    /// of two and the amplitudes normalized within kNormTolerance.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);
    /// Single-qubit a|0> + b|1>.
    static StateVector qubit(Amplitude a, Amplitude b);

    uint32_t num_qubits() const { return num_qubits_; }
    uint64_t size() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude &operator[](uint64_t index) const { return amps_[index]; }
    /// Amplitude of a ket written in qubit-0-first notation, e.g. "011".
    Amplitude amplitude(std::string_view ket) const;

    double norm_squared() const;

    /// In-place unitary application. Throws std::invalid_argument for bad
    /// operands and InternalError if the norm drifts past kNormTolerance.
    void apply(const Gate &gate);

    /// Zeroes every amplitude whose bit `q` differs from `bit` and rescales by
    /// 1/sqrt(kept_mass). The caller guarantees kept_mass > 0.
    void project(QubitId q, bool bit, double kept_mass);

    /// this (x) other, with `other` occupying the higher qubit indices.
    StateVector tensor(const StateVector &other) const;

    void check_qubit(QubitId q) const;

   private:
    StateVector(uint32_t num_qubits, std::vector<Amplitude> amps);

    uint32_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Functional form of StateVector::apply.
StateVector apply_gate(StateVector state, const Gate &gate);

/// True when s1 = c * s2 element-wise within `tol` for some unit complex c.
/// Throws std::invalid_argument on mismatched qubit counts.
bool states_equal_up_to_global_phase(const StateVector &s1, const StateVector &s2, double tol);

/// |<s1|s2>|^2.
double fidelity(const StateVector &s1, const StateVector &s2);

uint64_t ket_to_index(std::string_view ket);
std::string index_to_ket(uint64_t index, uint32_t num_qubits);

}  // namespace qassert

#endif
