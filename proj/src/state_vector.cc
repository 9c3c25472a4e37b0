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

#include "qassert/state_vector.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qassert {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr Amplitude kI{0.0, 1.0};

void check_norm(double norm_sq, const char *context) {
    if (!(std::abs(norm_sq - 1.0) <= kNormTolerance)) {
        std::ostringstream ss;
        ss << context << ": state norm drifted to " << norm_sq;
        throw InternalError(ss.str());
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::S:
            return "s";
        case GateKind::CNOT:
            return "cnot";
    }
    return "?";
}

Gate Gate::cnot(QubitId control, QubitId target) {
    if (control == target) {
        throw std::invalid_argument("cnot control and target must be distinct (both are qubit " +
                                    std::to_string(control.index) + ")");
    }
    return {GateKind::CNOT, target, control};
}

Gate Gate::single(GateKind kind, QubitId q) {
    if (kind == GateKind::CNOT) {
        throw std::invalid_argument("cnot needs two operands");
    }
    return {kind, q};
}

std::vector<QubitId> Gate::operands() const {
    if (is_two_qubit()) {
        return {control, target};
    }
    return {target};
}

StateVector::StateVector(uint32_t num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
}

StateVector StateVector::basis(uint32_t num_qubits, uint64_t basis_index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    uint64_t dim = uint64_t{1} << num_qubits;
    if (basis_index >= dim) {
        throw std::invalid_argument("basis index " + std::to_string(basis_index) + " outside [0, " +
                                    std::to_string(dim) + ")");
    }
    std::vector<Amplitude> amps(dim);
    amps[basis_index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    uint64_t dim = amps.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("amplitude count " + std::to_string(dim) + " is not a power of two >= 2");
    }
    auto num_qubits = static_cast<uint32_t>(std::countr_zero(dim));
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("too many qubits: " + std::to_string(num_qubits));
    }
    double n = 0;
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
        n += std::norm(a);
    }
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument("amplitudes are not normalized (sum |a|^2 = " + std::to_string(n) + ")");
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::qubit(Amplitude a, Amplitude b) {
    return from_amplitudes({a, b});
}

Amplitude StateVector::amplitude(std::string_view ket) const {
    if (ket.size() != num_qubits_) {
        throw std::invalid_argument("ket '" + std::string(ket) + "' does not have " + std::to_string(num_qubits_) +
                                    " qubits");
    }
    return amps_[ket_to_index(ket)];
}

double StateVector::norm_squared() const {
    double n = 0;
    for (const auto &a : amps_) {
        n += std::norm(a);
    }
    return n;
}

void StateVector::check_qubit(QubitId q) const {
    if (q.index >= num_qubits_) {
        throw std::invalid_argument("qubit " + std::to_string(q.index) + " out of range for a " +
                                    std::to_string(num_qubits_) + "-qubit state");
    }
}

void StateVector::apply(const Gate &gate) {
    check_qubit(gate.target);
    uint64_t t = uint64_t{1} << gate.target.index;
    uint64_t dim = amps_.size();

    if (gate.kind == GateKind::CNOT) {
        check_qubit(gate.control);
        if (gate.control == gate.target) {
            throw std::invalid_argument("cnot control and target must be distinct");
        }
        uint64_t c = uint64_t{1} << gate.control.index;
        for (uint64_t i = 0; i < dim; i++) {
            if ((i & c) && !(i & t)) {
                std::swap(amps_[i], amps_[i | t]);
            }
        }
    } else {
        for (uint64_t i = 0; i < dim; i++) {
            if (i & t) {
                continue;
            }
            Amplitude &a0 = amps_[i];
            Amplitude &a1 = amps_[i | t];
            switch (gate.kind) {
                case GateKind::H: {
                    Amplitude u = a0, v = a1;
                    a0 = (u + v) * kInvSqrt2;
                    a1 = (u - v) * kInvSqrt2;
                    break;
                }
                case GateKind::X:
                    std::swap(a0, a1);
                    break;
                case GateKind::Y: {
                    Amplitude u = a0;
                    a0 = -kI * a1;
                    a1 = kI * u;
                    break;
                }
                case GateKind::Z:
                    a1 = -a1;
                    break;
                case GateKind::S:
                    a1 *= kI;
                    break;
                case GateKind::CNOT:
                    break;
            }
        }
    }
    check_norm(norm_squared(), "after gate");
}

void StateVector::project(QubitId q, bool bit, double kept_mass) {
    check_qubit(q);
    if (!(kept_mass > 0)) {
        throw InternalError("projection onto a branch with zero probability");
    }
    uint64_t m = uint64_t{1} << q.index;
    double scale = 1.0 / std::sqrt(kept_mass);
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (static_cast<bool>(i & m) != bit) {
            amps_[i] = 0;
        } else {
            amps_[i] *= scale;
        }
    }
    check_norm(norm_squared(), "after projection");
}

StateVector StateVector::tensor(const StateVector &other) const {
    uint32_t n = num_qubits_ + other.num_qubits_;
    if (n > kMaxQubits) {
        throw std::invalid_argument("tensor product would have " + std::to_string(n) + " qubits");
    }
    std::vector<Amplitude> out(uint64_t{1} << n);
    for (uint64_t hi = 0; hi < other.amps_.size(); hi++) {
        for (uint64_t lo = 0; lo < amps_.size(); lo++) {
            out[(hi << num_qubits_) | lo] = amps_[lo] * other.amps_[hi];
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

bool states_equal_up_to_global_phase(const StateVector &s1, const StateVector &s2, double tol) {
    if (s1.num_qubits() != s2.num_qubits()) {
        throw std::invalid_argument("cannot compare a " + std::to_string(s1.num_qubits()) + "-qubit state with a " +
                                    std::to_string(s2.num_qubits()) + "-qubit state");
    }
    // The phase is fixed by the largest amplitude of s2, which is the best
    // conditioned reference.
    uint64_t ref = 0;
    for (uint64_t i = 1; i < s2.size(); i++) {
        if (std::abs(s2[i]) > std::abs(s2[ref])) {
            ref = i;
        }
    }
    if (std::abs(s2[ref]) == 0) {
        return false;
    }
    Amplitude c = s1[ref] / s2[ref];
    if (std::abs(std::abs(c) - 1.0) > tol) {
        return false;
    }
    c /= std::abs(c);
    for (uint64_t i = 0; i < s1.size(); i++) {
        if (std::abs(s1[i] - c * s2[i]) > tol) {
            return false;
        }
    }
    return true;
}

double fidelity(const StateVector &s1, const StateVector &s2) {
    if (s1.num_qubits() != s2.num_qubits()) {
        throw std::invalid_argument("fidelity of states with different qubit counts");
    }
    Amplitude overlap = 0;
    for (uint64_t i = 0; i < s1.size(); i++) {
        overlap += std::conj(s1[i]) * s2[i];
    }
    return std::norm(overlap);
}

uint64_t ket_to_index(std::string_view ket) {
    if (ket.size() > 64) {
        throw std::invalid_argument("ket too long");
    }
    uint64_t index = 0;
    for (size_t k = 0; k < ket.size(); k++) {
        if (ket[k] == '1') {
            index |= uint64_t{1} << k;
        } else if (ket[k] != '0') {
            throw std::invalid_argument("ket '" + std::string(ket) + "' contains a non-binary character");
        }
    }
    return index;
}

std::string index_to_ket(uint64_t index, uint32_t num_qubits) {
    std::string out(num_qubits, '0');
    for (uint32_t k = 0; k < num_qubits; k++) {
        if ((index >> k) & 1) {
            out[k] = '1';
        }
    }
    return out;
}

}  // namespace qassert
