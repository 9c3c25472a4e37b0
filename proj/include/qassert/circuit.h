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

#ifndef QASSERT_CIRCUIT_H
#define QASSERT_CIRCUIT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qassert/assertions.h"
#include "qassert/state_vector.h"

namespace qassert {

/// Prefix of the classical registers that lowering creates for assertion
/// ancillas. The rest of the name is the assertion label.
inline constexpr std::string_view kAssertCregPrefix = "__assert_";

struct SourceSpan {
    uint32_t line = 0;
    uint32_t column = 0;
};

struct GateInstr {
    Gate gate;
    friend bool operator==(const GateInstr &, const GateInstr &) = default;
};

struct AssertInstr {
    AssertionSpec spec;
    std::string label;
    friend bool operator==(const AssertInstr &, const AssertInstr &) = default;
};

struct MeasureInstr {
    QubitId qubit;
    std::string creg;
    friend bool operator==(const MeasureInstr &, const MeasureInstr &) = default;
};

struct Instruction {
    std::variant<GateInstr, AssertInstr, MeasureInstr> op;
    SourceSpan span{};

    /// Structural equality; source spans are ignored.
    friend bool operator==(const Instruction &a, const Instruction &b) { return a.op == b.op; }
};

struct Circuit {
    uint32_t num_qubits = 0;
    std::vector<Instruction> instructions;
    /// In order of their measure statements.
    std::vector<std::string> creg_names;
    /// In order of appearance.
    std::vector<std::string> assertion_labels;

    friend bool operator==(const Circuit &, const Circuit &) = default;

    bool has_assertions() const;
    size_t count_assertions() const;
};

struct ParseError : std::runtime_error {
    uint32_t line;
    uint32_t column;

    ParseError(std::string message, uint32_t line, uint32_t column)
        : std::runtime_error(std::move(message)), line(line), column(column) {
    }

    /// "file:line:col: message".
    std::string format(std::string_view file) const;
};

bool is_assertion_creg(std::string_view creg);
std::string assertion_creg_name(std::string_view label);

}  // namespace qassert

#endif
