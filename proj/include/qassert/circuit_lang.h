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

#ifndef QASSERT_CIRCUIT_LANG_H
#define QASSERT_CIRCUIT_LANG_H

#include <string>
#include <string_view>

#include "qassert/circuit.h"

namespace qassert {

/// Parses `.qac` source. One statement per line, `#` starts a comment:
///
///     qubits N
///     h Q | x Q | y Q | z Q | s Q
///     cnot C T
///     measure Q -> NAME
///     assert_classical Q == B [label NAME]
///     assert_entangled Q1 Q2 [Q3 ...] parity B [label NAME]
///     assert_superposition Q [label NAME]
///
/// Unlabelled assertions get `a<k>`, k being the 0-based position of the
/// assertion among all assertions. Throws ParseError (1-based line/column).
Circuit parse_circuit(std::string_view source);

/// Canonical text form; parse_circuit(pretty_print(c)) == c.
std::string pretty_print(const Circuit &circuit);

/// Replaces each assertion with its gadget on a fresh ancilla. Ancillas are
/// numbered from the original qubit count upward in assertion order; each is
/// measured into `__assert_<label>`.
Circuit lower_assertions(const Circuit &circuit);

}  // namespace qassert

#endif
