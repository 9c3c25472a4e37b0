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

#include "qassert/circuit_lang.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace qassert {

bool Circuit::has_assertions() const {
    return count_assertions() > 0;
}

size_t Circuit::count_assertions() const {
    return std::ranges::count_if(
        instructions, [](const Instruction &i) { return std::holds_alternative<AssertInstr>(i.op); });
}

std::string ParseError::format(std::string_view file) const {
    std::ostringstream ss;
    ss << file << ":" << line << ":" << column << ": " << what();
    return ss.str();
}

bool is_assertion_creg(std::string_view creg) {
    return creg.starts_with(kAssertCregPrefix);
}

std::string assertion_creg_name(std::string_view label) {
    return std::string(kAssertCregPrefix) + std::string(label);
}

namespace {

struct Token {
    std::string_view text;
    uint32_t column;
};

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::ranges::all_of(s, [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class LineParser {
   public:
    LineParser(std::string_view line, uint32_t line_no) : line_no_(line_no) {
        auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                i++;
            }
            size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                i++;
            }
            if (i > start) {
                tokens_.push_back({line.substr(start, i - start), static_cast<uint32_t>(start + 1)});
            }
        }
        end_column_ = tokens_.empty() ? 1 : tokens_.back().column + static_cast<uint32_t>(tokens_.back().text.size());
    }

    bool empty() const { return tokens_.empty(); }
    size_t size() const { return tokens_.size(); }
    const Token &operator[](size_t k) const { return tokens_[k]; }
    uint32_t line() const { return line_no_; }

    [[noreturn]] void fail_at(size_t k, const std::string &message) const {
        uint32_t col = k < tokens_.size() ? tokens_[k].column : end_column_;
        throw ParseError(message, line_no_, col);
    }

    std::string_view need(size_t k, std::string_view what) const {
        if (k >= tokens_.size()) {
            fail_at(k, "expected " + std::string(what));
        }
        return tokens_[k].text;
    }

    void expect_literal(size_t k, std::string_view lit) const {
        if (need(k, "'" + std::string(lit) + "'") != lit) {
            fail_at(k, "expected '" + std::string(lit) + "', got '" + std::string(tokens_[k].text) + "'");
        }
    }

    void expect_end(size_t k) const {
        if (k < tokens_.size()) {
            fail_at(k, "unexpected '" + std::string(tokens_[k].text) + "'");
        }
    }

    uint64_t integer(size_t k, std::string_view what) const {
        auto text = need(k, what);
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            fail_at(k, "expected " + std::string(what) + ", got '" + std::string(text) + "'");
        }
        return v;
    }

    bool bit(size_t k) const {
        auto text = need(k, "a bit (0 or 1)");
        if (text != "0" && text != "1") {
            fail_at(k, "expected a bit (0 or 1), got '" + std::string(text) + "'");
        }
        return text == "1";
    }

    QubitId qubit(size_t k, uint32_t num_qubits) const {
        uint64_t v = integer(k, "a qubit index");
        if (v >= num_qubits) {
            fail_at(k, "qubit " + std::to_string(v) + " out of range (circuit declares " + std::to_string(num_qubits) +
                           " qubits)");
        }
        return {static_cast<uint32_t>(v)};
    }

    std::string_view identifier(size_t k, std::string_view what) const {
        auto text = need(k, what);
        if (!is_identifier(text)) {
            fail_at(k, "invalid " + std::string(what) + " '" + std::string(text) + "'");
        }
        return text;
    }

   private:
    std::vector<Token> tokens_;
    uint32_t line_no_;
    uint32_t end_column_;
};

std::optional<GateKind> single_qubit_gate(std::string_view word) {
    if (word == "h") return GateKind::H;
    if (word == "x") return GateKind::X;
    if (word == "y") return GateKind::Y;
    if (word == "z") return GateKind::Z;
    if (word == "s") return GateKind::S;
    return std::nullopt;
}

class CircuitBuilder {
   public:
    void header(const LineParser &p) {
        if (declared_) {
            p.fail_at(0, "duplicate 'qubits' declaration");
        }
        uint64_t n = p.integer(1, "a qubit count");
        if (n < 1 || n > kMaxQubits) {
            p.fail_at(1, "qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n));
        }
        p.expect_end(2);
        circuit_.num_qubits = static_cast<uint32_t>(n);
        declared_ = true;
    }

    void statement(const LineParser &p) {
        auto word = p[0].text;
        if (!declared_) {
            p.fail_at(0, "missing 'qubits N' header before '" + std::string(word) + "'");
        }
        uint32_t n = circuit_.num_qubits;
        SourceSpan span{p.line(), p[0].column};

        if (auto kind = single_qubit_gate(word)) {
            auto q = p.qubit(1, n);
            p.expect_end(2);
            push(GateInstr{Gate::single(*kind, q)}, span);
        } else if (word == "cnot") {
            auto c = p.qubit(1, n);
            auto t = p.qubit(2, n);
            p.expect_end(3);
            if (c == t) {
                p.fail_at(2, "cnot control and target must be distinct");
            }
            push(GateInstr{Gate::cnot(c, t)}, span);
        } else if (word == "measure") {
            auto q = p.qubit(1, n);
            p.expect_literal(2, "->");
            auto name = std::string(p.identifier(3, "classical register name"));
            p.expect_end(4);
            if (!cregs_.insert(name).second) {
                p.fail_at(3, "duplicate classical register '" + name + "'");
            }
            creg_columns_.push_back({name, {p.line(), p[3].column}});
            circuit_.creg_names.push_back(name);
            push(MeasureInstr{q, std::move(name)}, span);
        } else if (word == "assert_classical") {
            auto q = p.qubit(1, n);
            p.expect_literal(2, "==");
            bool value = p.bit(3);
            push_assert(p, 4, AssertionSpec::classical(q, value), span);
        } else if (word == "assert_entangled") {
            std::vector<QubitId> targets;
            size_t k = 1;
            while (k < p.size() && p[k].text != "parity") {
                auto q = p.qubit(k, n);
                if (std::ranges::find(targets, q) != targets.end()) {
                    p.fail_at(k, "duplicate entanglement target " + std::to_string(q.index));
                }
                targets.push_back(q);
                k++;
            }
            if (targets.size() < 2) {
                p.fail_at(k, "assert_entangled needs at least two target qubits");
            }
            p.expect_literal(k, "parity");
            bool parity = p.bit(k + 1);
            push_assert(p, k + 2, AssertionSpec::entangled(std::move(targets), parity), span);
        } else if (word == "assert_superposition") {
            auto q = p.qubit(1, n);
            push_assert(p, 2, AssertionSpec::superposition(q), span);
        } else if (word == "qubits") {
            header(p);
        } else {
            p.fail_at(0, "unknown statement '" + std::string(word) + "'");
        }
    }

    Circuit finish() {
        if (!declared_) {
            throw ParseError("missing 'qubits N' header", 1, 1);
        }
        size_t ancillas = circuit_.count_assertions();
        if (circuit_.num_qubits + ancillas > kMaxQubits) {
            throw ParseError("circuit needs " + std::to_string(circuit_.num_qubits + ancillas) +
                                 " qubits once assertion ancillas are added (max " + std::to_string(kMaxQubits) + ")",
                             header_line_, 1);
        }
        for (const auto &[name, span] : creg_columns_) {
            if (is_assertion_creg(name) && labels_.contains(name.substr(kAssertCregPrefix.size()))) {
                throw ParseError("classical register '" + name + "' is reserved for assertion '" +
                                     name.substr(kAssertCregPrefix.size()) + "'",
                                 span.line, span.column);
            }
        }
        return std::move(circuit_);
    }

    void set_header_line(uint32_t line) { header_line_ = line; }
    bool declared() const { return declared_; }

   private:
    template <typename Op>
    void push(Op op, SourceSpan span) {
        circuit_.instructions.push_back({std::move(op), span});
    }

    void push_assert(const LineParser &p, size_t k, AssertionSpec spec, SourceSpan span) {
        std::string label;
        if (k < p.size()) {
            p.expect_literal(k, "label");
            label = p.identifier(k + 1, "assertion label");
            p.expect_end(k + 2);
        } else {
            label = "a" + std::to_string(circuit_.count_assertions());
        }
        if (!labels_.insert(label).second) {
            p.fail_at(k < p.size() ? k + 1 : 0, "duplicate assertion label '" + label + "'");
        }
        circuit_.assertion_labels.push_back(label);
        push(AssertInstr{std::move(spec), std::move(label)}, span);
    }

    Circuit circuit_;
    bool declared_ = false;
    uint32_t header_line_ = 1;
    std::set<std::string> cregs_;
    std::set<std::string, std::less<>> labels_;
    std::vector<std::pair<std::string, SourceSpan>> creg_columns_;
};

}  // namespace

Circuit parse_circuit(std::string_view source) {
    CircuitBuilder builder;
    uint32_t line_no = 0;
    size_t pos = 0;
    while (pos <= source.size()) {
        size_t nl = source.find('\n', pos);
        std::string_view line = source.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        line_no++;
        LineParser p(line, line_no);
        if (!p.empty()) {
            if (p[0].text == "qubits" && !builder.declared()) {
                builder.set_header_line(line_no);
                builder.header(p);
            } else {
                builder.statement(p);
            }
        }
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    return builder.finish();
}

std::string pretty_print(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << "\n";
    for (const auto &instr : circuit.instructions) {
        if (const auto *g = std::get_if<GateInstr>(&instr.op)) {
            out << gate_name(g->gate.kind);
            if (g->gate.is_two_qubit()) {
                out << " " << g->gate.control.index;
            }
            out << " " << g->gate.target.index << "\n";
        } else if (const auto *m = std::get_if<MeasureInstr>(&instr.op)) {
            out << "measure " << m->qubit.index << " -> " << m->creg << "\n";
        } else if (const auto *a = std::get_if<AssertInstr>(&instr.op)) {
            const auto &spec = a->spec;
            switch (spec.kind) {
                case AssertionKind::ClassicalEquals:
                    out << "assert_classical " << spec.targets[0].index << " == " << int{spec.expected};
                    break;
                case AssertionKind::Entangled:
                    out << "assert_entangled";
                    for (auto q : spec.targets) {
                        out << " " << q.index;
                    }
                    out << " parity " << int{spec.expected};
                    break;
                case AssertionKind::UniformSuperposition:
                    out << "assert_superposition " << spec.targets[0].index;
                    break;
            }
            out << " label " << a->label << "\n";
        }
    }
    return out.str();
}

Circuit lower_assertions(const Circuit &circuit) {
    Circuit out;
    out.num_qubits = circuit.num_qubits + static_cast<uint32_t>(circuit.count_assertions());
    if (out.num_qubits > kMaxQubits) {
        throw std::invalid_argument("lowered circuit would need " + std::to_string(out.num_qubits) + " qubits");
    }
    uint32_t next_ancilla = circuit.num_qubits;
    for (const auto &instr : circuit.instructions) {
        const auto *a = std::get_if<AssertInstr>(&instr.op);
        if (a == nullptr) {
            if (const auto *m = std::get_if<MeasureInstr>(&instr.op)) {
                out.creg_names.push_back(m->creg);
            }
            out.instructions.push_back(instr);
            continue;
        }
        QubitId ancilla{next_ancilla++};
        auto gadget = build_gadget(a->spec, ancilla);
        if (gadget.ancilla_init) {
            out.instructions.push_back({GateInstr{Gate::x(ancilla)}, instr.span});
        }
        for (const auto &g : gadget.gates) {
            out.instructions.push_back({GateInstr{g}, instr.span});
        }
        auto creg = assertion_creg_name(a->label);
        out.creg_names.push_back(creg);
        out.instructions.push_back({MeasureInstr{ancilla, std::move(creg)}, instr.span});
    }
    return out;
}

}  // namespace qassert
