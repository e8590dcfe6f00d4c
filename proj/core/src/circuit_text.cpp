// Copyright 2026 The ccxlab Authors
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

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

#include "ccx/circuit.hpp"
#include "ccx/error.hpp"

namespace ccx {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t parse_index(std::string_view tok, std::size_t line, const char *what) {
    std::size_t v = 0;
    const auto *first = tok.data();
    const auto *last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (tok.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
    }
    return v;
}

double parse_real(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "bad angle '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::size_t parse_qubit_ref(std::string_view tok, std::size_t line) {
    if (tok.size() < 4 || tok.substr(0, 2) != "q[" || tok.back() != ']') {
        throw ParseError(line, "expected qubit reference q[i], got '" + std::string(tok) + "'");
    }
    return parse_index(tok.substr(2, tok.size() - 3), line, "qubit index");
}

}  // namespace

std::string format_angle(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string serialize_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.num_qubits()) + "\n";
    if (c.coupling()) {
        out += "coupling ";
        bool first = true;
        for (auto [a, b] : c.coupling()->edges()) {
            if (!first) out += ',';
            first = false;
            out += std::to_string(a) + "-" + std::to_string(b);
        }
        if (c.coupling()->num_qubits() != c.num_qubits()) {
            out += " over " + std::to_string(c.coupling()->num_qubits());
        }
        out += '\n';
    }
    for (const Gate &g : c.gates()) {
        out += g.name();
        if (!g.params().empty()) {
            out += '(';
            for (std::size_t i = 0; i < g.params().size(); ++i) {
                if (i) out += ',';
                out += format_angle(g.params()[i]);
            }
            out += ')';
        }
        out += ' ';
        for (std::size_t i = 0; i < g.qubits().size(); ++i) {
            if (i) out += ',';
            out += "q[" + std::to_string(g.qubits()[i]) + "]";
        }
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                               : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (!circuit) {
            if (line.substr(0, 7) != "qubits ") {
                throw ParseError(line_no, "expected header 'qubits N'");
            }
            const std::size_t n = parse_index(trim(line.substr(7)), line_no, "qubit count");
            if (n == 0) throw ParseError(line_no, "qubit count must be positive");
            circuit.emplace(n);
            continue;
        }

        if (line.substr(0, 9) == "coupling ") {
            if (circuit->coupling()) throw ParseError(line_no, "duplicate coupling line");
            std::string_view body = trim(line.substr(9));
            std::size_t width = circuit->num_qubits();
            if (const auto over = body.find(" over "); over != std::string_view::npos) {
                width = parse_index(trim(body.substr(over + 6)), line_no, "coupling width");
                body = trim(body.substr(0, over));
            }
            std::vector<CouplingGraph::Edge> edges;
            if (!body.empty()) {
                for (std::string_view e : split(body, ',')) {
                    const auto dash = e.find('-');
                    if (dash == std::string_view::npos) {
                        throw ParseError(line_no, "bad edge '" + std::string(e) + "'");
                    }
                    edges.emplace_back(parse_index(trim(e.substr(0, dash)), line_no, "edge end"),
                                       parse_index(trim(e.substr(dash + 1)), line_no, "edge end"));
                }
            }
            try {
                circuit->set_coupling(CouplingGraph(width, std::move(edges)));
            } catch (const Error &err) {
                throw ParseError(line_no, err.what());
            }
            continue;
        }

        // NAME[(params)] q[i],q[j],...
        const auto name_end = line.find_first_of("( \t");
        if (name_end == std::string_view::npos) {
            throw ParseError(line_no, "missing qubit operands");
        }
        const std::string_view name = line.substr(0, name_end);
        const auto kind = gate_kind_from_name(name);
        if (!kind) throw ParseError(line_no, "unknown gate '" + std::string(name) + "'");

        std::string_view rest = line.substr(name_end);
        std::vector<double> params;
        if (!rest.empty() && rest.front() == '(') {
            const auto close = rest.find(')');
            if (close == std::string_view::npos) throw ParseError(line_no, "unterminated '('");
            const std::string_view inner = trim(rest.substr(1, close - 1));
            if (!inner.empty()) {
                for (std::string_view p : split(inner, ',')) params.push_back(parse_real(p, line_no));
            }
            rest = rest.substr(close + 1);
        }
        rest = trim(rest);
        if (rest.empty()) throw ParseError(line_no, "missing qubit operands");

        std::vector<std::size_t> qubits;
        for (std::string_view tok : split(rest, ',')) qubits.push_back(parse_qubit_ref(tok, line_no));

        if (qubits.size() != gate_qubit_arity(*kind)) {
            throw ParseError(line_no, std::string(name) + " expects " +
                                          std::to_string(gate_qubit_arity(*kind)) +
                                          " qubit(s), got " + std::to_string(qubits.size()));
        }
        if (params.size() != gate_param_arity(*kind)) {
            throw ParseError(line_no, std::string(name) + " expects " +
                                          std::to_string(gate_param_arity(*kind)) +
                                          " parameter(s), got " + std::to_string(params.size()));
        }
        try {
            circuit->append(Gate(*kind, std::move(qubits), std::move(params)));
        } catch (const ParseError &) {
            throw;
        } catch (const Error &err) {
            throw ParseError(line_no, err.what());
        }
    }
    if (!circuit) throw ParseError(line_no, "empty input: missing 'qubits N' header");
    return std::move(*circuit);
}

}  // namespace ccx
