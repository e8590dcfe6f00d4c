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

#include "ccx/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ccx/error.hpp"

namespace ccx {

namespace {

using std::numbers::pi;

void check_k(std::size_t k, std::size_t max_k) {
    if (k < 1 || k > max_k) {
        throw usage_error("KOutOfRange", "k = " + std::to_string(k) + " outside [1, " +
                                             std::to_string(max_k) + "]");
    }
}

}  // namespace

ComplexMatrix pauli_matrix(char letter) {
    ComplexMatrix m(2, 2);
    const Complex i1{0.0, 1.0};
    switch (letter) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i1, i1, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default:
            throw usage_error("InvalidPauliString",
                              std::string("unknown Pauli letter '") + letter + "'");
    }
    return m;
}

ComplexMatrix pauli_product(std::string_view letters_by_qubit) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (char c : letters_by_qubit) out = kron(pauli_matrix(c), out);
    return out;
}

PauliString::PauliString(std::string_view label) {
    if (label.empty() || label.size() > 6) {
        throw usage_error("InvalidPauliString", "Pauli string length must be in [1, 6]");
    }
    for (char c : label) {
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw usage_error("InvalidPauliString", "setting '" + std::string(label) +
                                                        "' may only contain X, Y, Z");
        }
    }
    by_qubit_.assign(label.rbegin(), label.rend());
}

std::string PauliString::label() const {
    return std::string(by_qubit_.rbegin(), by_qubit_.rend());
}

std::string_view probe_name(Probe p) noexcept {
    switch (p) {
        case Probe::Zero: return "0";
        case Probe::One: return "1";
        case Probe::Plus: return "+";
        case Probe::PlusI: return "+i";
    }
    return "?";
}

ComplexVector probe_state(Probe p) {
    const double r = 1.0 / std::numbers::sqrt2;
    ComplexVector v(2);
    switch (p) {
        case Probe::Zero: v << 1, 0; break;
        case Probe::One: v << 0, 1; break;
        case Probe::Plus: v << r, r; break;
        case Probe::PlusI: v << r, Complex(0, r); break;
    }
    return v;
}

ProbeLabel::ProbeLabel(std::vector<Probe> by_qubit) : by_qubit_(std::move(by_qubit)) {
    if (by_qubit_.empty() || by_qubit_.size() > 6) {
        throw usage_error("InvalidLabel", "probe label length must be in [1, 6]");
    }
}

ProbeLabel ProbeLabel::parse(std::string_view text) {
    std::vector<Probe> big_endian;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string_view tok =
            text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        if (tok == "0") big_endian.push_back(Probe::Zero);
        else if (tok == "1") big_endian.push_back(Probe::One);
        else if (tok == "+") big_endian.push_back(Probe::Plus);
        else if (tok == "+i") big_endian.push_back(Probe::PlusI);
        else throw usage_error("InvalidLabel", "unknown probe '" + std::string(tok) + "'");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::reverse(big_endian.begin(), big_endian.end());
    return ProbeLabel(std::move(big_endian));
}

std::string ProbeLabel::label() const {
    std::string out;
    for (auto it = by_qubit_.rbegin(); it != by_qubit_.rend(); ++it) {
        if (!out.empty()) out += ',';
        out += probe_name(*it);
    }
    return out;
}

ComplexVector ProbeLabel::state() const {
    ComplexMatrix v = ComplexMatrix::Identity(1, 1);
    for (Probe p : by_qubit_) v = kron(probe_state(p), v);
    return v.col(0);
}

std::strong_ordering operator<=>(const ProbeLabel &a, const ProbeLabel &b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a.by_qubit_[i] != b.by_qubit_[i]) {
            return static_cast<int>(a.by_qubit_[i]) <=> static_cast<int>(b.by_qubit_[i]);
        }
    }
    return std::strong_ordering::equal;
}

Circuit measurement_rotation(const PauliString &p) {
    Circuit c(p.size());
    for (std::size_t q = 0; q < p.size(); ++q) {
        switch (p[q]) {
            case 'X': c.append(Gate::rz(pi / 2, q)).append(Gate::sx(q)); break;
            case 'Y': c.append(Gate::sx(q)); break;
            default: break;
        }
    }
    return c;
}

Circuit probe_preparation(const ProbeLabel &label) {
    Circuit c(label.size());
    for (std::size_t q = 0; q < label.size(); ++q) {
        switch (label[q]) {
            case Probe::Zero: break;
            case Probe::One: c.append(Gate::x(q)); break;
            case Probe::Plus: c.append(Gate::sx(q)).append(Gate::rz(pi / 2, q)); break;
            case Probe::PlusI: c.append(Gate::sx(q)).append(Gate::rz(pi, q)); break;
        }
    }
    return c;
}

std::vector<PauliString> qst_settings(std::size_t k) {
    check_k(k, 4);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    static constexpr char kLetters[] = {'X', 'Y', 'Z'};
    std::vector<PauliString> out;
    out.reserve(total);
    for (std::size_t n = 0; n < total; ++n) {
        std::string label(k, 'X');
        std::size_t rem = n;
        for (std::size_t pos = k; pos-- > 0;) {
            label[pos] = kLetters[rem % 3];
            rem /= 3;
        }
        out.emplace_back(label);
    }
    return out;
}

std::vector<ProbeLabel> qpt_probes(std::size_t k) {
    check_k(k, 3);
    std::size_t total = std::size_t{1} << (2 * k);
    std::vector<ProbeLabel> out;
    out.reserve(total);
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<Probe> by_qubit(k);
        for (std::size_t q = 0; q < k; ++q) {
            by_qubit[q] = static_cast<Probe>((n >> (2 * q)) & 3U);
        }
        out.emplace_back(std::move(by_qubit));
    }
    return out;
}

}  // namespace ccx
