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

#ifndef CCX_PAULI_HPP
#define CCX_PAULI_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ccx/circuit.hpp"

namespace ccx {

/// 2x2 Pauli matrix for 'I', 'X', 'Y' or 'Z'.
ComplexMatrix pauli_matrix(char letter);

/// Tensor product of per-qubit Pauli letters; letters[q] acts on qubit q.
ComplexMatrix pauli_product(std::string_view letters_by_qubit);

/// A measurement setting: one Pauli basis per qubit.
///
/// Text form lists the highest qubit first, matching how outcome bitstrings
/// are printed, so "XYZ" measures qubit 0 in Z and qubit 2 in X.
class PauliString {
  public:
    /// Parses the text form. Throws InvalidPauliString.
    explicit PauliString(std::string_view label);

    std::size_t size() const noexcept { return by_qubit_.size(); }
    char operator[](std::size_t qubit) const { return by_qubit_.at(qubit); }
    std::string label() const;
    const std::string &by_qubit() const noexcept { return by_qubit_; }

    ComplexMatrix matrix() const { return pauli_product(by_qubit_); }

    /// Lexicographic on the text form (X < Y < Z).
    friend std::strong_ordering operator<=>(const PauliString &a, const PauliString &b) {
        return a.label() <=> b.label();
    }
    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::string by_qubit_;
};

/// Single-qubit probe states for process tomography.
enum class Probe { Zero, One, Plus, PlusI };

std::string_view probe_name(Probe p) noexcept;  // "0", "1", "+", "+i"
ComplexVector probe_state(Probe p);

/// One probe per qubit. Text form is comma separated, highest qubit first:
/// "+i,0,1" prepares qubit 0 in |1>, qubit 1 in |0> and qubit 2 in |+i>.
class ProbeLabel {
  public:
    explicit ProbeLabel(std::vector<Probe> by_qubit);
    /// Throws InvalidLabel.
    static ProbeLabel parse(std::string_view text);

    std::size_t size() const noexcept { return by_qubit_.size(); }
    Probe operator[](std::size_t qubit) const { return by_qubit_.at(qubit); }
    const std::vector<Probe> &by_qubit() const noexcept { return by_qubit_; }
    std::string label() const;

    /// Product state vector of the probes.
    ComplexVector state() const;

    /// Probe-major lexicographic order (0 < 1 < + < +i, highest qubit first).
    friend std::strong_ordering operator<=>(const ProbeLabel &a, const ProbeLabel &b);
    friend bool operator==(const ProbeLabel &, const ProbeLabel &) = default;

  private:
    std::vector<Probe> by_qubit_;
};

/// Native circuit that rotates each qubit so a computational-basis readout
/// realizes the requested Pauli measurement (outcome 0 <-> eigenvalue +1).
Circuit measurement_rotation(const PauliString &p);

/// Native circuit preparing the probe product state from |0...0>.
Circuit probe_preparation(const ProbeLabel &label);

/// All 3^k settings in lexicographic order. Throws KOutOfRange unless 1 <= k <= 4.
std::vector<PauliString> qst_settings(std::size_t k);

/// All 4^k probe labels in lexicographic order.
std::vector<ProbeLabel> qpt_probes(std::size_t k);

}  // namespace ccx

#endif  // CCX_PAULI_HPP
