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

#ifndef CCX_CIRCUIT_HPP
#define CCX_CIRCUIT_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccx/qmath.hpp"

namespace ccx {

/// Gate catalog. X, SX, RZ, ID and ECR form the hardware-native set; H, T,
/// TDG, S, SDG and CNOT appear in textbook decompositions; CCX is a
/// pre-synthesis pseudo-gate that never executes.
enum class GateKind { X, SX, RZ, H, T, TDG, S, SDG, ID, CNOT, ECR, CCX };

std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept;
std::size_t gate_qubit_arity(GateKind kind) noexcept;
std::size_t gate_param_arity(GateKind kind) noexcept;
bool is_native(GateKind kind) noexcept;

/// One gate application. For controlled gates the control(s) come first:
/// CNOT(control, target), ECR(control, target), CCX(c0, c1, target).
class Gate {
  public:
    Gate(GateKind kind, std::vector<std::size_t> qubits, std::vector<double> params = {});

    static Gate x(std::size_t q) { return Gate(GateKind::X, {q}); }
    static Gate sx(std::size_t q) { return Gate(GateKind::SX, {q}); }
    static Gate rz(double angle, std::size_t q) { return Gate(GateKind::RZ, {q}, {angle}); }
    static Gate h(std::size_t q) { return Gate(GateKind::H, {q}); }
    static Gate t(std::size_t q) { return Gate(GateKind::T, {q}); }
    static Gate tdg(std::size_t q) { return Gate(GateKind::TDG, {q}); }
    static Gate s(std::size_t q) { return Gate(GateKind::S, {q}); }
    static Gate sdg(std::size_t q) { return Gate(GateKind::SDG, {q}); }
    static Gate id(std::size_t q) { return Gate(GateKind::ID, {q}); }
    static Gate cnot(std::size_t c, std::size_t t) { return Gate(GateKind::CNOT, {c, t}); }
    static Gate ecr(std::size_t c, std::size_t t) { return Gate(GateKind::ECR, {c, t}); }
    static Gate ccx(std::size_t c0, std::size_t c1, std::size_t t) {
        return Gate(GateKind::CCX, {c0, c1, t});
    }

    GateKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return gate_name(kind_); }
    const std::vector<std::size_t> &qubits() const noexcept { return qubits_; }
    const std::vector<double> &params() const noexcept { return params_; }
    std::size_t arity() const noexcept { return qubits_.size(); }
    bool acts_on(std::size_t q) const noexcept;

    friend bool operator==(const Gate &, const Gate &) = default;

  private:
    GateKind kind_;
    std::vector<std::size_t> qubits_;
    std::vector<double> params_;
};

/// Unitary of the gate in its argument order: qubits()[i] is bit i of the
/// local basis index (little-endian).
ComplexMatrix gate_matrix_local(const Gate &g);

/// Unitary of the gate on its own qubits ordered by ascending index, lowest
/// index least significant. For ECR this yields the (control -> target)
/// matrix when control < target and its swap-conjugate otherwise.
UnitaryMatrix gate_matrix(const Gate &g);

/// Literal three-qubit Toffoli permutation: identity on the first six basis
/// states, swap of the last two. In little-endian order this is the
/// Toffoli with controls (1, 2) and target 0.
ComplexMatrix toffoli_reference_matrix();

/// Toffoli for arbitrary roles on `num_qubits` qubits.
UnitaryMatrix toffoli_unitary(std::size_t c0, std::size_t c1, std::size_t target,
                              std::size_t num_qubits);

/// Expands a local operator (bit i <-> qubits[i]) to the full register.
ComplexMatrix embed_operator(const ComplexMatrix &local, std::span<const std::size_t> qubits,
                             std::size_t num_qubits);

/// Undirected qubit adjacency.
class CouplingGraph {
  public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit CouplingGraph(std::size_t num_qubits, std::vector<Edge> edges = {});
    /// Path 0 - 1 - ... - (n-1).
    static CouplingGraph line(std::size_t num_qubits);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    const std::set<Edge> &edges() const noexcept { return edges_; }
    bool adjacent(std::size_t a, std::size_t b) const noexcept;

    friend bool operator==(const CouplingGraph &, const CouplingGraph &) = default;

  private:
    std::size_t num_qubits_;
    std::set<Edge> edges_;  // stored with first < second
};

class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    const std::optional<CouplingGraph> &coupling() const noexcept { return coupling_; }
    void set_coupling(CouplingGraph g);

    Circuit &append(Gate g);
    /// Appends every gate of `other`, which must not use more qubits.
    Circuit &append(const Circuit &other);

    /// Gates in `this` followed by the gates in `rhs`.
    friend Circuit operator+(Circuit lhs, const Circuit &rhs) { return std::move(lhs.append(rhs)); }
    friend bool operator==(const Circuit &, const Circuit &) = default;

    std::size_t count(GateKind kind) const noexcept;
    std::size_t two_qubit_count() const noexcept;
    std::size_t single_qubit_count() const noexcept;
    /// Number of layers when every gate is scheduled as early as possible.
    std::size_t depth() const noexcept;

  private:
    std::size_t num_qubits_;
    std::vector<Gate> gates_;
    std::optional<CouplingGraph> coupling_;
};

/// Product of all gate unitaries, later gates on the left. Little-endian:
/// qubit 0 is the least-significant bit of the basis index.
UnitaryMatrix circuit_unitary(const Circuit &c);

struct ConnectivityViolation {
    std::size_t gate_index;
    Gate gate;
};

/// Every multi-qubit gate whose qubits are not pairwise coupled. CCX is
/// always reported since it has no native realization.
std::vector<ConnectivityViolation> validate_connectivity(const Circuit &c, const CouplingGraph &g);

/// Text interchange format:
///
///     # comment
///     qubits 3
///     coupling 0-1,1-2          (optional)
///     RZ(1.5707963267948966) q[0]
///     CNOT q[0],q[1]
///
/// Angles are written with 17 significant digits, so parsing restores them
/// bit for bit.
std::string serialize_circuit(const Circuit &c);
Circuit parse_circuit(std::string_view text);

/// `%.17g` rendering; exact under parse.
std::string format_angle(double v);

}  // namespace ccx

#endif  // CCX_CIRCUIT_HPP
