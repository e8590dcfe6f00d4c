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

#include "ccx/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "ccx/error.hpp"

namespace ccx {

namespace {

using std::numbers::pi;

constexpr double kAngleEps = 1e-12;

double wrap_angle(double a) {
    double r = std::remainder(a, 2.0 * pi);
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

struct PathTriple {
    std::size_t end_a;
    std::size_t middle;
    std::size_t end_b;
};

PathTriple find_path(const ToffoliRoles &roles, const CouplingGraph &g) {
    const std::array<std::size_t, 3> qs{roles.target, roles.control0, roles.control1};
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t m = qs[k];
        std::size_t a = qs[(k + 1) % 3];
        std::size_t b = qs[(k + 2) % 3];
        if (a > b) std::swap(a, b);
        if (m < g.num_qubits() && a < g.num_qubits() && b < g.num_qubits() && g.adjacent(a, m) &&
            g.adjacent(m, b)) {
            return {a, m, b};
        }
    }
    throw usage_error("NonPathQubits", "qubits " + std::to_string(roles.control0) + ", " +
                                           std::to_string(roles.control1) + ", " +
                                           std::to_string(roles.target) +
                                           " do not form a path in the coupling graph");
}

// A CNOT network over the wires (end_a = 0, middle = 1, end_b = 2). Every
// move couples the middle wire with an end wire.
using WireMove = std::pair<int, int>;

// Visits all parities of weight >= 2 and returns to the identity map.
constexpr std::array<WireMove, 8> kNetwork8{
    {{0, 1}, {1, 2}, {0, 1}, {1, 2}, {0, 1}, {1, 2}, {0, 1}, {1, 2}}};
// Same property with nine moves; the first three swap the a/m wires.
constexpr std::array<WireMove, 9> kNetwork9{
    {{0, 1}, {1, 0}, {0, 1}, {2, 1}, {1, 0}, {0, 1}, {2, 1}, {1, 0}, {2, 1}}};

enum class SingleQubitStyle { CliffordT, RzSx };

void append_h(Circuit &c, std::size_t q, SingleQubitStyle style) {
    if (style == SingleQubitStyle::CliffordT) {
        c.append(Gate::h(q));
    } else {
        c.append(Gate::rz(pi / 2, q)).append(Gate::sx(q)).append(Gate::rz(pi / 2, q));
    }
}

void append_phase(Circuit &c, std::size_t q, int sign, SingleQubitStyle style) {
    if (style == SingleQubitStyle::CliffordT) {
        c.append(sign > 0 ? Gate::t(q) : Gate::tdg(q));
    } else {
        c.append(Gate::rz(sign * pi / 4, q));
    }
}

// CCZ from the phase polynomial
//   4 x_a x_m x_b = x_a + x_m + x_b - (a^m) - (a^b) - (m^b) + (a^m^b)
// with one pi/4 phase per parity, placed the first time a wire carries it.
template <std::size_t N>
void append_ccz(Circuit &c, const PathTriple &p, const std::array<WireMove, N> &network,
                SingleQubitStyle style) {
    const std::array<std::size_t, 3> wire_qubit{p.end_a, p.middle, p.end_b};
    std::array<unsigned, 3> parity{1U, 2U, 4U};
    unsigned done = 0;  // bitmask over parity values 1..7
    for (int w = 0; w < 3; ++w) {
        append_phase(c, wire_qubit[static_cast<std::size_t>(w)], +1, style);
        done |= 1U << parity[static_cast<std::size_t>(w)];
    }
    for (auto [ctl, tgt] : network) {
        c.append(Gate::cnot(wire_qubit[static_cast<std::size_t>(ctl)],
                            wire_qubit[static_cast<std::size_t>(tgt)]));
        unsigned &par = parity[static_cast<std::size_t>(tgt)];
        par ^= parity[static_cast<std::size_t>(ctl)];
        if (!(done & (1U << par))) {
            const int weight = std::popcount(par);
            append_phase(c, wire_qubit[static_cast<std::size_t>(tgt)], weight == 2 ? -1 : +1,
                         style);
            done |= 1U << par;
        }
    }
    if (done != 0xFEU || parity != std::array<unsigned, 3>{1U, 2U, 4U}) {
        throw numerical_error("SynthesisFailure", "parity network does not realize CCZ");
    }
}

Circuit full_6cnot(const ToffoliRoles &r) {
    const std::size_t c1 = r.control0, c2 = r.control1, t = r.target;
    Circuit c(r.width());
    c.append(Gate::h(t))
        .append(Gate::cnot(c2, t))
        .append(Gate::tdg(t))
        .append(Gate::cnot(c1, t))
        .append(Gate::t(t))
        .append(Gate::cnot(c2, t))
        .append(Gate::tdg(t))
        .append(Gate::cnot(c1, t))
        .append(Gate::tdg(c2))
        .append(Gate::t(t))
        .append(Gate::cnot(c1, c2))
        .append(Gate::tdg(c2))
        .append(Gate::cnot(c1, c2))
        .append(Gate::s(c2))
        .append(Gate::t(c1))
        .append(Gate::h(t));
    return c;
}

template <std::size_t N>
Circuit lnn(const ToffoliRoles &r, const CouplingGraph &g, const std::array<WireMove, N> &network,
            SingleQubitStyle style) {
    const PathTriple path = find_path(r, g);
    Circuit c(r.width());
    append_h(c, r.target, style);
    append_ccz(c, path, network, style);
    append_h(c, r.target, style);
    return c;
}

// --- CNOT -> ECR correction search -----------------------------------------

struct Correction {
    bool ecr_follows_cnot = true;  // ECR control on the CNOT control
    std::array<std::vector<Gate>, 4> slots;  // pre-control, pre-target, post-control, post-target
};

const std::array<Gate, 5> &correction_alphabet() {
    static const std::array<Gate, 5> alphabet{Gate::x(0), Gate::sx(0), Gate::rz(pi / 2, 0),
                                              Gate::rz(pi, 0), Gate::rz(-pi / 2, 0)};
    return alphabet;
}

ComplexMatrix sequence_matrix(const std::vector<std::size_t> &seq) {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    for (std::size_t s : seq) m = gate_matrix_local(correction_alphabet()[s]) * m;
    return m;
}

// All index sequences of exactly `len` letters, lexicographic.
std::vector<std::vector<std::size_t>> sequences_of_length(std::size_t len) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t l = 0; l < len; ++l) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto &prefix : out) {
            for (std::size_t a = 0; a < correction_alphabet().size(); ++a) {
                auto s = prefix;
                s.push_back(a);
                next.push_back(std::move(s));
            }
        }
        out = std::move(next);
    }
    return out;
}

// Solves CNOT ~ (Qt x Qc) ECR (Pt x Pc) over a small discrete alphabet,
// smallest total correction count first, forward orientation on ties.
Correction derive_correction() {
    const ComplexMatrix cnot = gate_matrix_local(Gate::cnot(0, 1));
    const ComplexMatrix forward = gate_matrix_local(Gate::ecr(0, 1));
    const std::array<std::size_t, 2> swapped{1, 0};
    const ComplexMatrix reverse = embed_operator(gate_matrix_local(Gate::ecr(0, 1)), swapped, 2);
    const UnitaryMatrix target(cnot);

    constexpr std::size_t kMaxBudget = 6;
    for (std::size_t budget = 0; budget <= kMaxBudget; ++budget) {
        for (bool follows : {true, false}) {
            const ComplexMatrix &ecr = follows ? forward : reverse;
            for (std::size_t l0 = 0; l0 <= budget; ++l0) {
                for (std::size_t l1 = 0; l0 + l1 <= budget; ++l1) {
                    for (std::size_t l2 = 0; l0 + l1 + l2 <= budget; ++l2) {
                        const std::size_t l3 = budget - l0 - l1 - l2;
                        for (const auto &s0 : sequences_of_length(l0)) {
                            const ComplexMatrix m0 = sequence_matrix(s0);
                            for (const auto &s1 : sequences_of_length(l1)) {
                                const ComplexMatrix pre = kron(sequence_matrix(s1), m0);
                                for (const auto &s2 : sequences_of_length(l2)) {
                                    const ComplexMatrix m2 = sequence_matrix(s2);
                                    for (const auto &s3 : sequences_of_length(l3)) {
                                        const ComplexMatrix u =
                                            kron(sequence_matrix(s3), m2) * ecr * pre;
                                        if (!equivalent_up_to_global_phase(UnitaryMatrix(u), target)
                                                 .equivalent) {
                                            continue;
                                        }
                                        Correction c;
                                        c.ecr_follows_cnot = follows;
                                        const std::array<const std::vector<std::size_t> *, 4> all{
                                            &s0, &s1, &s2, &s3};
                                        for (std::size_t k = 0; k < 4; ++k) {
                                            for (std::size_t a : *all[k]) {
                                                c.slots[k].push_back(correction_alphabet()[a]);
                                            }
                                        }
                                        return c;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    throw numerical_error("SynthesisFailure", "no CNOT -> ECR correction within budget");
}

const Correction &cnot_correction() {
    static const Correction c = derive_correction();
    return c;
}

Gate retarget(const Gate &g, std::size_t q) {
    return Gate(g.kind(), {q}, g.params());
}

}  // namespace

std::string_view strategy_name(Strategy s) noexcept {
    switch (s) {
        case Strategy::Full6Cnot: return "full6";
        case Strategy::Lnn8Cnot: return "lnn8";
        case Strategy::Lnn9CnotRzSx: return "lnn9";
        case Strategy::EcrNative: return "ecr";
    }
    return "unknown";
}

std::optional<Strategy> strategy_from_name(std::string_view name) noexcept {
    for (Strategy s : kAllStrategies) {
        if (strategy_name(s) == name) return s;
    }
    if (name == "FULL_6CNOT") return Strategy::Full6Cnot;
    if (name == "LNN_8CNOT") return Strategy::Lnn8Cnot;
    if (name == "LNN_9CNOT_RZSX") return Strategy::Lnn9CnotRzSx;
    if (name == "ECR_NATIVE") return Strategy::EcrNative;
    return std::nullopt;
}

std::size_t ToffoliRoles::width() const noexcept {
    return std::max({control0, control1, target}) + 1;
}

Circuit decompose_toffoli(Strategy strategy, const ToffoliRoles &roles) {
    return decompose_toffoli(strategy, roles, CouplingGraph::line(std::max<std::size_t>(roles.width(), 3)));
}

Circuit decompose_toffoli(Strategy strategy, const ToffoliRoles &roles,
                          const CouplingGraph &coupling) {
    if (roles.control0 == roles.control1 || roles.control0 == roles.target ||
        roles.control1 == roles.target) {
        throw usage_error("BadRoles", "Toffoli roles must use three distinct qubits");
    }
    switch (strategy) {
        case Strategy::Full6Cnot: return full_6cnot(roles);
        case Strategy::Lnn8Cnot:
            return lnn(roles, coupling, kNetwork8, SingleQubitStyle::CliffordT);
        case Strategy::Lnn9CnotRzSx:
            return merge_single_qubit_gates(
                lnn(roles, coupling, kNetwork9, SingleQubitStyle::RzSx), /*fold_sx_pairs=*/false);
        case Strategy::EcrNative:
            return lower_to_native(lnn(roles, coupling, kNetwork8, SingleQubitStyle::CliffordT));
    }
    throw usage_error("UnknownStrategy", "strategy out of range");
}

EquivalenceReport equivalent_up_to_global_phase(const UnitaryMatrix &u, const UnitaryMatrix &v,
                                                double tolerance) {
    if (u.dim() != v.dim()) {
        throw numerical_error("DimensionMismatch", "equivalence check on different dimensions");
    }
    Eigen::Index r = 0, c = 0;
    v.matrix().cwiseAbs().maxCoeff(&r, &c);
    EquivalenceReport rep;
    const Complex ratio = u(r, c) / v(r, c);
    const double mag = std::abs(ratio);
    rep.phase = mag > 0.0 ? ratio / mag : Complex{1.0, 0.0};
    rep.max_abs_error = max_abs(u.matrix() - rep.phase * v.matrix());
    rep.equivalent = rep.max_abs_error <= tolerance;
    return rep;
}

EquivalenceReport certify_toffoli(const Circuit &c, const ToffoliRoles &roles, double tolerance) {
    const UnitaryMatrix target =
        toffoli_unitary(roles.control0, roles.control1, roles.target, c.num_qubits());
    EquivalenceReport rep = equivalent_up_to_global_phase(circuit_unitary(c), target, tolerance);
    rep.gate_count_2q = c.two_qubit_count();
    rep.depth = c.depth();
    return rep;
}

Circuit cnot_to_ecr(std::size_t control, std::size_t target) {
    if (control == target) throw usage_error("GateArity", "CNOT needs distinct qubits");
    const Correction &corr = cnot_correction();
    Circuit c(std::max(control, target) + 1);
    for (const Gate &g : corr.slots[0]) c.append(retarget(g, control));
    for (const Gate &g : corr.slots[1]) c.append(retarget(g, target));
    c.append(corr.ecr_follows_cnot ? Gate::ecr(control, target) : Gate::ecr(target, control));
    for (const Gate &g : corr.slots[2]) c.append(retarget(g, control));
    for (const Gate &g : corr.slots[3]) c.append(retarget(g, target));
    return c;
}

Circuit lower_to_native(const Circuit &in) {
    Circuit out(in.num_qubits());
    for (const Gate &g : in.gates()) {
        const std::size_t q = g.qubits()[0];
        switch (g.kind()) {
            case GateKind::X:
            case GateKind::SX:
            case GateKind::RZ:
            case GateKind::ID:
            case GateKind::ECR: out.append(g); break;
            case GateKind::H:
                out.append(Gate::rz(pi / 2, q)).append(Gate::sx(q)).append(Gate::rz(pi / 2, q));
                break;
            case GateKind::T: out.append(Gate::rz(pi / 4, q)); break;
            case GateKind::TDG: out.append(Gate::rz(-pi / 4, q)); break;
            case GateKind::S: out.append(Gate::rz(pi / 2, q)); break;
            case GateKind::SDG: out.append(Gate::rz(-pi / 2, q)); break;
            case GateKind::CNOT: out.append(cnot_to_ecr(g.qubits()[0], g.qubits()[1])); break;
            case GateKind::CCX:
                throw usage_error("NonNativeGate", "CCX must be synthesized before lowering");
        }
    }
    if (in.coupling()) out.set_coupling(*in.coupling());
    return merge_single_qubit_gates(out);
}

Circuit merge_single_qubit_gates(const Circuit &in, bool fold_sx_pairs) {
    std::vector<std::optional<Gate>> gates(in.gates().begin(), in.gates().end());

    auto next_on_wire = [&](std::size_t from, std::size_t q) -> std::optional<std::size_t> {
        for (std::size_t j = from + 1; j < gates.size(); ++j) {
            if (gates[j] && gates[j]->acts_on(q)) return j;
        }
        return std::nullopt;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (!gates[i] || gates[i]->arity() != 1) continue;
            Gate &g = *gates[i];
            const std::size_t q = g.qubits()[0];
            if (g.kind() == GateKind::ID) {
                gates[i].reset();
                changed = true;
                continue;
            }
            if (g.kind() == GateKind::RZ) {
                const double a = wrap_angle(g.params()[0]);
                if (std::abs(a) < kAngleEps) {
                    gates[i].reset();
                    changed = true;
                    continue;
                }
                if (a != g.params()[0]) {
                    g = Gate::rz(a, q);
                    changed = true;
                }
            }
            const auto j = next_on_wire(i, q);
            if (!j || gates[*j]->arity() != 1) continue;
            const Gate &h = *gates[*j];
            if (g.kind() == GateKind::RZ && h.kind() == GateKind::RZ) {
                g = Gate::rz(wrap_angle(g.params()[0] + h.params()[0]), q);
                gates[*j].reset();
                changed = true;
            } else if (g.kind() == GateKind::X && h.kind() == GateKind::X) {
                gates[i].reset();
                gates[*j].reset();
                changed = true;
            } else if (fold_sx_pairs && g.kind() == GateKind::SX && h.kind() == GateKind::SX) {
                g = Gate::x(q);
                gates[*j].reset();
                changed = true;
            }
        }
    }

    Circuit out(in.num_qubits());
    for (auto &g : gates) {
        if (g) out.append(std::move(*g));
    }
    if (in.coupling()) out.set_coupling(*in.coupling());
    return out;
}

}  // namespace ccx
