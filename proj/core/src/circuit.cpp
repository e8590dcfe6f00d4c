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

#include "ccx/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ccx/error.hpp"

namespace ccx {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    std::size_t qubits;
    std::size_t params;
    bool native;
};

constexpr std::array<GateInfo, 12> kCatalog{{
    {GateKind::X, "X", 1, 0, true},
    {GateKind::SX, "SX", 1, 0, true},
    {GateKind::RZ, "RZ", 1, 1, true},
    {GateKind::H, "H", 1, 0, false},
    {GateKind::T, "T", 1, 0, false},
    {GateKind::TDG, "TDG", 1, 0, false},
    {GateKind::S, "S", 1, 0, false},
    {GateKind::SDG, "SDG", 1, 0, false},
    {GateKind::ID, "ID", 1, 0, true},
    {GateKind::CNOT, "CNOT", 2, 0, false},
    {GateKind::ECR, "ECR", 2, 0, true},
    {GateKind::CCX, "CCX", 3, 0, false},
}};

const GateInfo &info(GateKind kind) {
    return kCatalog[static_cast<std::size_t>(kind)];
}

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

// Maps an index whose bit i belongs to qubits[i] onto the index whose bit j
// belongs to sorted[j].
std::size_t reorder_index(std::size_t idx, std::span<const std::size_t> from,
                          std::span<const std::size_t> to) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if ((idx >> i) & 1U) {
            const auto j = static_cast<std::size_t>(
                std::find(to.begin(), to.end(), from[i]) - to.begin());
            out |= std::size_t{1} << j;
        }
    }
    return out;
}

}  // namespace

std::string_view gate_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept {
    for (const auto &gi : kCatalog) {
        if (gi.name == name) return gi.kind;
    }
    return std::nullopt;
}

std::size_t gate_qubit_arity(GateKind kind) noexcept { return info(kind).qubits; }
std::size_t gate_param_arity(GateKind kind) noexcept { return info(kind).params; }
bool is_native(GateKind kind) noexcept { return info(kind).native; }

Gate::Gate(GateKind kind, std::vector<std::size_t> qubits, std::vector<double> params)
    : kind_(kind), qubits_(std::move(qubits)), params_(std::move(params)) {
    const GateInfo &gi = info(kind_);
    if (qubits_.size() != gi.qubits) {
        throw usage_error("GateArity", std::string(gi.name) + " acts on " +
                                           std::to_string(gi.qubits) + " qubit(s), got " +
                                           std::to_string(qubits_.size()));
    }
    if (params_.size() != gi.params) {
        throw usage_error("GateArity", std::string(gi.name) + " takes " +
                                           std::to_string(gi.params) + " parameter(s), got " +
                                           std::to_string(params_.size()));
    }
    for (double p : params_) {
        if (!std::isfinite(p)) throw usage_error("GateParam", "non-finite gate parameter");
    }
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits_.size(); ++j) {
            if (qubits_[i] == qubits_[j]) {
                throw usage_error("GateArity", std::string(gi.name) + " repeats qubit " +
                                                   std::to_string(qubits_[i]));
            }
        }
    }
}

bool Gate::acts_on(std::size_t q) const noexcept {
    return std::find(qubits_.begin(), qubits_.end(), q) != qubits_.end();
}

ComplexMatrix gate_matrix_local(const Gate &g) {
    using std::numbers::pi;
    using std::numbers::sqrt2;
    const Complex i1{0.0, 1.0};
    switch (g.kind()) {
        case GateKind::X: return mat2(0, 1, 1, 0);
        case GateKind::SX:
            return 0.5 * mat2(Complex(1, 1), Complex(1, -1), Complex(1, -1), Complex(1, 1));
        case GateKind::RZ: {
            const double a = g.params()[0];
            return mat2(std::exp(-i1 * (a / 2)), 0, 0, std::exp(i1 * (a / 2)));
        }
        case GateKind::H: return mat2(1, 1, 1, -1) / sqrt2;
        case GateKind::T: return mat2(1, 0, 0, std::exp(i1 * (pi / 4)));
        case GateKind::TDG: return mat2(1, 0, 0, std::exp(-i1 * (pi / 4)));
        case GateKind::S: return mat2(1, 0, 0, i1);
        case GateKind::SDG: return mat2(1, 0, 0, -i1);
        case GateKind::ID: return ComplexMatrix::Identity(2, 2);
        case GateKind::CNOT: {
            // bit 0 = control, bit 1 = target
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = m(2, 2) = 1;
            m(3, 1) = m(1, 3) = 1;
            return m;
        }
        case GateKind::ECR: {
            // bit 0 = control, bit 1 = target
            ComplexMatrix m(4, 4);
            m << 0, 1, 0, i1,
                 1, 0, -i1, 0,
                 0, i1, 0, 1,
                 -i1, 0, 1, 0;
            return m / sqrt2;
        }
        case GateKind::CCX: {
            // bits 0, 1 = controls, bit 2 = target
            ComplexMatrix m = ComplexMatrix::Identity(8, 8);
            m(3, 3) = m(7, 7) = 0;
            m(3, 7) = m(7, 3) = 1;
            return m;
        }
    }
    throw usage_error("UnknownGate", "gate kind out of range");
}

ComplexMatrix embed_operator(const ComplexMatrix &local, std::span<const std::size_t> qubits,
                             std::size_t num_qubits) {
    const std::size_t k = qubits.size();
    if (local.rows() != (Eigen::Index{1} << k) || local.cols() != local.rows()) {
        throw numerical_error("DimensionMismatch", "operator size does not match qubit count");
    }
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        if (q >= num_qubits) throw usage_error("QubitRange", "qubit index out of range");
        mask |= std::size_t{1} << q;
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t ldim = std::size_t{1} << k;
    auto scatter = [&](std::size_t local_idx) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((local_idx >> i) & 1U) out |= std::size_t{1} << qubits[i];
        }
        return out;
    };
    std::vector<std::size_t> offsets(ldim);
    for (std::size_t l = 0; l < ldim; ++l) offsets[l] = scatter(l);

    ComplexMatrix full = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                             static_cast<Eigen::Index>(dim));
    for (std::size_t rest = 0; rest < dim; ++rest) {
        if (rest & mask) continue;
        for (std::size_t r = 0; r < ldim; ++r) {
            for (std::size_t c = 0; c < ldim; ++c) {
                full(static_cast<Eigen::Index>(rest | offsets[r]),
                     static_cast<Eigen::Index>(rest | offsets[c])) =
                    local(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return full;
}

UnitaryMatrix gate_matrix(const Gate &g) {
    const ComplexMatrix local = gate_matrix_local(g);
    std::vector<std::size_t> sorted = g.qubits();
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<std::size_t>(local.rows());
    ComplexMatrix out(local.rows(), local.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(static_cast<Eigen::Index>(reorder_index(r, g.qubits(), sorted)),
                static_cast<Eigen::Index>(reorder_index(c, g.qubits(), sorted))) =
                local(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return UnitaryMatrix(std::move(out));
}

ComplexMatrix toffoli_reference_matrix() {
    ComplexMatrix m = ComplexMatrix::Identity(8, 8);
    m(6, 6) = m(7, 7) = 0;
    m(6, 7) = m(7, 6) = 1;
    return m;
}

UnitaryMatrix toffoli_unitary(std::size_t c0, std::size_t c1, std::size_t target,
                              std::size_t num_qubits) {
    const Gate g = Gate::ccx(c0, c1, target);
    const std::array<std::size_t, 3> qs{c0, c1, target};
    return UnitaryMatrix(embed_operator(gate_matrix_local(g), qs, num_qubits));
}

// ---------------------------------------------------------------------------

CouplingGraph::CouplingGraph(std::size_t num_qubits, std::vector<Edge> edges)
    : num_qubits_(num_qubits) {
    for (auto [a, b] : edges) {
        if (a == b) throw usage_error("BadEdge", "self-loop on qubit " + std::to_string(a));
        if (a >= num_qubits || b >= num_qubits) {
            throw usage_error("BadEdge", "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                             " outside " + std::to_string(num_qubits) + " qubits");
        }
        edges_.insert({std::min(a, b), std::max(a, b)});
    }
}

CouplingGraph CouplingGraph::line(std::size_t num_qubits) {
    std::vector<Edge> edges;
    for (std::size_t q = 0; q + 1 < num_qubits; ++q) edges.emplace_back(q, q + 1);
    return CouplingGraph(num_qubits, std::move(edges));
}

bool CouplingGraph::adjacent(std::size_t a, std::size_t b) const noexcept {
    return edges_.contains({std::min(a, b), std::max(a, b)});
}

// ---------------------------------------------------------------------------

void Circuit::set_coupling(CouplingGraph g) {
    if (g.num_qubits() < num_qubits_) {
        throw usage_error("BadCoupling", "coupling graph covers fewer qubits than the circuit");
    }
    coupling_ = std::move(g);
}

Circuit &Circuit::append(Gate g) {
    for (std::size_t q : g.qubits()) {
        if (q >= num_qubits_) {
            throw usage_error("QubitRange", std::string(g.name()) + " on qubit " +
                                                std::to_string(q) + " in a " +
                                                std::to_string(num_qubits_) + "-qubit circuit");
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw usage_error("QubitRange", "appended circuit is wider than the target");
    }
    for (const Gate &g : other.gates_) gates_.push_back(g);
    return *this;
}

std::size_t Circuit::count(GateKind kind) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [kind](const Gate &g) { return g.kind() == kind; }));
}

std::size_t Circuit::two_qubit_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [](const Gate &g) { return g.arity() == 2; }));
}

std::size_t Circuit::single_qubit_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [](const Gate &g) { return g.arity() == 1; }));
}

std::size_t Circuit::depth() const noexcept {
    std::vector<std::size_t> level(num_qubits_, 0);
    std::size_t depth = 0;
    for (const Gate &g : gates_) {
        std::size_t start = 0;
        for (std::size_t q : g.qubits()) start = std::max(start, level[q]);
        for (std::size_t q : g.qubits()) level[q] = start + 1;
        depth = std::max(depth, start + 1);
    }
    return depth;
}

UnitaryMatrix circuit_unitary(const Circuit &c) {
    if (c.num_qubits() > 6) {
        throw usage_error("TooManyQubits", "circuit_unitary supports at most 6 qubits, got " +
                                               std::to_string(c.num_qubits()));
    }
    const auto dim = Eigen::Index{1} << c.num_qubits();
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    for (const Gate &g : c.gates()) {
        u = embed_operator(gate_matrix_local(g), g.qubits(), c.num_qubits()) * u;
    }
    return UnitaryMatrix(std::move(u));
}

std::vector<ConnectivityViolation> validate_connectivity(const Circuit &c,
                                                         const CouplingGraph &g) {
    if (c.num_qubits() > g.num_qubits()) {
        throw usage_error("BadCoupling", "circuit has more qubits than the coupling graph");
    }
    std::vector<ConnectivityViolation> out;
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        const Gate &gate = c.gates()[i];
        if (gate.kind() == GateKind::CCX) {
            out.push_back({i, gate});
            continue;
        }
        if (gate.arity() == 2 && !g.adjacent(gate.qubits()[0], gate.qubits()[1])) {
            out.push_back({i, gate});
        }
    }
    return out;
}

}  // namespace ccx
