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

#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ccx::testing {

namespace {

ComplexMatrix ginibre(Rng &rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) g(r, c) = Complex(normal(rng), normal(rng));
    }
    return g;
}

}  // namespace

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

ComplexMatrix random_unitary(Rng &rng, std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(rng, n, n));
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

ComplexVector random_state(Rng &rng, std::size_t dim) {
    ComplexVector v = ginibre(rng, static_cast<Eigen::Index>(dim), 1).col(0);
    return v / v.norm();
}

ComplexMatrix random_density(Rng &rng, std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    const ComplexMatrix g = ginibre(rng, n, n);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

KrausChannel random_channel(Rng &rng, std::size_t dim, std::size_t rank) {
    const ComplexMatrix u = random_unitary(rng, dim * rank);
    const auto n = static_cast<Eigen::Index>(dim);
    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < rank; ++k) {
        ops.push_back(u.block(static_cast<Eigen::Index>(k) * n, 0, n, n));
    }
    return KrausChannel(std::move(ops));
}

Circuit random_circuit(Rng &rng, std::size_t num_qubits, std::size_t length, bool native_only) {
    static constexpr GateKind kNative[] = {GateKind::X, GateKind::SX, GateKind::RZ, GateKind::ID,
                                           GateKind::ECR};
    static constexpr GateKind kAll[] = {GateKind::X,   GateKind::SX, GateKind::RZ,  GateKind::H,
                                        GateKind::T,   GateKind::TDG, GateKind::S,  GateKind::SDG,
                                        GateKind::ID,  GateKind::CNOT, GateKind::ECR, GateKind::CCX};
    Circuit c(num_qubits);
    std::uniform_int_distribution<std::size_t> pick_q(0, num_qubits - 1);
    for (std::size_t i = 0; i < length; ++i) {
        GateKind kind;
        do {
            kind = native_only ? kNative[rng() % std::size(kNative)] : kAll[rng() % std::size(kAll)];
        } while (gate_qubit_arity(kind) > num_qubits);
        std::vector<std::size_t> qs;
        while (qs.size() < gate_qubit_arity(kind)) {
            const std::size_t q = pick_q(rng);
            if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
        }
        std::vector<double> params;
        if (kind == GateKind::RZ) params.push_back(uniform(rng, -2 * std::numbers::pi, 2 * std::numbers::pi));
        c.append(Gate(kind, std::move(qs), std::move(params)));
    }
    return c;
}

}  // namespace ccx::testing
