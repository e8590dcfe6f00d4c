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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "ccx/error.hpp"
#include "random.hpp"

namespace ccx {
namespace {

using testing::Rng;

ComplexMatrix truth_table_toffoli(const ToffoliRoles &r, std::size_t n) {
    const auto dim = Eigen::Index{1} << n;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        Eigen::Index y = x;
        if (((x >> r.control0) & 1) && ((x >> r.control1) & 1)) y ^= Eigen::Index{1} << r.target;
        m(y, x) = 1;
    }
    return m;
}

// Independent phase-insensitive comparison: |Tr(A^dag B)| = d iff A = e^{i phi} B
// for unitaries A, B.
double phase_free_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    return 1.0 - std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

// Random circuit over the whole catalogue minus CCX, which has to go through
// decompose_toffoli first.
Circuit random_lowerable(Rng &rng, std::size_t n, std::size_t len) {
    Circuit out(n);
    const Circuit raw = testing::random_circuit(rng, n, len, false);
    for (const Gate &g : raw.gates()) {
        if (g.kind() != GateKind::CCX) out.append(g);
    }
    return out;
}

std::set<GateKind> kinds(const Circuit &c) {
    std::set<GateKind> out;
    for (const Gate &g : c.gates()) out.insert(g.kind());
    return out;
}

TEST(Strategies, ReproduceToffoliTruthTable) {
    const ToffoliRoles roles;
    const ComplexMatrix expected = truth_table_toffoli(roles, 3);
    for (Strategy s : kAllStrategies) {
        const Circuit c = decompose_toffoli(s, roles);
        EXPECT_LT(phase_free_distance(circuit_unitary(c).matrix(), expected), 1e-12)
            << strategy_name(s);
        const EquivalenceReport rep = certify_toffoli(c, roles);
        EXPECT_TRUE(rep.equivalent) << strategy_name(s);
        EXPECT_LE(rep.max_abs_error, 1e-10);
    }
}

TEST(Strategies, BasisStateActionOn110) {
    // |110> in text order: q2 = 1, q1 = 1, q0 = 0 -> target q0 flips
    for (Strategy s : kAllStrategies) {
        const ComplexMatrix u = circuit_unitary(decompose_toffoli(s)).matrix();
        EXPECT_NEAR(std::abs(u(0b111, 0b110)), 1.0, 1e-12) << strategy_name(s);
        EXPECT_NEAR(std::abs(u(0b110, 0b111)), 1.0, 1e-12) << strategy_name(s);
        for (Eigen::Index x = 0; x < 6; ++x) EXPECT_NEAR(std::abs(u(x, x)), 1.0, 1e-12);
    }
}

TEST(Strategies, GateBudgets) {
    EXPECT_EQ(decompose_toffoli(Strategy::Full6Cnot).count(GateKind::CNOT), 6u);
    EXPECT_EQ(decompose_toffoli(Strategy::Lnn8Cnot).count(GateKind::CNOT), 8u);
    EXPECT_EQ(decompose_toffoli(Strategy::Lnn9CnotRzSx).count(GateKind::CNOT), 9u);
    const Circuit ecr = decompose_toffoli(Strategy::EcrNative);
    EXPECT_EQ(ecr.count(GateKind::CNOT), 0u);
    EXPECT_EQ(ecr.two_qubit_count(), ecr.count(GateKind::ECR));
    EXPECT_GE(ecr.count(GateKind::ECR), 8u);
}

TEST(Strategies, GateSets) {
    const std::set<GateKind> clifford_t{GateKind::H, GateKind::T, GateKind::TDG, GateKind::CNOT,
                                        GateKind::S, GateKind::SDG};
    for (Strategy s : {Strategy::Full6Cnot, Strategy::Lnn8Cnot}) {
        for (GateKind k : kinds(decompose_toffoli(s))) EXPECT_TRUE(clifford_t.contains(k));
    }
    const std::set<GateKind> rz_sx{GateKind::RZ, GateKind::SX, GateKind::CNOT};
    for (GateKind k : kinds(decompose_toffoli(Strategy::Lnn9CnotRzSx))) {
        EXPECT_TRUE(rz_sx.contains(k)) << gate_name(k);
    }
    for (GateKind k : kinds(decompose_toffoli(Strategy::EcrNative))) {
        EXPECT_TRUE(is_native(k)) << gate_name(k);
    }
}

TEST(Strategies, NearestNeighbourOnLine) {
    const CouplingGraph line = CouplingGraph::line(3);
    for (Strategy s : {Strategy::Lnn8Cnot, Strategy::Lnn9CnotRzSx, Strategy::EcrNative}) {
        EXPECT_TRUE(validate_connectivity(decompose_toffoli(s), line).empty()) << strategy_name(s);
    }
    // the textbook ladder couples the two ends of the path
    EXPECT_FALSE(validate_connectivity(decompose_toffoli(Strategy::Full6Cnot), line).empty());
}

TEST(Strategies, AllRoleAssignmentsOnLine) {
    const std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto &p : perms) {
        const ToffoliRoles roles{p[0], p[1], p[2]};
        const ComplexMatrix expected = truth_table_toffoli(roles, 3);
        for (Strategy s : kAllStrategies) {
            const Circuit c = decompose_toffoli(s, roles);
            EXPECT_LT(phase_free_distance(circuit_unitary(c).matrix(), expected), 1e-12);
            if (s != Strategy::Full6Cnot) {
                EXPECT_TRUE(validate_connectivity(c, CouplingGraph::line(3)).empty());
            }
        }
    }
}

TEST(Strategies, WiderRegisterAndCustomGraph) {
    const ToffoliRoles roles{4, 2, 3};
    const CouplingGraph g(5, {{0, 1}, {2, 3}, {3, 4}});
    const Circuit c = decompose_toffoli(Strategy::Lnn8Cnot, roles, g);
    EXPECT_TRUE(validate_connectivity(c, g).empty());
    EXPECT_LT(phase_free_distance(circuit_unitary(c).matrix(), truth_table_toffoli(roles, 5)), 1e-12);
}

TEST(Strategies, NonPathQubitsRejected) {
    const CouplingGraph g(3, {{0, 1}});
    try {
        decompose_toffoli(Strategy::Lnn8Cnot, ToffoliRoles{}, g);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "NonPathQubits");
    }
    EXPECT_THROW(decompose_toffoli(Strategy::Full6Cnot, ToffoliRoles{0, 0, 1}), Error);
}

TEST(Strategies, NamesRoundTrip) {
    for (Strategy s : kAllStrategies) EXPECT_EQ(strategy_from_name(strategy_name(s)), s);
    EXPECT_FALSE(strategy_from_name("bogus").has_value());
}

TEST(Certification, DetectsPhaseOnlyDifference) {
    const ComplexMatrix t = toffoli_reference_matrix();
    const Complex phase = std::exp(Complex(0.0, std::numbers::pi / 7));
    const EquivalenceReport ok = equivalent_up_to_global_phase(UnitaryMatrix(phase * t), UnitaryMatrix(t));
    EXPECT_TRUE(ok.equivalent);
    EXPECT_LT(std::abs(ok.phase - phase), 1e-12);

    ComplexMatrix relative = t;
    relative(7, 6) *= phase;  // a relative phase is not global
    const EquivalenceReport bad =
        equivalent_up_to_global_phase(UnitaryMatrix(relative), UnitaryMatrix(t));
    EXPECT_FALSE(bad.equivalent);
}

TEST(Certification, RejectsWrongCircuit) {
    Circuit c = decompose_toffoli(Strategy::Full6Cnot);
    c.append(Gate::t(0));
    EXPECT_FALSE(certify_toffoli(c, ToffoliRoles{}).equivalent);
    // swapping the controls gives the same operator
    EXPECT_TRUE(certify_toffoli(decompose_toffoli(Strategy::Full6Cnot), ToffoliRoles{2, 1, 0})
                    .equivalent);
    EXPECT_FALSE(certify_toffoli(decompose_toffoli(Strategy::Full6Cnot), ToffoliRoles{0, 2, 1})
                     .equivalent);
}

TEST(Lowering, CnotToEcrBothOrientations) {
    for (auto [c, t] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}}) {
        const Circuit lowered = cnot_to_ecr(c, t);
        for (const Gate &g : lowered.gates()) EXPECT_TRUE(is_native(g.kind()));
        EXPECT_EQ(lowered.count(GateKind::ECR), 1u);
        const ComplexMatrix cnot = circuit_unitary(Circuit(2).append(Gate::cnot(c, t))).matrix();
        EXPECT_LT(phase_free_distance(circuit_unitary(lowered).matrix(), cnot), 1e-12);
    }
}

TEST(Lowering, PreservesRandomCircuits) {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Circuit c = random_lowerable(rng, 3, 25);
        const Circuit low = lower_to_native(c);
        EXPECT_THROW(lower_to_native(Circuit(3).append(Gate::ccx(0, 1, 2))), Error);
        for (const Gate &g : low.gates()) EXPECT_TRUE(is_native(g.kind()));
        EXPECT_LT(phase_free_distance(circuit_unitary(low).matrix(), circuit_unitary(c).matrix()),
                  1e-10);
    }
}

TEST(Lowering, MergingPreservesUnitary) {
    Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const Circuit c = lower_to_native(random_lowerable(rng, 3, 30));
        for (bool fold : {false, true}) {
            const Circuit merged = merge_single_qubit_gates(c, fold);
            EXPECT_LE(merged.size(), c.size());
            EXPECT_EQ(merged.count(GateKind::ECR), c.count(GateKind::ECR));
            EXPECT_LT(phase_free_distance(circuit_unitary(merged).matrix(),
                                          circuit_unitary(c).matrix()),
                      1e-10);
        }
    }
}

TEST(EcrStrategy, SerializationRoundTrip) {
    const Circuit c = decompose_toffoli(Strategy::EcrNative);
    const Circuit back = parse_circuit(serialize_circuit(c));
    EXPECT_EQ(back, c);
    EXPECT_TRUE(certify_toffoli(back, ToffoliRoles{}).equivalent);
}

}  // namespace
}  // namespace ccx
