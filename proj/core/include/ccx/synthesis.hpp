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

#ifndef CCX_SYNTHESIS_HPP
#define CCX_SYNTHESIS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "ccx/circuit.hpp"

namespace ccx {

enum class Strategy {
    Full6Cnot,     // textbook H/T ladder, assumes all-to-all coupling
    Lnn8Cnot,      // nearest-neighbour CNOT network on a path
    Lnn9CnotRzSx,  // nearest-neighbour, single-qubit gates restricted to RZ/SX
    EcrNative,     // {ECR, RZ, SX, X, ID} only
};

std::string_view strategy_name(Strategy s) noexcept;
std::optional<Strategy> strategy_from_name(std::string_view name) noexcept;
inline constexpr std::array<Strategy, 4> kAllStrategies{
    Strategy::Full6Cnot, Strategy::Lnn8Cnot, Strategy::Lnn9CnotRzSx, Strategy::EcrNative};

/// Qubit roles of a Toffoli. The default reproduces the literal reference
/// matrix: controls on qubits 1 and 2, target on qubit 0.
struct ToffoliRoles {
    std::size_t control0 = 1;
    std::size_t control1 = 2;
    std::size_t target = 0;

    std::size_t width() const noexcept;
};

/// Builds a Toffoli circuit with the requested strategy. Nearest-neighbour
/// strategies need the three qubits to form a path in `coupling`; the
/// overload without a graph uses the line 0 - 1 - ... .
/// Throws NonPathQubits otherwise.
Circuit decompose_toffoli(Strategy strategy, const ToffoliRoles &roles,
                          const CouplingGraph &coupling);
Circuit decompose_toffoli(Strategy strategy, const ToffoliRoles &roles = {});

struct EquivalenceReport {
    bool equivalent = false;
    Complex phase{1.0, 0.0};  // u ~= phase * v
    double max_abs_error = 0.0;
    std::size_t gate_count_2q = 0;
    std::size_t depth = 0;
};

/// Aligns the global phase on the largest-magnitude entry of `v` and reports
/// the residual max |u - phase * v|.
EquivalenceReport equivalent_up_to_global_phase(const UnitaryMatrix &u, const UnitaryMatrix &v,
                                                double tolerance = tol::kConstruction);

/// Checks a synthesized circuit against the Toffoli with the given roles and
/// fills in gate statistics.
EquivalenceReport certify_toffoli(const Circuit &c, const ToffoliRoles &roles,
                                  double tolerance = tol::kConstruction);

/// CNOT(control -> target) over {ECR, RZ, SX, X} using exactly one ECR.
Circuit cnot_to_ecr(std::size_t control, std::size_t target);

/// Rewrites every gate into {ECR, RZ, SX, X}. CCX is rejected (NonNativeGate).
Circuit lower_to_native(const Circuit &c);

/// Peephole pass over adjacent single-qubit gates on the same wire: sums
/// consecutive RZ angles (wrapped to (-pi, pi]), cancels X.X, drops ID and
/// trivial RZ, and optionally folds SX.SX into X. Exact up to global phase.
Circuit merge_single_qubit_gates(const Circuit &c, bool fold_sx_pairs = true);

}  // namespace ccx

#endif  // CCX_SYNTHESIS_HPP
