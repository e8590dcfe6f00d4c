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

#ifndef CCX_TOMOGRAPHY_HPP
#define CCX_TOMOGRAPHY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccx/channels.hpp"
#include "ccx/circuit.hpp"
#include "ccx/pauli.hpp"
#include "ccx/simulator.hpp"

namespace ccx {

/// Normalized Choi matrix sigma = Xi / Gamma of a k-qubit channel. Index
/// (i, r) maps to i * Gamma + r, input factor first.
class ChoiMatrix {
  public:
    /// Throws NotChoi unless Hermitian, unit trace (1e-8) and PSD (-1e-6).
    explicit ChoiMatrix(ComplexMatrix m);

    const ComplexMatrix &matrix() const noexcept { return m_; }
    /// Gamma^2.
    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    /// Gamma = 2^k.
    std::size_t gamma() const noexcept;
    std::size_t num_qubits() const { return qubits_for_dim(gamma()); }

    double purity() const;
    /// max |Gamma * Tr_out(sigma) - I|; zero for trace-preserving channels.
    double trace_preservation_deviation() const;

  private:
    ComplexMatrix m_;
};

ChoiMatrix choi_of_unitary(const UnitaryMatrix &u);
ChoiMatrix choi_of_unitary(const ComplexMatrix &u);
ChoiMatrix choi_of_channel(const KrausChannel &ch);

/// F_S between normalized Choi matrices.
double process_fidelity(const ChoiMatrix &a, const ChoiMatrix &b);

/// (Gamma * f_pro + 1) / (Gamma + 1), Gamma = 2^k.
double average_gate_fidelity(double f_pro, std::size_t k);

/// Pauli transfer matrix S_ab = Tr(P_a E(P_b)) / Gamma over the normalized
/// Pauli basis, Paulis ordered by base-4 index with qubit 0 least significant.
Eigen::MatrixXd pauli_transfer_matrix(const KrausChannel &ch);
Eigen::MatrixXd pauli_transfer_matrix(const UnitaryMatrix &u);

/// Re Tr(S_W^dag S) / Gamma^2 against the transfer matrix of the target unitary.
double process_fidelity_superop(const ComplexMatrix &channel_superop, const UnitaryMatrix &target);

/// Pauli label of basis element `index` for `k` qubits in the PTM ordering.
std::string pauli_basis_label(std::size_t index, std::size_t k);

// ---- state tomography

using QstCounts = std::map<PauliString, CountsMap>;
using QstProbabilities = std::map<PauliString, Eigen::VectorXd>;

/// Linear inversion over every Pauli expectation followed by projection onto
/// density matrices. Throws MissingSetting naming the absent settings.
DensityMatrix qst_reconstruct(const QstCounts &data, std::size_t k);
DensityMatrix qst_reconstruct(const QstProbabilities &data, std::size_t k);

/// The unprojected linear-inversion estimate (Hermitian, unit trace).
ComplexMatrix qst_linear_inversion(const QstProbabilities &data, std::size_t k);

/// Exact outcome distributions for every setting.
QstProbabilities exact_qst_probabilities(const QuantumState &state);

// ---- process tomography

struct TomographyJob {
    std::size_t index = 0;
    ProbeLabel probe;
    PauliString setting;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    /// Probe preparation, channel, measurement rotation.
    Circuit circuit;
};

/// 4^k probes x 3^k settings, probe-major in lexicographic order; job i is
/// seeded with derive_seed(master_seed, i). Throws KOutOfRange outside 1..3.
std::vector<TomographyJob> qpt_jobs(const Circuit &gate_circuit, std::size_t k,
                                    std::uint64_t shots, std::uint64_t master_seed);

struct QptKey {
    ProbeLabel probe;
    PauliString setting;
    friend auto operator<=>(const QptKey &, const QptKey &) = default;
    friend bool operator==(const QptKey &, const QptKey &) = default;
};

using QptCounts = std::map<QptKey, CountsMap>;
using QptProbabilities = std::map<QptKey, Eigen::VectorXd>;

/// Per-probe state tomography, inversion of the probe basis and projection
/// onto unit-trace PSD Choi matrices. Throws MissingCell.
ChoiMatrix qpt_reconstruct(const QptCounts &data, std::size_t k);
ChoiMatrix qpt_reconstruct(const QptProbabilities &data, std::size_t k);

/// Coefficients c_p with |i><j| = sum_p c_p rho_p over the single-qubit
/// probes (0, 1, +, +i); row = 2 i + j.
Eigen::Matrix4cd probe_dual_coefficients();

/// Persisted tomography data for re-reconstruction.
struct QptDataset {
    std::size_t k = 0;
    std::uint64_t shots = 0;
    std::uint64_t master_seed = 0;
    std::string circuit_text;
    QptCounts cells;
};

std::string qpt_dataset_to_json(const QptDataset &d);
/// Throws SchemaError with the JSON path of the offending field.
QptDataset qpt_dataset_from_json(const std::string &text);

}  // namespace ccx

#endif  // CCX_TOMOGRAPHY_HPP
