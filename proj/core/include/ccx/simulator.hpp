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

#ifndef CCX_SIMULATOR_HPP
#define CCX_SIMULATOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccx/channels.hpp"
#include "ccx/circuit.hpp"
#include "ccx/noise_model.hpp"
#include "ccx/pauli.hpp"

namespace ccx {

/// Input states used by the experiments.
enum class InputState { Ghz, W, Uniform };

std::string_view input_state_name(InputState s) noexcept;
std::optional<InputState> input_state_from_name(std::string_view name) noexcept;

struct StatePrep {
    enum class Kind { Ghz, W, Uniform, Basis, Probe };
    Kind kind = Kind::Ghz;
    std::size_t num_qubits = 3;
    std::size_t basis_index = 0;
    std::vector<Probe> probes;

    static StatePrep ghz() { return {Kind::Ghz, 3, 0, {}}; }
    static StatePrep w() { return {Kind::W, 3, 0, {}}; }
    static StatePrep uniform() { return {Kind::Uniform, 3, 0, {}}; }
    static StatePrep basis(std::size_t num_qubits, std::size_t index) {
        return {Kind::Basis, num_qubits, index, {}};
    }
    static StatePrep probe(const ProbeLabel &label) {
        return {Kind::Probe, label.size(), 0, label.by_qubit()};
    }
    static StatePrep of(InputState s);
};

/// Native ({ECR, RZ, SX, X}) circuit that maps |0...0> to the requested
/// state. Throws InvalidLabel for malformed requests.
Circuit prepare_state(const StatePrep &prep);

/// The exact target state, written down directly rather than simulated.
StateVector ideal_state(const StatePrep &prep);

/// Exact pure-state evolution. Accepts every gate except CCX (NonNativeGate).
StateVector run_statevector(const Circuit &c);
StateVector run_statevector(const Circuit &c, const StateVector &initial);

/// Noisy evolution from |0...0>. Each gate applies its unitary, then a
/// depolarizing channel on its qubits, then thermal relaxation on each of
/// its qubits for the gate duration. RZ is noiseless. Only the hardware
/// native set is accepted (NonNativeGate); MissingCalibration if the model
/// covers fewer qubits than the circuit.
DensityMatrix run_density(const Circuit &c, const NoiseModel &nm);
DensityMatrix run_density(const Circuit &c, const NoiseModel &nm, const DensityMatrix &initial);

/// Thermal relaxation of every qubit for its readout duration. Applied by the
/// experiment runners just before noisy readout.
DensityMatrix apply_readout_relaxation(const DensityMatrix &rho, const NoiseModel &nm);

/// Per-qubit readout misclassification.
struct ReadoutConfusion {
    double p1_given0 = 0.0;
    double p0_given1 = 0.0;
};

std::vector<ReadoutConfusion> readout_confusion(const NoiseModel &nm, std::size_t num_qubits);

/// Measurement statistics. Bitstrings print the highest qubit first, so the
/// string read as a binary number is the basis index.
struct CountsMap {
    std::map<std::string, std::uint64_t> outcomes;
    std::uint64_t shots = 0;
    std::size_t num_qubits = 0;

    /// Relative frequencies indexed by basis index.
    Eigen::VectorXd frequencies() const;
    friend bool operator==(const CountsMap &, const CountsMap &) = default;
};

std::string bitstring(std::size_t index, std::size_t num_qubits);

/// Outcome distribution of measuring `setting` on the state, with optional
/// readout confusion folded in.
Eigen::VectorXd measurement_probabilities(const StateVector &psi, const PauliString &setting,
                                          const std::vector<ReadoutConfusion> &readout = {});
Eigen::VectorXd measurement_probabilities(const DensityMatrix &rho, const PauliString &setting,
                                          const std::vector<ReadoutConfusion> &readout = {});

/// Applies per-qubit confusion matrices [[1-P(1|0), P(0|1)], [P(1|0), 1-P(0|1)]].
Eigen::VectorXd apply_readout_confusion(const Eigen::VectorXd &probs,
                                        const std::vector<ReadoutConfusion> &readout);

/// Draws `shots` i.i.d. outcomes from `probs` with a generator seeded by `seed`.
CountsMap sample_distribution(const Eigen::VectorXd &probs, std::uint64_t shots,
                              std::uint64_t seed);

using QuantumState = std::variant<StateVector, DensityMatrix>;

/// Rotates into the setting's basis, applies readout confusion if given and
/// samples. Deterministic for a fixed seed.
CountsMap sample_counts(const QuantumState &state, const PauliString &setting,
                        std::uint64_t shots, std::uint64_t seed,
                        const std::optional<std::vector<ReadoutConfusion>> &readout = std::nullopt);

/// Stateless seed derivation: a splitmix64 hash of (master, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

}  // namespace ccx

#endif  // CCX_SIMULATOR_HPP
