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

#ifndef CCX_NOISE_MODEL_HPP
#define CCX_NOISE_MODEL_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccx/circuit.hpp"

namespace ccx {

/// Per-qubit calibration record. Times in us (coherence) and ns (readout),
/// frequencies in GHz.
struct QubitCalibration {
    std::size_t id = 0;
    double t1_us = std::numeric_limits<double>::infinity();
    double t2_us = std::numeric_limits<double>::infinity();
    double frequency_ghz = 0.0;
    double anharmonicity_ghz = 0.0;
    double prob_meas0_prep1 = 0.0;  // P(0|1)
    double prob_meas1_prep0 = 0.0;  // P(1|0)
    double readout_error = 0.0;
    double readout_length_ns = 0.0;

    /// Throws CoherenceViolation (t2 > 2 t1) or SchemaError for bad probabilities.
    void validate() const;

    friend bool operator==(const QubitCalibration &, const QubitCalibration &) = default;
};

struct GateNoise {
    double error = 0.0;        // average gate infidelity
    double duration_ns = 0.0;

    friend bool operator==(const GateNoise &, const GateNoise &) = default;
};

/// Default gate durations used when a calibration omits them.
inline constexpr double kDefaultEcrDurationNs = 533.0;
inline constexpr double kDefaultSingleQubitDurationNs = 57.0;

/// Device noise description consumed by the density-matrix simulator.
/// RZ is virtual: zero duration and zero error regardless of the table.
class NoiseModel {
  public:
    NoiseModel() = default;
    NoiseModel(std::vector<QubitCalibration> qubits, std::map<std::string, GateNoise> gate_defaults,
               std::map<std::pair<std::string, std::vector<std::size_t>>, GateNoise> gate_overrides =
                   {});

    /// All errors zero, infinite coherence, perfect readout.
    static NoiseModel noiseless(std::size_t num_qubits);

    std::size_t num_qubits() const noexcept { return qubits_.size(); }
    const std::vector<QubitCalibration> &qubits() const noexcept { return qubits_; }
    const QubitCalibration &qubit(std::size_t q) const;
    const std::map<std::string, GateNoise> &gate_defaults() const noexcept { return defaults_; }
    const std::map<std::pair<std::string, std::vector<std::size_t>>, GateNoise> &gate_overrides()
        const noexcept {
        return overrides_;
    }

    /// Error and duration for a concrete gate application: a per-qubit entry
    /// wins over the per-name default, which wins over the built-in durations.
    GateNoise gate_noise(const Gate &g) const;

    bool readout_enabled() const noexcept { return readout_enabled_; }
    void set_readout_enabled(bool on) noexcept { readout_enabled_ = on; }
    bool rz_is_virtual() const noexcept { return true; }

    /// Multiplies every error probability and every relaxation rate
    /// (1/T1, 1/T2) by `lambda` >= 0.
    NoiseModel scaled(double lambda) const;

    /// Same device, broadcast or truncated to `num_qubits` qubits. A single
    /// calibration entry is copied to every qubit.
    NoiseModel resized(std::size_t num_qubits) const;

  private:
    std::vector<QubitCalibration> qubits_;
    std::map<std::string, GateNoise> defaults_;
    std::map<std::pair<std::string, std::vector<std::size_t>>, GateNoise> overrides_;
    bool readout_enabled_ = true;
};

}  // namespace ccx

#endif  // CCX_NOISE_MODEL_HPP
