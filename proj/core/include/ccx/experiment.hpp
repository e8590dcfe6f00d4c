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

#ifndef CCX_EXPERIMENT_HPP
#define CCX_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccx/noise_model.hpp"
#include "ccx/simulator.hpp"
#include "ccx/synthesis.hpp"

namespace ccx {

enum class NoiseMode { NoiseFree, NoiseAware };
enum class ProcessTarget { Toffoli, Identity };

std::string_view noise_mode_name(NoiseMode m) noexcept;  // "noise_free", "noise_aware"
std::optional<NoiseMode> noise_mode_from_name(std::string_view name) noexcept;
std::string_view process_target_name(ProcessTarget t) noexcept;  // "toffoli", "identity"
std::optional<ProcessTarget> process_target_from_name(std::string_view name) noexcept;

struct ExperimentConfig {
    NoiseMode mode = NoiseMode::NoiseFree;
    InputState input_state = InputState::Ghz;
    Strategy strategy = Strategy::EcrNative;
    std::uint64_t shots_per_setting = 19000;
    std::uint64_t master_seed = 42;
    std::optional<std::string> calibration_path;
    std::size_t repeats = 20;
    bool exact_probabilities = false;
    bool readout_error = true;
    double noise_scale = 1.0;

    // process tomography only
    ProcessTarget target = ProcessTarget::Toffoli;
    std::size_t k = 3;
    bool accept_full_budget = false;
    bool dry_run = false;

    /// Worker count for sampling and reconstruction; 0 = all hardware
    /// threads. Results do not depend on it.
    std::size_t threads = 1;
    /// Resolved device model. Required in noise-aware mode; not echoed.
    std::optional<NoiseModel> noise;

    /// Throws InvalidConfig for inconsistent settings.
    void validate() const;

    /// Compares the echoed fields only.
    friend bool operator==(const ExperimentConfig &a, const ExperimentConfig &b);
};

struct CircuitStats {
    std::size_t two_qubit_gates = 0;
    std::size_t single_qubit_gates = 0;
    std::size_t total_gates = 0;
    std::size_t depth = 0;

    static CircuitStats of(const Circuit &c);
    friend bool operator==(const CircuitStats &, const CircuitStats &) = default;
};

struct RepeatResult {
    std::size_t repeat = 0;
    std::uint64_t seed = 0;
    /// State fidelity (QST) or process fidelity (QPT).
    double fidelity = 0.0;
    std::optional<double> average_gate_fidelity;
    std::optional<double> tp_deviation;

    friend bool operator==(const RepeatResult &, const RepeatResult &) = default;
};

/// Published fidelities for the matching configuration, for side-by-side
/// display only.
struct ReferenceValues {
    double noise_free = 0.0;
    double noise_aware = 0.0;
    std::optional<double> hardware;

    friend bool operator==(const ReferenceValues &, const ReferenceValues &) = default;
};

std::optional<ReferenceValues> reference_values(std::string_view experiment, InputState s);

struct Report {
    std::string experiment;  // "qst" or "qpt"
    std::string tool_version;
    ExperimentConfig config;
    CircuitStats circuit;
    std::size_t circuits_per_repeat = 0;
    std::uint64_t measurements_per_repeat = 0;
    std::vector<RepeatResult> repeats;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation of the repeat fidelities
    std::optional<double> mean_average_gate_fidelity;
    std::optional<ReferenceValues> reference;

    // volatile; excluded from equality and determinism checks
    std::string timestamp;
    double wall_clock_seconds = 0.0;

    std::vector<double> fidelities() const;
    friend bool operator==(const Report &a, const Report &b);
};

std::string_view tool_version() noexcept;

/// Prepare input, apply the chosen Toffoli circuit, measure all 27 Pauli
/// settings, reconstruct and compare with the analytic Toffoli output.
Report run_qst_experiment(const ExperimentConfig &cfg);

/// 12^k probe/setting circuits per repeat, Choi reconstruction, process and
/// average gate fidelity against the ideal target. k = 3 needs
/// `accept_full_budget` unless `dry_run` only books the job counts.
Report run_qpt_experiment(const ExperimentConfig &cfg);

/// Executable version of the strategy's circuit: lowered to the native set
/// in noise-aware mode, as synthesized otherwise.
Circuit experiment_circuit(const ExperimentConfig &cfg);

enum class ReportFormat { Json, Csv };
std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept;

std::string report_to_json(const Report &r);
std::string report_to_csv(const Report &r);
/// Throws SchemaError with a JSON path.
Report report_from_json(const std::string &text);
/// Writes the report; throws IoError.
void emit_report(const Report &r, ReportFormat format, const std::string &path);

}  // namespace ccx

#endif  // CCX_EXPERIMENT_HPP
