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

#ifndef CCX_CALIBRATION_HPP
#define CCX_CALIBRATION_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ccx/noise_model.hpp"

namespace ccx {

struct GateCalibration {
    std::string name;                                // upper-case native gate name
    std::optional<std::vector<std::size_t>> qubits;  // absent: applies to every instance
    double error = 0.0;
    std::optional<double> duration_ns;

    friend bool operator==(const GateCalibration &, const GateCalibration &) = default;
};

/// Parsed calibration file. `qubits` holds either one record per physical
/// qubit or a single summary record that is broadcast.
struct Calibration {
    std::string device;
    std::vector<QubitCalibration> qubits;
    std::vector<GateCalibration> gates;

    bool is_summary() const noexcept { return qubits.size() == 1; }

    /// Noise model for a `num_qubits`-wide register. Gates without a
    /// duration fall back to the built-in defaults.
    NoiseModel noise_model(std::size_t num_qubits) const;
};

/// Parses and validates calibration JSON. SchemaError messages start with the
/// JSON path of the offending value; t2 > 2 t1 raises CoherenceViolation.
Calibration parse_calibration(const std::string &json_text);
Calibration load_calibration(const std::filesystem::path &path);
std::string calibration_to_json(const Calibration &cal);

struct ColumnSummary {
    std::string column;
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation, 0 for a single value
    double min = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

/// Linear-interpolated quantiles of `values` (which need not be sorted).
double quantile(std::vector<double> values, double q);

ColumnSummary summarize(const std::string &column, const std::vector<double> &values);

/// Per-column statistics over the qubit records, in file column order.
std::vector<ColumnSummary> calibration_summary(const Calibration &cal);

}  // namespace ccx

#endif  // CCX_CALIBRATION_HPP
