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

#include "ccx/noise_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccx/error.hpp"

namespace ccx {

namespace {

void check_probability(double p, const char *field, std::size_t id) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw schema_error("SchemaError", std::string(field) + " of qubit " + std::to_string(id) +
                                              " must lie in [0, 1]");
    }
}

double scale_rate_time(double t, double lambda) {
    if (lambda == 0.0 || std::isinf(t)) return std::numeric_limits<double>::infinity();
    return t / lambda;
}

}  // namespace

void QubitCalibration::validate() const {
    if (!(t1_us > 0.0) || !(t2_us > 0.0)) {
        throw schema_error("SchemaError",
                           "t1_us and t2_us of qubit " + std::to_string(id) + " must be positive");
    }
    if (!std::isinf(t2_us) && t2_us > 2.0 * t1_us * (1.0 + 1e-12)) {
        throw schema_error("CoherenceViolation",
                           "qubit " + std::to_string(id) + ": t2_us " + std::to_string(t2_us) +
                               " exceeds 2*t1_us " + std::to_string(2.0 * t1_us));
    }
    check_probability(prob_meas0_prep1, "prob_meas0_prep1", id);
    check_probability(prob_meas1_prep0, "prob_meas1_prep0", id);
    check_probability(readout_error, "readout_error", id);
    if (!(readout_length_ns >= 0.0) || !std::isfinite(readout_length_ns)) {
        throw schema_error("SchemaError", "readout_length_ns of qubit " + std::to_string(id) +
                                              " must be finite and non-negative");
    }
}

NoiseModel::NoiseModel(
    std::vector<QubitCalibration> qubits, std::map<std::string, GateNoise> gate_defaults,
    std::map<std::pair<std::string, std::vector<std::size_t>>, GateNoise> gate_overrides)
    : qubits_(std::move(qubits)),
      defaults_(std::move(gate_defaults)),
      overrides_(std::move(gate_overrides)) {
    for (const auto &q : qubits_) q.validate();
    auto check = [](const std::string &name, const GateNoise &g) {
        if (!(g.error >= 0.0 && g.error < 1.0)) {
            throw schema_error("SchemaError", "error of gate " + name + " must lie in [0, 1)");
        }
        if (!(g.duration_ns >= 0.0) || !std::isfinite(g.duration_ns)) {
            throw schema_error("SchemaError",
                               "duration_ns of gate " + name + " must be finite and non-negative");
        }
    };
    for (const auto &[name, g] : defaults_) check(name, g);
    for (const auto &[key, g] : overrides_) check(key.first, g);
}

NoiseModel NoiseModel::noiseless(std::size_t num_qubits) {
    std::vector<QubitCalibration> qs(num_qubits);
    for (std::size_t i = 0; i < num_qubits; ++i) qs[i].id = i;
    std::map<std::string, GateNoise> defaults;
    for (const char *name : {"ECR", "SX", "X", "ID"}) defaults[name] = GateNoise{0.0, 0.0};
    NoiseModel nm(std::move(qs), std::move(defaults));
    nm.readout_enabled_ = false;
    return nm;
}

const QubitCalibration &NoiseModel::qubit(std::size_t q) const {
    if (q >= qubits_.size()) {
        throw usage_error("MissingCalibration",
                          "no calibration for qubit " + std::to_string(q));
    }
    return qubits_[q];
}

GateNoise NoiseModel::gate_noise(const Gate &g) const {
    if (g.kind() == GateKind::RZ) return {};
    const std::string name(g.name());
    if (auto it = overrides_.find({name, g.qubits()}); it != overrides_.end()) return it->second;
    GateNoise out;
    if (auto it = defaults_.find(name); it != defaults_.end()) {
        out = it->second;
    } else {
        out.duration_ns = g.arity() == 2 ? kDefaultEcrDurationNs : kDefaultSingleQubitDurationNs;
    }
    return out;
}

NoiseModel NoiseModel::scaled(double lambda) const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw usage_error("InvalidScale", "noise scale must be finite and non-negative");
    }
    NoiseModel out = *this;
    for (auto &q : out.qubits_) {
        q.t1_us = scale_rate_time(q.t1_us, lambda);
        q.t2_us = scale_rate_time(q.t2_us, lambda);
        q.prob_meas0_prep1 = std::min(1.0, q.prob_meas0_prep1 * lambda);
        q.prob_meas1_prep0 = std::min(1.0, q.prob_meas1_prep0 * lambda);
        q.readout_error = std::min(1.0, q.readout_error * lambda);
    }
    for (auto &[name, g] : out.defaults_) g.error *= lambda;
    for (auto &[key, g] : out.overrides_) g.error *= lambda;
    return out;
}

NoiseModel NoiseModel::resized(std::size_t num_qubits) const {
    if (qubits_.empty()) {
        throw usage_error("MissingCalibration", "noise model has no qubit calibration");
    }
    NoiseModel out = *this;
    out.qubits_.clear();
    for (std::size_t i = 0; i < num_qubits; ++i) {
        QubitCalibration q = qubits_.size() == 1 ? qubits_.front() : qubit(i);
        q.id = i;
        out.qubits_.push_back(q);
    }
    return out;
}

}  // namespace ccx
