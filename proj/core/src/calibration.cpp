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

#include "ccx/calibration.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ccx/error.hpp"

namespace ccx {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw schema_error("SchemaError", path + ": " + what);
}

const json &require(const json &obj, const char *name, const std::string &path) {
    if (!obj.contains(name)) fail(path + "." + name, "missing required field '" + std::string(name) + "'");
    return obj.at(name);
}

double number(const json &v, const std::string &path) {
    if (!v.is_number()) fail(path, "expected a number");
    const double d = v.get<double>();
    if (std::isnan(d)) fail(path, "expected a number");
    return d;
}

// Coherence times may be written as the string "inf".
double time_value(const json &v, const std::string &path) {
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "Infinity")) {
        return std::numeric_limits<double>::infinity();
    }
    return number(v, path);
}

double probability(const json &v, const std::string &path) {
    const double p = number(v, path);
    if (p < 0.0 || p > 1.0) fail(path, "probability outside [0, 1]");
    return p;
}

std::size_t index_value(const json &v, const std::string &path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

QubitCalibration parse_qubit(const json &q, const std::string &path, std::size_t position) {
    if (!q.is_object()) fail(path, "expected an object");
    QubitCalibration c;
    c.id = q.contains("id") ? index_value(q.at("id"), path + ".id") : position;
    c.t1_us = time_value(require(q, "t1_us", path), path + ".t1_us");
    c.t2_us = time_value(require(q, "t2_us", path), path + ".t2_us");
    if (!(c.t1_us > 0.0)) fail(path + ".t1_us", "must be positive");
    if (!(c.t2_us > 0.0)) fail(path + ".t2_us", "must be positive");
    c.frequency_ghz = number(require(q, "frequency_ghz", path), path + ".frequency_ghz");
    c.anharmonicity_ghz = number(require(q, "anharmonicity_ghz", path), path + ".anharmonicity_ghz");
    c.prob_meas0_prep1 = probability(require(q, "prob_meas0_prep1", path), path + ".prob_meas0_prep1");
    c.prob_meas1_prep0 = probability(require(q, "prob_meas1_prep0", path), path + ".prob_meas1_prep0");
    c.readout_error = probability(require(q, "readout_error", path), path + ".readout_error");
    c.readout_length_ns = number(require(q, "readout_length_ns", path), path + ".readout_length_ns");
    if (c.readout_length_ns < 0.0 || std::isinf(c.readout_length_ns)) {
        fail(path + ".readout_length_ns", "must be finite and non-negative");
    }
    c.validate();  // CoherenceViolation carries the qubit id
    return c;
}

GateCalibration parse_gate(const json &g, const std::string &path) {
    if (!g.is_object()) fail(path, "expected an object");
    GateCalibration out;
    const json &name = require(g, "name", path);
    if (!name.is_string()) fail(path + ".name", "expected a string");
    out.name = name.get<std::string>();
    std::transform(out.name.begin(), out.name.end(), out.name.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    const auto kind = gate_kind_from_name(out.name);
    if (!kind || !is_native(*kind)) fail(path + ".name", "'" + out.name + "' is not a native gate");
    if (g.contains("qubits")) {
        const json &qs = g.at("qubits");
        if (!qs.is_array()) fail(path + ".qubits", "expected an array");
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            v.push_back(index_value(qs[i], path + ".qubits[" + std::to_string(i) + "]"));
        }
        if (v.size() != gate_qubit_arity(*kind)) fail(path + ".qubits", "wrong qubit count for " + out.name);
        out.qubits = std::move(v);
    }
    out.error = number(require(g, "error", path), path + ".error");
    if (out.error < 0.0 || out.error >= 1.0) fail(path + ".error", "must lie in [0, 1)");
    if (g.contains("duration_ns")) {
        const double d = number(g.at("duration_ns"), path + ".duration_ns");
        if (d < 0.0 || std::isinf(d)) fail(path + ".duration_ns", "must be finite and non-negative");
        out.duration_ns = d;
    }
    if (*kind == GateKind::RZ && (out.error != 0.0 || out.duration_ns.value_or(0.0) != 0.0)) {
        fail(path, "RZ is virtual; error and duration must be 0");
    }
    return out;
}

double default_duration(const std::string &name) {
    return name == "ECR" ? kDefaultEcrDurationNs : name == "RZ" ? 0.0 : kDefaultSingleQubitDurationNs;
}

}  // namespace

NoiseModel Calibration::noise_model(std::size_t num_qubits) const {
    std::map<std::string, GateNoise> defaults;
    std::map<std::pair<std::string, std::vector<std::size_t>>, GateNoise> overrides;
    for (const auto &g : gates) {
        if (g.name == "RZ") continue;
        const GateNoise noise{g.error, g.duration_ns.value_or(default_duration(g.name))};
        if (g.qubits) overrides[{g.name, *g.qubits}] = noise;
        else defaults[g.name] = noise;
    }
    if (qubits.empty()) throw usage_error("MissingCalibration", "calibration lists no qubits");
    if (!is_summary() && qubits.size() < num_qubits) {
        throw usage_error("MissingCalibration", "calibration covers " + std::to_string(qubits.size()) +
                                                    " qubits, need " + std::to_string(num_qubits));
    }
    return NoiseModel(qubits, std::move(defaults), std::move(overrides)).resized(num_qubits);
}

Calibration parse_calibration(const std::string &json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        fail("$", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("$", "expected an object");
    Calibration cal;
    if (j.contains("device")) {
        if (!j.at("device").is_string()) fail("$.device", "expected a string");
        cal.device = j.at("device").get<std::string>();
    }
    const json &qs = require(j, "qubits", "$");
    if (!qs.is_array() || qs.empty()) fail("$.qubits", "expected a non-empty array");
    for (std::size_t i = 0; i < qs.size(); ++i) {
        cal.qubits.push_back(parse_qubit(qs[i], "$.qubits[" + std::to_string(i) + "]", i));
    }
    if (j.contains("gates")) {
        const json &gs = j.at("gates");
        if (!gs.is_array()) fail("$.gates", "expected an array");
        for (std::size_t i = 0; i < gs.size(); ++i) {
            cal.gates.push_back(parse_gate(gs[i], "$.gates[" + std::to_string(i) + "]"));
        }
    }
    return cal;
}

Calibration load_calibration(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open calibration file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_calibration(buf.str());
}

std::string calibration_to_json(const Calibration &cal) {
    nlohmann::ordered_json j;
    if (!cal.device.empty()) j["device"] = cal.device;
    auto time = [](double t) -> nlohmann::ordered_json {
        if (std::isinf(t)) return "inf";
        return t;
    };
    j["qubits"] = nlohmann::ordered_json::array();
    for (const auto &q : cal.qubits) {
        j["qubits"].push_back({{"id", q.id},
                               {"t1_us", time(q.t1_us)},
                               {"t2_us", time(q.t2_us)},
                               {"frequency_ghz", q.frequency_ghz},
                               {"anharmonicity_ghz", q.anharmonicity_ghz},
                               {"prob_meas0_prep1", q.prob_meas0_prep1},
                               {"prob_meas1_prep0", q.prob_meas1_prep0},
                               {"readout_error", q.readout_error},
                               {"readout_length_ns", q.readout_length_ns}});
    }
    j["gates"] = nlohmann::ordered_json::array();
    for (const auto &g : cal.gates) {
        nlohmann::ordered_json e;
        e["name"] = g.name;
        if (g.qubits) e["qubits"] = *g.qubits;
        e["error"] = g.error;
        if (g.duration_ns) e["duration_ns"] = *g.duration_ns;
        j["gates"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw usage_error("EmptyInput", "quantile of an empty list");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

ColumnSummary summarize(const std::string &column, const std::vector<double> &values) {
    if (values.empty()) throw usage_error("EmptyInput", "no values for column " + column);
    ColumnSummary s;
    s.column = column;
    s.count = values.size();
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / (n - 1.0));
    }
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    s.q25 = quantile(values, 0.25);
    s.q50 = quantile(values, 0.50);
    s.q75 = quantile(values, 0.75);
    return s;
}

std::vector<ColumnSummary> calibration_summary(const Calibration &cal) {
    using Getter = double (*)(const QubitCalibration &);
    const std::pair<const char *, Getter> columns[] = {
        {"t1_us", [](const QubitCalibration &q) { return q.t1_us; }},
        {"t2_us", [](const QubitCalibration &q) { return q.t2_us; }},
        {"frequency_ghz", [](const QubitCalibration &q) { return q.frequency_ghz; }},
        {"anharmonicity_ghz", [](const QubitCalibration &q) { return q.anharmonicity_ghz; }},
        {"prob_meas0_prep1", [](const QubitCalibration &q) { return q.prob_meas0_prep1; }},
        {"prob_meas1_prep0", [](const QubitCalibration &q) { return q.prob_meas1_prep0; }},
        {"readout_error", [](const QubitCalibration &q) { return q.readout_error; }},
        {"readout_length_ns", [](const QubitCalibration &q) { return q.readout_length_ns; }},
    };
    std::vector<ColumnSummary> out;
    for (const auto &[name, get] : columns) {
        std::vector<double> values;
        values.reserve(cal.qubits.size());
        for (const auto &q : cal.qubits) values.push_back(get(q));
        out.push_back(summarize(name, values));
    }
    return out;
}

}  // namespace ccx
