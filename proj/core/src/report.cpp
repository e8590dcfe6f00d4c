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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ccx/error.hpp"
#include "ccx/experiment.hpp"

namespace ccx {

namespace {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

constexpr const char *kSchema = "ccxlab.report/1";

ojson optional_number(const std::optional<double> &v) {
    return v ? ojson(*v) : ojson(nullptr);
}

ojson config_json(const ExperimentConfig &c, std::string_view experiment) {
    ojson j;
    j["mode"] = noise_mode_name(c.mode);
    if (experiment == "qst") j["input_state"] = input_state_name(c.input_state);
    j["strategy"] = strategy_name(c.strategy);
    j["shots_per_setting"] = c.shots_per_setting;
    j["master_seed"] = c.master_seed;
    j["calibration_path"] = c.calibration_path ? ojson(*c.calibration_path) : ojson(nullptr);
    j["repeats"] = c.repeats;
    j["exact_probabilities"] = c.exact_probabilities;
    j["readout_error"] = c.readout_error;
    j["noise_scale"] = c.noise_scale;
    if (experiment == "qpt") {
        j["target"] = process_target_name(c.target);
        j["k"] = c.k;
        j["accept_full_budget"] = c.accept_full_budget;
        j["dry_run"] = c.dry_run;
    }
    return j;
}

std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---- reading

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw schema_error("SchemaError", path + ": " + what);
}

const json &at(const json &obj, const char *name, const std::string &path) {
    if (!obj.is_object() || !obj.contains(name)) fail(path + "." + name, "missing field");
    return obj.at(name);
}

double get_double(const json &obj, const char *name, const std::string &path) {
    const json &v = at(obj, name, path);
    if (!v.is_number()) fail(path + "." + name, "expected a number");
    return v.get<double>();
}

std::optional<double> get_optional_double(const json &obj, const char *name, const std::string &path) {
    if (!obj.contains(name) || obj.at(name).is_null()) return std::nullopt;
    return get_double(obj, name, path);
}

std::uint64_t get_count(const json &obj, const char *name, const std::string &path) {
    const json &v = at(obj, name, path);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        fail(path + "." + name, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string get_string(const json &obj, const char *name, const std::string &path) {
    const json &v = at(obj, name, path);
    if (!v.is_string()) fail(path + "." + name, "expected a string");
    return v.get<std::string>();
}

bool get_bool(const json &obj, const char *name, const std::string &path) {
    const json &v = at(obj, name, path);
    if (!v.is_boolean()) fail(path + "." + name, "expected a boolean");
    return v.get<bool>();
}

template <class T, class Parse>
T get_enum(const json &obj, const char *name, const std::string &path, Parse parse) {
    const std::string s = get_string(obj, name, path);
    const auto v = parse(s);
    if (!v) fail(path + "." + name, "unknown value '" + s + "'");
    return *v;
}

}  // namespace

std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept {
    if (name == "json" || name == "JSON") return ReportFormat::Json;
    if (name == "csv" || name == "CSV") return ReportFormat::Csv;
    return std::nullopt;
}

std::string report_to_json(const Report &r) {
    ojson j;
    j["schema"] = kSchema;
    j["tool"] = {{"name", "ccxlab"}, {"version", r.tool_version}};
    j["experiment"] = r.experiment;
    j["config"] = config_json(r.config, r.experiment);
    j["circuit"] = {{"two_qubit_gates", r.circuit.two_qubit_gates},
                    {"single_qubit_gates", r.circuit.single_qubit_gates},
                    {"total_gates", r.circuit.total_gates},
                    {"depth", r.circuit.depth}};
    j["jobs"] = {{"circuits_per_repeat", r.circuits_per_repeat},
                 {"measurements_per_repeat", r.measurements_per_repeat}};
    ojson reps = ojson::array();
    for (const auto &rep : r.repeats) {
        ojson e;
        e["repeat"] = rep.repeat;
        e["seed"] = rep.seed;
        e["fidelity"] = rep.fidelity;
        if (r.experiment == "qpt") {
            e["average_gate_fidelity"] = optional_number(rep.average_gate_fidelity);
            e["tp_deviation"] = optional_number(rep.tp_deviation);
        }
        reps.push_back(std::move(e));
    }
    j["repeats"] = std::move(reps);
    ojson summary;
    summary["count"] = r.repeats.size();
    summary["mean"] = r.mean;
    summary["std"] = r.std;
    if (r.experiment == "qpt") {
        summary["mean_average_gate_fidelity"] = optional_number(r.mean_average_gate_fidelity);
    }
    j["summary"] = std::move(summary);
    if (r.reference) {
        j["reference"] = {{"noise_free", r.reference->noise_free},
                          {"noise_aware", r.reference->noise_aware},
                          {"hardware", optional_number(r.reference->hardware)}};
    } else {
        j["reference"] = nullptr;
    }
    j["run_info"] = {{"timestamp", r.timestamp}, {"wall_clock_seconds", r.wall_clock_seconds}};
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Report &r) {
    std::ostringstream out;
    out << "experiment,mode,strategy,input_state,shots_per_setting,repeat,seed,fidelity,"
           "average_gate_fidelity,tp_deviation\n";
    for (const auto &rep : r.repeats) {
        out << r.experiment << ',' << noise_mode_name(r.config.mode) << ','
            << strategy_name(r.config.strategy) << ','
            << (r.experiment == "qst" ? std::string(input_state_name(r.config.input_state))
                                      : std::string(process_target_name(r.config.target)))
            << ',' << r.config.shots_per_setting << ',' << rep.repeat << ',' << rep.seed << ','
            << csv_number(rep.fidelity) << ','
            << (rep.average_gate_fidelity ? csv_number(*rep.average_gate_fidelity) : "") << ','
            << (rep.tp_deviation ? csv_number(*rep.tp_deviation) : "") << '\n';
    }
    return out.str();
}

Report report_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        fail("$", std::string("invalid JSON: ") + e.what());
    }
    if (get_string(j, "schema", "$") != kSchema) fail("$.schema", "unsupported report schema");
    Report r;
    r.experiment = get_string(j, "experiment", "$");
    if (r.experiment != "qst" && r.experiment != "qpt") fail("$.experiment", "expected qst or qpt");
    r.tool_version = get_string(at(j, "tool", "$"), "version", "$.tool");

    const json &c = at(j, "config", "$");
    const std::string cp = "$.config";
    ExperimentConfig &cfg = r.config;
    cfg.mode = get_enum<NoiseMode>(c, "mode", cp, noise_mode_from_name);
    if (r.experiment == "qst") {
        cfg.input_state = get_enum<InputState>(c, "input_state", cp, input_state_from_name);
    }
    cfg.strategy = get_enum<Strategy>(c, "strategy", cp, strategy_from_name);
    cfg.shots_per_setting = get_count(c, "shots_per_setting", cp);
    cfg.master_seed = get_count(c, "master_seed", cp);
    const json &calib = at(c, "calibration_path", cp);
    if (!calib.is_null()) cfg.calibration_path = get_string(c, "calibration_path", cp);
    cfg.repeats = get_count(c, "repeats", cp);
    cfg.exact_probabilities = get_bool(c, "exact_probabilities", cp);
    cfg.readout_error = get_bool(c, "readout_error", cp);
    cfg.noise_scale = get_double(c, "noise_scale", cp);
    if (r.experiment == "qpt") {
        cfg.target = get_enum<ProcessTarget>(c, "target", cp, process_target_from_name);
        cfg.k = get_count(c, "k", cp);
        cfg.accept_full_budget = get_bool(c, "accept_full_budget", cp);
        cfg.dry_run = get_bool(c, "dry_run", cp);
    }

    const json &circ = at(j, "circuit", "$");
    r.circuit.two_qubit_gates = get_count(circ, "two_qubit_gates", "$.circuit");
    r.circuit.single_qubit_gates = get_count(circ, "single_qubit_gates", "$.circuit");
    r.circuit.total_gates = get_count(circ, "total_gates", "$.circuit");
    r.circuit.depth = get_count(circ, "depth", "$.circuit");

    const json &jobs = at(j, "jobs", "$");
    r.circuits_per_repeat = get_count(jobs, "circuits_per_repeat", "$.jobs");
    r.measurements_per_repeat = get_count(jobs, "measurements_per_repeat", "$.jobs");

    const json &reps = at(j, "repeats", "$");
    if (!reps.is_array()) fail("$.repeats", "expected an array");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const std::string p = "$.repeats[" + std::to_string(i) + "]";
        RepeatResult rep;
        rep.repeat = get_count(reps[i], "repeat", p);
        rep.seed = get_count(reps[i], "seed", p);
        rep.fidelity = get_double(reps[i], "fidelity", p);
        if (rep.fidelity < 0.0 || rep.fidelity > 1.0) fail(p + ".fidelity", "outside [0, 1]");
        rep.average_gate_fidelity = get_optional_double(reps[i], "average_gate_fidelity", p);
        rep.tp_deviation = get_optional_double(reps[i], "tp_deviation", p);
        r.repeats.push_back(rep);
    }

    const json &summary = at(j, "summary", "$");
    r.mean = get_double(summary, "mean", "$.summary");
    r.std = get_double(summary, "std", "$.summary");
    r.mean_average_gate_fidelity =
        get_optional_double(summary, "mean_average_gate_fidelity", "$.summary");

    const json &ref = at(j, "reference", "$");
    if (!ref.is_null()) {
        r.reference = ReferenceValues{get_double(ref, "noise_free", "$.reference"),
                                      get_double(ref, "noise_aware", "$.reference"),
                                      get_optional_double(ref, "hardware", "$.reference")};
    }
    if (j.contains("run_info")) {
        const json &info = j.at("run_info");
        if (info.contains("timestamp") && info.at("timestamp").is_string()) {
            r.timestamp = info.at("timestamp").get<std::string>();
        }
        if (info.contains("wall_clock_seconds") && info.at("wall_clock_seconds").is_number()) {
            r.wall_clock_seconds = info.at("wall_clock_seconds").get<double>();
        }
    }
    return r;
}

void emit_report(const Report &r, ReportFormat format, const std::string &path) {
    const std::string body = format == ReportFormat::Json ? report_to_json(r) : report_to_csv(r);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << body;
    out.flush();
    if (!out) throw io_error("failed writing " + path);
}

}  // namespace ccx
