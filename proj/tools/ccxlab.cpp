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

// ccxlab: Toffoli synthesis, simulation and tomography from the command line.
//
// Exit codes: 0 success, 2 usage, 3 schema or I/O, 4 numerical. Failures
// print one JSON object {"error": {"category", "code", "message"}} on stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccx/calibration.hpp"
#include "ccx/error.hpp"
#include "ccx/experiment.hpp"
#include "ccx/simulator.hpp"
#include "ccx/synthesis.hpp"
#include "ccx/tomography.hpp"

namespace {

using ojson = nlohmann::ordered_json;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

int exit_code(ccx::ErrorCategory c) {
    switch (c) {
        case ccx::ErrorCategory::Usage: return 2;
        case ccx::ErrorCategory::Schema: return 3;
        case ccx::ErrorCategory::Io: return 3;
        case ccx::ErrorCategory::Numerical: return 4;
    }
    return 1;
}

int report_error(std::string_view category, std::string_view code, std::string_view message,
                 int status) {
    ojson j;
    j["error"] = {{"category", category}, {"code", code}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return status;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ccx::io_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &body, const std::string &out) {
    if (out.empty() || out == "-") {
        std::cout << body;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ccx::io_error("cannot open " + out + " for writing");
    f << body;
    if (!f.flush()) throw ccx::io_error("failed writing " + out);
}

ccx::Strategy parse_strategy(const std::string &s) {
    auto v = ccx::strategy_from_name(s);
    if (!v) throw ccx::usage_error("InvalidStrategy", "unknown strategy '" + s + "'");
    return *v;
}

ccx::InputState parse_state(const std::string &s) {
    auto v = ccx::input_state_from_name(s);
    if (!v) throw ccx::usage_error("InvalidState", "unknown input state '" + s + "'");
    return *v;
}

ccx::ReportFormat parse_format(const std::string &s) {
    auto v = ccx::report_format_from_name(s);
    if (!v) throw ccx::usage_error("InvalidFormat", "unknown format '" + s + "'");
    return *v;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// ---- shared experiment flags

struct ExperimentFlags {
    std::string strategy = "ecr";
    std::string state = "GHZ";
    std::uint64_t shots = 0;
    std::uint64_t seed = 42;
    std::string noise;
    bool exact = false;
    bool no_readout = false;
    std::size_t repeats = 20;
    double noise_scale = 1.0;
    std::size_t threads = 1;
    std::string out;
    std::string format = "json";
};

void add_experiment_flags(CLI::App *cmd, ExperimentFlags &f) {
    cmd->add_option("--strategy", f.strategy, "full6 | lnn8 | lnn9 | ecr")->capture_default_str();
    cmd->add_option("--shots", f.shots, "shots per measurement setting");
    cmd->add_option("--seed", f.seed, "master seed")->capture_default_str();
    cmd->add_option("--noise", f.noise, "calibration JSON; enables noise-aware emulation");
    cmd->add_flag("--exact-probabilities", f.exact, "use exact outcome distributions");
    cmd->add_flag("--no-readout-error", f.no_readout, "disable readout confusion");
    cmd->add_option("--repeats", f.repeats, "independent repeats")->capture_default_str();
    cmd->add_option("--noise-scale", f.noise_scale, "multiply error rates and 1/T1, 1/T2")
        ->capture_default_str();
    cmd->add_option("--threads", f.threads, "worker threads, 0 = all cores")->capture_default_str();
    cmd->add_option("--out", f.out, "output file (default stdout)");
    cmd->add_option("--format", f.format, "json | csv")->capture_default_str();
}

ccx::ExperimentConfig make_config(const ExperimentFlags &f, std::uint64_t default_shots) {
    ccx::ExperimentConfig cfg;
    cfg.strategy = parse_strategy(f.strategy);
    cfg.input_state = parse_state(f.state);
    cfg.shots_per_setting = f.shots ? f.shots : default_shots;
    cfg.master_seed = f.seed;
    cfg.repeats = f.repeats;
    cfg.exact_probabilities = f.exact;
    cfg.readout_error = !f.no_readout;
    cfg.noise_scale = f.noise_scale;
    cfg.threads = f.threads;
    if (!f.noise.empty()) {
        cfg.mode = ccx::NoiseMode::NoiseAware;
        cfg.calibration_path = f.noise;
        cfg.noise = ccx::load_calibration(f.noise).noise_model(3);
    }
    return cfg;
}

void emit(const ccx::Report &r, const ExperimentFlags &f) {
    const auto format = parse_format(f.format);
    write_output(format == ccx::ReportFormat::Json ? ccx::report_to_json(r) : ccx::report_to_csv(r),
                 f.out);
}

// ---- subcommands

int run_synth(const std::string &strategy, const std::string &format, const std::string &out) {
    const ccx::Strategy s = parse_strategy(strategy);
    const ccx::ToffoliRoles roles;
    const ccx::Circuit c = ccx::decompose_toffoli(s, roles);
    const auto cert = ccx::certify_toffoli(c, roles);
    const auto violations = ccx::validate_connectivity(c, ccx::CouplingGraph::line(3));
    if (format == "json") {
        ojson j;
        j["strategy"] = ccx::strategy_name(s);
        j["controls"] = {roles.control0, roles.control1};
        j["target"] = roles.target;
        j["equivalent"] = cert.equivalent;
        j["max_abs_error"] = cert.max_abs_error;
        j["phase"] = {cert.phase.real(), cert.phase.imag()};
        j["two_qubit_gates"] = cert.gate_count_2q;
        j["cnot_count"] = c.count(ccx::GateKind::CNOT);
        j["ecr_count"] = c.count(ccx::GateKind::ECR);
        j["single_qubit_gates"] = c.single_qubit_count();
        j["depth"] = cert.depth;
        j["line_violations"] = violations.size();
        j["circuit"] = ccx::serialize_circuit(c);
        write_output(j.dump(2) + "\n", out);
    } else if (format == "text") {
        std::string body = "# strategy " + std::string(ccx::strategy_name(s)) + ": " +
                           std::to_string(cert.gate_count_2q) + " two-qubit gates, depth " +
                           std::to_string(cert.depth) + ", " +
                           (cert.equivalent ? "equivalent" : "NOT equivalent") +
                           " to CCX up to phase (max error " + sci(cert.max_abs_error) +
                           "), " + std::to_string(violations.size()) +
                           " violations on the line 0-1-2\n";
        body += ccx::serialize_circuit(c);
        write_output(body, out);
    } else {
        throw ccx::usage_error("InvalidFormat", "synth supports text or json");
    }
    if (!cert.equivalent) {
        throw ccx::numerical_error("NotEquivalent", "synthesized circuit is not a Toffoli");
    }
    return 0;
}

int run_simulate(const std::string &circuit_path, const ExperimentFlags &f,
                 const std::string &setting_label) {
    ccx::Circuit c(3);
    if (!circuit_path.empty()) {
        c = ccx::parse_circuit(read_file(circuit_path));
    } else {
        c = ccx::prepare_state(ccx::StatePrep::of(parse_state(f.state))) +
            ccx::decompose_toffoli(parse_strategy(f.strategy));
    }
    const std::size_t n = c.num_qubits();
    const ccx::PauliString setting(setting_label.empty() ? std::string(n, 'Z') : setting_label);
    Eigen::VectorXd probs;
    ojson j;
    j["num_qubits"] = n;
    j["setting"] = setting.label();
    if (f.noise.empty()) {
        const ccx::StateVector psi = ccx::run_statevector(c);
        probs = ccx::measurement_probabilities(psi, setting);
        j["mode"] = "noise_free";
        ojson amps = ojson::object();
        for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
            const auto a = psi[i];
            if (std::abs(a) > 1e-12) {
                amps[ccx::bitstring(static_cast<std::size_t>(i), n)] = {a.real(), a.imag()};
            }
        }
        j["amplitudes"] = std::move(amps);
    } else {
        ccx::NoiseModel nm = ccx::load_calibration(f.noise).noise_model(n).scaled(f.noise_scale);
        nm.set_readout_enabled(!f.no_readout);
        if (!std::all_of(c.gates().begin(), c.gates().end(),
                         [](const ccx::Gate &g) { return ccx::is_native(g.kind()); })) {
            c = ccx::lower_to_native(c);
        }
        c.append(ccx::measurement_rotation(setting));
        const auto rho = ccx::apply_readout_relaxation(ccx::run_density(c, nm), nm);
        probs = ccx::measurement_probabilities(rho, ccx::PauliString(std::string(n, 'Z')),
                                               ccx::readout_confusion(nm, n));
        j["mode"] = "noise_aware";
        j["purity"] = rho.purity();
    }
    ojson p = ojson::object();
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        if (probs(i) > 0.0) p[ccx::bitstring(static_cast<std::size_t>(i), n)] = probs(i);
    }
    j["probabilities"] = std::move(p);
    if (!f.exact && f.shots > 0) {
        const auto counts = ccx::sample_distribution(probs, f.shots, f.seed);
        j["shots"] = counts.shots;
        j["seed"] = f.seed;
        j["counts"] = counts.outcomes;
    }
    write_output(j.dump(2) + "\n", f.out);
    return 0;
}

int run_calib_summary(const std::string &path, const std::string &format, const std::string &out) {
    const ccx::Calibration cal = ccx::load_calibration(path);
    const auto rows = ccx::calibration_summary(cal);
    if (format == "json") {
        ojson j;
        j["device"] = cal.device;
        j["qubits"] = cal.qubits.size();
        j["summary_only"] = cal.is_summary();
        ojson cols = ojson::array();
        for (const auto &r : rows) {
            cols.push_back({{"column", r.column}, {"count", r.count}, {"mean", r.mean},
                            {"std", r.std}, {"min", r.min}, {"25%", r.q25}, {"50%", r.q50},
                            {"75%", r.q75}, {"max", r.max}});
        }
        j["columns"] = std::move(cols);
        write_output(j.dump(2) + "\n", out);
    } else if (format == "text" || format == "csv") {
        const char sep = format == "csv" ? ',' : '\t';
        std::string body = std::string("column") + sep + "count" + sep + "mean" + sep + "std" +
                           sep + "min" + sep + "25%" + sep + "50%" + sep + "75%" + sep + "max\n";
        for (const auto &r : rows) {
            body += r.column + sep + std::to_string(r.count);
            for (double v : {r.mean, r.std, r.min, r.q25, r.q50, r.q75, r.max}) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6g", v);
                body += sep;
                body += buf;
            }
            body += '\n';
        }
        write_output(body, out);
    } else {
        throw ccx::usage_error("InvalidFormat", "calib-summary supports json, csv or text");
    }
    return 0;
}

int run_report(const std::string &path, const std::string &format, const std::string &out) {
    const ccx::Report r = ccx::report_from_json(read_file(path));
    if (format == "text") {
        std::string body = r.experiment + " " + std::string(ccx::noise_mode_name(r.config.mode)) +
                           " strategy=" + std::string(ccx::strategy_name(r.config.strategy));
        if (r.experiment == "qst") {
            body += " state=" + std::string(ccx::input_state_name(r.config.input_state));
        }
        body += " shots=" + std::to_string(r.config.shots_per_setting) + "\n";
        body += "repeats " + std::to_string(r.repeats.size()) + "  mean " + format_double(r.mean) +
                "  std " + format_double(r.std) + "\n";
        if (r.mean_average_gate_fidelity) {
            body += "average gate fidelity " + format_double(*r.mean_average_gate_fidelity) + "\n";
        }
        body += "circuits/repeat " + std::to_string(r.circuits_per_repeat) + "  measurements/repeat " +
                std::to_string(r.measurements_per_repeat) + "\n";
        if (r.reference) {
            body += "reference noise_free " + format_double(r.reference->noise_free) +
                    "  noise_aware " + format_double(r.reference->noise_aware);
            if (r.reference->hardware) body += "  hardware " + format_double(*r.reference->hardware);
            body += "\n";
        }
        write_output(body, out);
    } else {
        write_output(parse_format(format) == ccx::ReportFormat::Json ? ccx::report_to_json(r)
                                                                      : ccx::report_to_csv(r),
                     out);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Toffoli synthesis, simulation and tomography"};
    app.set_version_flag("--version", std::string(ccx::tool_version()));
    app.require_subcommand(1);

    std::string synth_strategy = "ecr", synth_format = "text", synth_out;
    auto *synth = app.add_subcommand("synth", "decompose CCX and certify the result");
    synth->add_option("--strategy", synth_strategy, "full6 | lnn8 | lnn9 | ecr")->capture_default_str();
    synth->add_option("--format", synth_format, "text | json")->capture_default_str();
    synth->add_option("--out", synth_out, "output file (default stdout)");

    ExperimentFlags sim_flags;
    std::string sim_circuit, sim_setting;
    auto *simulate = app.add_subcommand("simulate", "simulate state preparation plus Toffoli");
    add_experiment_flags(simulate, sim_flags);
    simulate->add_option("--state", sim_flags.state, "GHZ | W | UNIFORM")->capture_default_str();
    simulate->add_option("--circuit", sim_circuit, "circuit text file instead of --state/--strategy");
    simulate->add_option("--setting", sim_setting, "Pauli measurement setting, e.g. XYZ");

    ExperimentFlags qst_flags;
    auto *qst = app.add_subcommand("qst", "state tomography of the Toffoli output");
    add_experiment_flags(qst, qst_flags);
    qst->add_option("--state", qst_flags.state, "GHZ | W | UNIFORM")->capture_default_str();

    ExperimentFlags qpt_flags;
    std::string qpt_target = "toffoli";
    std::size_t qpt_k = 3;
    bool qpt_accept = false, qpt_dry = false;
    auto *qpt = app.add_subcommand("qpt", "process tomography of the Toffoli circuit");
    add_experiment_flags(qpt, qpt_flags);
    qpt->add_option("--target", qpt_target, "toffoli | identity")->capture_default_str();
    qpt->add_option("--k", qpt_k, "qubits (identity target only)")->capture_default_str();
    qpt->add_flag("--accept-budget", qpt_accept, "allow the 1728-circuit k = 3 sweep");
    qpt->add_flag("--dry-run", qpt_dry, "report job and measurement counts only");

    std::string calib_path, calib_format = "text", calib_out;
    auto *calib = app.add_subcommand("calib-summary", "column statistics of a calibration file");
    calib->add_option("calibration", calib_path, "calibration JSON")->required();
    calib->add_option("--format", calib_format, "text | csv | json")->capture_default_str();
    calib->add_option("--out", calib_out, "output file (default stdout)");

    std::string report_path, report_format = "text", report_out;
    auto *report = app.add_subcommand("report", "re-render a saved JSON report");
    report->add_option("report", report_path, "report JSON")->required();
    report->add_option("--format", report_format, "text | json | csv")->capture_default_str();
    report->add_option("--out", report_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return report_error("usage", e.get_name(), e.what(), 2);
    }

    try {
        if (*synth) return run_synth(synth_strategy, synth_format, synth_out);
        if (*simulate) return run_simulate(sim_circuit, sim_flags, sim_setting);
        if (*qst) {
            const auto state = parse_state(qst_flags.state);
            const auto cfg =
                make_config(qst_flags, state == ccx::InputState::Uniform ? 11000 : 19000);
            emit(ccx::run_qst_experiment(cfg), qst_flags);
            return 0;
        }
        if (*qpt) {
            auto cfg = make_config(qpt_flags, 11000);
            auto target = ccx::process_target_from_name(qpt_target);
            if (!target) throw ccx::usage_error("InvalidTarget", "unknown target '" + qpt_target + "'");
            cfg.target = *target;
            cfg.k = qpt_k;
            cfg.accept_full_budget = qpt_accept;
            cfg.dry_run = qpt_dry;
            if (cfg.noise) {
                cfg.noise = ccx::load_calibration(*cfg.calibration_path).noise_model(qpt_k);
            }
            emit(ccx::run_qpt_experiment(cfg), qpt_flags);
            return 0;
        }
        if (*calib) return run_calib_summary(calib_path, calib_format, calib_out);
        if (*report) return run_report(report_path, report_format, report_out);
    } catch (const ccx::Error &e) {
        return report_error(ccx::category_name(e.category()), e.code(), e.what(),
                            exit_code(e.category()));
    } catch (const std::exception &e) {
        return report_error("numerical", "InternalError", e.what(), 4);
    }
    return 2;
}
