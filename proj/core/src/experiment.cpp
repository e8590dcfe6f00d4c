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

#include "ccx/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numeric>

#include "ccx/error.hpp"
#include "ccx/parallel.hpp"
#include "ccx/tomography.hpp"

#ifndef CCX_VERSION
#define CCX_VERSION "0.0.0"
#endif

namespace ccx {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void finish_statistics(Report &r) {
    const auto f = r.fidelities();
    if (f.empty()) return;
    const double n = static_cast<double>(f.size());
    r.mean = std::accumulate(f.begin(), f.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : f) ss += (v - r.mean) * (v - r.mean);
    r.std = f.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    if (r.experiment == "qpt") {
        double acc = 0.0;
        for (const auto &rep : r.repeats) acc += rep.average_gate_fidelity.value_or(0.0);
        r.mean_average_gate_fidelity = acc / n;
    }
}

NoiseModel effective_noise(const ExperimentConfig &cfg, std::size_t width) {
    NoiseModel nm = cfg.noise->resized(width).scaled(cfg.noise_scale);
    nm.set_readout_enabled(cfg.readout_error);
    return nm;
}

// Outcome distribution of measuring `setting` after the noisy rotation,
// readout-window relaxation and confusion.
Eigen::VectorXd noisy_setting_distribution(const DensityMatrix &rho, const PauliString &setting,
                                           const NoiseModel &nm) {
    const DensityMatrix rotated = run_density(measurement_rotation(setting), nm, rho);
    const DensityMatrix measured = apply_readout_relaxation(rotated, nm);
    const PauliString z(std::string(setting.size(), 'Z'));
    return measurement_probabilities(measured, z, readout_confusion(nm, setting.size()));
}

Report new_report(const ExperimentConfig &cfg, std::string experiment, const Circuit &executed) {
    Report r;
    r.experiment = std::move(experiment);
    r.tool_version = std::string(tool_version());
    r.config = cfg;
    r.config.noise.reset();
    r.circuit = CircuitStats::of(executed);
    r.timestamp = utc_timestamp();
    return r;
}

}  // namespace

std::string_view noise_mode_name(NoiseMode m) noexcept {
    return m == NoiseMode::NoiseFree ? "noise_free" : "noise_aware";
}

std::optional<NoiseMode> noise_mode_from_name(std::string_view name) noexcept {
    const std::string s = lower(name);
    if (s == "noise_free" || s == "noise-free" || s == "ideal") return NoiseMode::NoiseFree;
    if (s == "noise_aware" || s == "noise-aware" || s == "noisy") return NoiseMode::NoiseAware;
    return std::nullopt;
}

std::string_view process_target_name(ProcessTarget t) noexcept {
    return t == ProcessTarget::Toffoli ? "toffoli" : "identity";
}

std::optional<ProcessTarget> process_target_from_name(std::string_view name) noexcept {
    const std::string s = lower(name);
    if (s == "toffoli" || s == "ccx") return ProcessTarget::Toffoli;
    if (s == "identity" || s == "id") return ProcessTarget::Identity;
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    if (shots_per_setting == 0 && !exact_probabilities) {
        throw usage_error("InvalidConfig", "shots must be positive");
    }
    if (repeats == 0) throw usage_error("InvalidConfig", "repeats must be at least 1");
    if (mode == NoiseMode::NoiseAware && !noise) {
        throw usage_error("InvalidConfig", "noise-aware mode needs a calibration (--noise)");
    }
    if (!(noise_scale >= 0.0) || !std::isfinite(noise_scale)) {
        throw usage_error("InvalidConfig", "noise scale must be finite and non-negative");
    }
    if (k < 1 || k > 3) throw usage_error("KOutOfRange", "k must lie in [1, 3]");
    if (target == ProcessTarget::Toffoli && k != 3) {
        throw usage_error("InvalidConfig", "the Toffoli target acts on k = 3 qubits");
    }
}

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b) {
    return a.mode == b.mode && a.input_state == b.input_state && a.strategy == b.strategy &&
           a.shots_per_setting == b.shots_per_setting && a.master_seed == b.master_seed &&
           a.calibration_path == b.calibration_path && a.repeats == b.repeats &&
           a.exact_probabilities == b.exact_probabilities && a.readout_error == b.readout_error &&
           a.noise_scale == b.noise_scale && a.target == b.target && a.k == b.k &&
           a.accept_full_budget == b.accept_full_budget && a.dry_run == b.dry_run;
}

CircuitStats CircuitStats::of(const Circuit &c) {
    return {c.two_qubit_count(), c.single_qubit_count(), c.size(), c.depth()};
}

std::vector<double> Report::fidelities() const {
    std::vector<double> out;
    out.reserve(repeats.size());
    for (const auto &r : repeats) out.push_back(r.fidelity);
    return out;
}

bool operator==(const Report &a, const Report &b) {
    return a.experiment == b.experiment && a.tool_version == b.tool_version &&
           a.config == b.config && a.circuit == b.circuit &&
           a.circuits_per_repeat == b.circuits_per_repeat &&
           a.measurements_per_repeat == b.measurements_per_repeat && a.repeats == b.repeats &&
           a.mean == b.mean && a.std == b.std &&
           a.mean_average_gate_fidelity == b.mean_average_gate_fidelity &&
           a.reference == b.reference;
}

std::string_view tool_version() noexcept { return CCX_VERSION; }

std::optional<ReferenceValues> reference_values(std::string_view experiment, InputState s) {
    if (experiment == "qpt") return ReferenceValues{0.990, 0.802, std::nullopt};
    if (experiment != "qst") return std::nullopt;
    switch (s) {
        case InputState::Ghz: return ReferenceValues{0.98442, 0.81470, 0.56368};
        case InputState::W: return ReferenceValues{0.98739, 0.79900, 0.63689};
        case InputState::Uniform: return ReferenceValues{0.99490, 0.85469, 0.61161};
    }
    return std::nullopt;
}

Circuit experiment_circuit(const ExperimentConfig &cfg) {
    Circuit c = decompose_toffoli(cfg.strategy);
    if (cfg.mode == NoiseMode::NoiseAware) {
        const bool native = std::all_of(c.gates().begin(), c.gates().end(),
                                        [](const Gate &g) { return is_native(g.kind()); });
        if (!native) c = lower_to_native(c);
    }
    return c;
}

Report run_qst_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const Circuit gate = experiment_circuit(cfg);
    Report report = new_report(cfg, "qst", gate);
    report.reference = reference_values("qst", cfg.input_state);

    const StatePrep prep = StatePrep::of(cfg.input_state);
    const Circuit full = prepare_state(prep) + gate;
    const StateVector ideal(toffoli_unitary(1, 2, 0, 3).matrix() * ideal_state(prep).amplitudes());

    const auto settings = qst_settings(3);
    report.circuits_per_repeat = settings.size();
    report.measurements_per_repeat = cfg.shots_per_setting * settings.size();

    std::vector<Eigen::VectorXd> dist(settings.size());
    if (cfg.mode == NoiseMode::NoiseFree) {
        const StateVector psi = run_statevector(full);
        for (std::size_t i = 0; i < settings.size(); ++i) {
            dist[i] = measurement_probabilities(psi, settings[i]);
        }
    } else {
        const NoiseModel nm = effective_noise(cfg, 3);
        const DensityMatrix rho = run_density(full, nm);
        parallel_for(settings.size(), cfg.threads, [&](std::size_t i) {
            dist[i] = noisy_setting_distribution(rho, settings[i], nm);
        });
    }

    report.repeats.resize(cfg.repeats);
    parallel_for(cfg.repeats, cfg.threads, [&](std::size_t r) {
        const std::uint64_t seed = derive_seed(cfg.master_seed, r);
        QstProbabilities data;
        for (std::size_t i = 0; i < settings.size(); ++i) {
            if (cfg.exact_probabilities) {
                data.emplace(settings[i], dist[i]);
            } else {
                data.emplace(settings[i], sample_distribution(dist[i], cfg.shots_per_setting,
                                                              derive_seed(seed, i))
                                              .frequencies());
            }
        }
        report.repeats[r] = RepeatResult{r, seed, state_fidelity(ideal, qst_reconstruct(data, 3)),
                                         std::nullopt, std::nullopt};
    });
    finish_statistics(report);
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

Report run_qpt_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t k = cfg.k;
    const Circuit gate = cfg.target == ProcessTarget::Toffoli ? experiment_circuit(cfg) : Circuit(k);
    Report report = new_report(cfg, "qpt", gate);
    if (cfg.target == ProcessTarget::Toffoli) report.reference = reference_values("qpt", cfg.input_state);

    const std::size_t n_probes = std::size_t{1} << (2 * k);
    std::size_t n_settings = 1;
    for (std::size_t i = 0; i < k; ++i) n_settings *= 3;
    report.circuits_per_repeat = n_probes * n_settings;
    report.measurements_per_repeat = cfg.shots_per_setting * report.circuits_per_repeat;
    if (cfg.dry_run) {
        report.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    }
    if (k == 3 && !cfg.accept_full_budget) {
        throw usage_error("BudgetNotAccepted",
                          "k = 3 process tomography runs 1728 circuits per repeat; "
                          "accept the budget explicitly");
    }

    const auto jobs = qpt_jobs(gate, k, std::max<std::uint64_t>(cfg.shots_per_setting, 1), 0);
    const auto probes = qpt_probes(k);
    const auto settings = qst_settings(k);

    // Distributions depend only on the job; the sampling seed changes per repeat.
    std::vector<Eigen::VectorXd> dist(jobs.size());
    if (cfg.mode == NoiseMode::NoiseFree) {
        parallel_for(probes.size(), cfg.threads, [&](std::size_t p) {
            const StateVector out = run_statevector(probe_preparation(probes[p]) + gate);
            for (std::size_t s = 0; s < settings.size(); ++s) {
                dist[p * settings.size() + s] = measurement_probabilities(out, settings[s]);
            }
        });
    } else {
        const NoiseModel nm = effective_noise(cfg, k);
        parallel_for(probes.size(), cfg.threads, [&](std::size_t p) {
            const DensityMatrix out = run_density(probe_preparation(probes[p]) + gate, nm);
            for (std::size_t s = 0; s < settings.size(); ++s) {
                dist[p * settings.size() + s] = noisy_setting_distribution(out, settings[s], nm);
            }
        });
    }

    const UnitaryMatrix target = cfg.target == ProcessTarget::Toffoli
                                     ? toffoli_unitary(1, 2, 0, 3)
                                     : UnitaryMatrix::identity(std::size_t{1} << k);
    const ChoiMatrix ideal = choi_of_unitary(target);

    report.repeats.resize(cfg.repeats);
    parallel_for(cfg.repeats, cfg.threads, [&](std::size_t r) {
        const std::uint64_t seed = derive_seed(cfg.master_seed, r);
        QptProbabilities data;
        for (const auto &job : jobs) {
            const Eigen::VectorXd &p = dist[job.index];
            data.emplace(QptKey{job.probe, job.setting},
                         cfg.exact_probabilities
                             ? p
                             : sample_distribution(p, cfg.shots_per_setting,
                                                   derive_seed(seed, job.index))
                                   .frequencies());
        }
        const ChoiMatrix choi = qpt_reconstruct(data, k);
        const double f = process_fidelity(choi, ideal);
        report.repeats[r] = RepeatResult{r, seed, f, average_gate_fidelity(f, k),
                                         choi.trace_preservation_deviation()};
    });
    finish_statistics(report);
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ccx
