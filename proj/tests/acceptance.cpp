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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ccx/calibration.hpp"
#include "ccx/experiment.hpp"
#include "ccx/parallel.hpp"
#include "ccx/tomography.hpp"
#include "random.hpp"

namespace {

using namespace ccx;
using Clock = std::chrono::steady_clock;

const std::string kData = CCX_DATA_DIR;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
    std::string id;
    bool pass;
    std::string detail;
};

std::vector<Line> g_lines;

void report(const std::string &id, bool pass, const std::string &detail) {
    g_lines.push_back({id, pass, detail});
    std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

NoiseModel device(const char *file, std::size_t n) {
    return load_calibration(kData + "/calibration/" + file).noise_model(n);
}

ComplexMatrix truth_table_toffoli() {
    // CCX with controls on qubits 1, 2 and target 0
    ComplexMatrix m = ComplexMatrix::Zero(8, 8);
    for (int x = 0; x < 8; ++x) m(((x & 6) == 6) ? x ^ 1 : x, x) = 1;
    return m;
}

QptProbabilities exact_qpt(const ComplexMatrix &u, std::size_t k) {
    QptProbabilities data;
    for (const ProbeLabel &p : qpt_probes(k)) {
        const StateVector out(u * p.state());
        for (const PauliString &s : qst_settings(k)) data[{p, s}] = measurement_probabilities(out, s);
    }
    return data;
}

void criterion1() {
    const auto t0 = Clock::now();
    const ComplexMatrix eq1 = truth_table_toffoli();
    bool ok = true;
    double worst = 0.0;
    for (Strategy s : kAllStrategies) {
        const Circuit c = decompose_toffoli(s);
        const EquivalenceReport rep =
            equivalent_up_to_global_phase(circuit_unitary(c), UnitaryMatrix(eq1), 1e-10);
        worst = std::max(worst, rep.max_abs_error);
        ok = ok && rep.equivalent && rep.max_abs_error <= 1e-10;
        if (s != Strategy::Full6Cnot) {
            ok = ok && validate_connectivity(c, CouplingGraph::line(3)).empty();
        }
    }
    ok = ok && decompose_toffoli(Strategy::Full6Cnot).count(GateKind::CNOT) == 6 &&
         decompose_toffoli(Strategy::Lnn8Cnot).count(GateKind::CNOT) == 8 &&
         decompose_toffoli(Strategy::Lnn9CnotRzSx).count(GateKind::CNOT) == 9;
    const double dt = seconds_since(t0);
    report("1 decomposition", ok && dt < 1.0,
           fmt("max |U - e^{i phi} CCX| = %.2e, CNOT counts 6/8/9, LNN violations 0, %.3f s", worst,
               dt));
}

void criterion2() {
    const auto t0 = Clock::now();
    testing::Rng rng(2024);
    double worst_qst = 1.0;
    for (int i = 0; i < 100; ++i) {
        const StateVector psi(testing::random_state(rng, 8));
        worst_qst = std::min(worst_qst, state_fidelity(psi, qst_reconstruct(exact_qst_probabilities(psi), 3)));
    }
    double worst_qpt = 1.0;
    for (std::size_t k : {1u, 2u}) {
        for (int i = 0; i < 10; ++i) {
            const ComplexMatrix u = testing::random_unitary(rng, std::size_t{1} << k);
            worst_qpt = std::min(worst_qpt, process_fidelity(qpt_reconstruct(exact_qpt(u, k), k),
                                                             choi_of_unitary(u)));
        }
    }
    const ComplexMatrix t = truth_table_toffoli();
    const double f_toffoli = process_fidelity(qpt_reconstruct(exact_qpt(t, 3), 3), choi_of_unitary(t));
    const double dt = seconds_since(t0);
    report("2 tomography round-trips",
           worst_qst >= 1 - 1e-9 && worst_qpt >= 1 - 1e-8 && f_toffoli >= 1 - 1e-8 && dt < 300,
           fmt("min QST F = 1 - %.1e, min QPT F (k=1,2) = 1 - %.1e, Toffoli F = 1 - %.1e, %.1f s",
               1 - worst_qst, 1 - worst_qpt, 1 - f_toffoli, dt));
}

struct BandResult {
    double qst[3];
    double qpt;
};

ExperimentConfig base_config(std::size_t threads) {
    ExperimentConfig cfg;
    cfg.repeats = 20;
    cfg.master_seed = 42;
    cfg.threads = threads;
    return cfg;
}

BandResult criterion3(std::size_t threads) {
    const auto t0 = Clock::now();
    BandResult out{};
    const InputState states[3] = {InputState::Ghz, InputState::W, InputState::Uniform};
    const std::uint64_t shots[3] = {19000, 19000, 11000};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        ExperimentConfig cfg = base_config(threads);
        cfg.input_state = states[i];
        cfg.shots_per_setting = shots[i];
        const Report r = run_qst_experiment(cfg);
        out.qst[i] = r.mean;
        const double ref = r.reference->noise_free;
        ok = ok && std::abs(r.mean - ref) <= 0.015;
        detail += fmt("%s %.5f (ref %.5f); ", std::string(input_state_name(states[i])).c_str(), r.mean, ref);
    }
    const double dt_qst = seconds_since(t0);

    const auto t1 = Clock::now();
    ExperimentConfig q = base_config(threads);
    q.shots_per_setting = 11000;
    q.accept_full_budget = true;
    const Report r = run_qpt_experiment(q);
    out.qpt = r.mean;
    ok = ok && std::abs(r.mean - 0.990) <= 0.015;
    detail += fmt("QPT %.4f (ref 0.990); QST %.1f s, QPT %.1f s", r.mean, dt_qst, seconds_since(t1));
    report("3a noise-free band", ok, detail);

    const auto t2 = Clock::now();
    q.shots_per_setting = 1000;
    const Report low = run_qpt_experiment(q);
    const double dt_low = seconds_since(t2);
    double min_f = 1.0;
    for (double f : low.fidelities()) min_f = std::min(min_f, f);
    report("3b reduced-shot QPT", low.mean >= 0.97 && dt_low < 600,
           fmt("1,000 shots: mean F_pro %.4f (min %.4f) over %zu seeds, need >= 0.97; %.1f s", low.mean,
               min_f, low.repeats.size(), dt_low));
    return out;
}

void criterion4(const BandResult &free, std::size_t threads) {
    const InputState states[3] = {InputState::Ghz, InputState::W, InputState::Uniform};
    const std::uint64_t shots[3] = {19000, 19000, 11000};
    const char *files[3] = {"sherbrooke_median.json", "sherbrooke_median.json", "brisbane_median.json"};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        ExperimentConfig cfg = base_config(threads);
        cfg.mode = NoiseMode::NoiseAware;
        cfg.input_state = states[i];
        cfg.shots_per_setting = shots[i];
        cfg.calibration_path = kData + "/calibration/" + files[i];
        cfg.noise = device(files[i], 3);
        const Report r = run_qst_experiment(cfg);
        ok = ok && r.mean >= 0.70 && r.mean <= 0.92 && free.qst[i] - r.mean > 0.05;
        detail += fmt("%s %.4f; ", std::string(input_state_name(states[i])).c_str(), r.mean);
    }
    ExperimentConfig q = base_config(threads);
    q.mode = NoiseMode::NoiseAware;
    q.shots_per_setting = 11000;
    q.accept_full_budget = true;
    q.repeats = 5;
    q.calibration_path = kData + "/calibration/sherbrooke_median.json";
    q.noise = device("sherbrooke_median.json", 3);
    const Report r = run_qpt_experiment(q);
    ok = ok && r.mean >= 0.70 && r.mean <= 0.90 && free.qpt - r.mean > 0.05;
    detail += fmt("QPT %.4f (F_ave %.4f)", r.mean, r.mean_average_gate_fidelity.value_or(0.0));
    report("4 noise-aware band", ok, detail);
}

void criterion5() {
    const double f_ave = average_gate_fidelity(0.802, 3);
    bool ok = std::abs(f_ave - 0.8240) <= 1e-4;
    testing::Rng rng(55);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t dim = i % 2 == 0 ? 2 : 4;
        const KrausChannel ch = testing::random_channel(rng, dim, 1 + i % 3);
        const UnitaryMatrix w(testing::random_unitary(rng, dim));
        const double a = process_fidelity(choi_of_channel(ch), choi_of_unitary(w));
        const double b = process_fidelity_superop(pauli_transfer_matrix(ch).cast<Complex>(), w);
        worst = std::max(worst, std::abs(a - b));
    }
    ok = ok && worst <= 1e-8;
    const double f_dep = process_fidelity(choi_of_channel(depolarizing_channel_lambda(1.0, 2)),
                                          choi_of_unitary(ComplexMatrix::Identity(2, 2)));
    ok = ok && std::abs(f_dep - 0.25) <= 1e-9;
    report("5 fidelity identities", ok,
           fmt("F_ave(0.802, 3) = %.6f, Choi vs PTM max diff %.1e, depolarizing F_pro = %.12f", f_ave,
               worst, f_dep));
}

void criterion6(std::size_t threads) {
    bool ok = true;
    std::string detail;
    for (bool exact : {true, false}) {
        double prev = 2.0;
        detail += exact ? "exact:" : " sampled:";
        for (double lambda : {0.0, 0.5, 1.0, 2.0}) {
            ExperimentConfig cfg = base_config(threads);
            cfg.mode = NoiseMode::NoiseAware;
            cfg.repeats = exact ? 1 : 5;
            cfg.exact_probabilities = exact;
            cfg.noise_scale = lambda;
            cfg.noise = device("sherbrooke_median.json", 3);
            const double f = run_qst_experiment(cfg).mean;
            ok = ok && f < prev - 1e-6;
            prev = f;
            detail += fmt(" %.4f", f);
        }
    }
    report("6 monotone degradation", ok, "GHZ fidelity at lambda 0, 0.5, 1, 2:" + detail);
}

void criterion7(std::size_t threads) {
    ExperimentConfig cfg = base_config(1);
    cfg.input_state = InputState::W;
    cfg.shots_per_setting = 19000;
    const Report a = run_qst_experiment(cfg);
    const Report b = run_qst_experiment(cfg);
    cfg.threads = std::max<std::size_t>(threads, 4);
    const Report c = run_qst_experiment(cfg);

    ExperimentConfig n = base_config(1);
    n.mode = NoiseMode::NoiseAware;
    n.repeats = 4;
    n.noise = device("sherbrooke_median.json", 3);
    const Report d = run_qst_experiment(n);
    n.threads = cfg.threads;
    const Report e = run_qst_experiment(n);

    const bool ok = a.fidelities() == b.fidelities() && a.fidelities() == c.fidelities() &&
                    d.fidelities() == e.fidelities();
    report("7 determinism", ok,
           fmt("seed 42 repeated runs identical, serial vs %zu threads identical (%zu + %zu repeats)",
               cfg.threads, a.repeats.size(), d.repeats.size()));
}

void criterion8() {
    ExperimentConfig cfg;
    cfg.shots_per_setting = 11000;
    cfg.dry_run = true;
    const Report r = run_qpt_experiment(cfg);
    const auto jobs = qpt_jobs(experiment_circuit(cfg), 3, 11000, 42);
    std::uint64_t total = 0;
    for (const auto &j : jobs) total += j.shots;
    const bool ok = r.circuits_per_repeat == 1728 && r.measurements_per_repeat == 19008000 &&
                    jobs.size() == 1728 && total == 19008000;
    report("8 QPT bookkeeping", ok,
           fmt("%zu jobs, %llu measurements", jobs.size(), static_cast<unsigned long long>(total)));
}

}  // namespace

int main() {
    const std::size_t threads = resolve_threads(0);
    const std::vector<std::pair<const char *, std::function<void()>>> steps = {
        {"1 decomposition", criterion1},
        {"2 tomography round-trips", criterion2},
    };
    for (const auto &[name, fn] : steps) {
        try {
            fn();
        } catch (const std::exception &e) {
            report(name, false, std::string("exception: ") + e.what());
        }
    }
    BandResult free{{1, 1, 1}, 1};
    try {
        free = criterion3(threads);
    } catch (const std::exception &e) {
        report("3 noise-free band", false, std::string("exception: ") + e.what());
    }
    const std::vector<std::pair<const char *, std::function<void()>>> rest = {
        {"4 noise-aware band", [&] { criterion4(free, threads); }},
        {"5 fidelity identities", criterion5},
        {"6 monotone degradation", [&] { criterion6(threads); }},
        {"7 determinism", [&] { criterion7(threads); }},
        {"8 QPT bookkeeping", criterion8},
    };
    for (const auto &[name, fn] : rest) {
        try {
            fn();
        } catch (const std::exception &e) {
            report(name, false, std::string("exception: ") + e.what());
        }
    }
    std::size_t failed = 0;
    for (const Line &l : g_lines) failed += l.pass ? 0 : 1;
    std::printf("%zu of %zu checks passed\n", g_lines.size() - failed, g_lines.size());
    return failed == 0 ? 0 : 1;
}
