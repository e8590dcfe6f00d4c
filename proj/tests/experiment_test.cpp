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

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "ccx/calibration.hpp"
#include "ccx/error.hpp"
#include "ccx/parallel.hpp"

namespace ccx {
namespace {

ExperimentConfig small_qst(InputState s) {
    ExperimentConfig cfg;
    cfg.input_state = s;
    cfg.shots_per_setting = 2000;
    cfg.repeats = 4;
    cfg.master_seed = 42;
    return cfg;
}

TEST(Parallel, CoversEveryIndexOnce) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    EXPECT_EQ(std::accumulate(hits.begin(), hits.end(), 0), 1000);
    EXPECT_EQ(*std::min_element(hits.begin(), hits.end()), 1);
    EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                     if (i == 7) throw usage_error("Boom", "boom");
                 }),
                 Error);
    EXPECT_GE(resolve_threads(0), 1u);
}

TEST(Qst, ExactProbabilitiesGiveUnitFidelity) {
    for (InputState s : {InputState::Ghz, InputState::W, InputState::Uniform}) {
        ExperimentConfig cfg = small_qst(s);
        cfg.exact_probabilities = true;
        cfg.repeats = 1;
        const Report r = run_qst_experiment(cfg);
        ASSERT_EQ(r.repeats.size(), 1u);
        EXPECT_NEAR(r.mean, 1.0, 1e-9);
    }
}

TEST(Qst, SerialAndParallelAgreeBitForBit) {
    ExperimentConfig cfg = small_qst(InputState::W);
    const Report serial = run_qst_experiment(cfg);
    cfg.threads = 4;
    const Report parallel = run_qst_experiment(cfg);
    EXPECT_EQ(serial.fidelities(), parallel.fidelities());
    EXPECT_TRUE(serial == parallel);
    cfg.master_seed = 43;
    EXPECT_NE(run_qst_experiment(cfg).fidelities(), serial.fidelities());
}

TEST(Qst, ReportBookkeeping) {
    const Report r = run_qst_experiment(small_qst(InputState::Ghz));
    EXPECT_EQ(r.experiment, "qst");
    EXPECT_EQ(r.circuits_per_repeat, 27u);
    EXPECT_EQ(r.measurements_per_repeat, 27u * 2000u);
    EXPECT_EQ(r.repeats.size(), 4u);
    ASSERT_TRUE(r.reference.has_value());
    EXPECT_DOUBLE_EQ(r.reference->noise_free, 0.98442);
    const auto f = r.fidelities();
    const double mean = std::accumulate(f.begin(), f.end(), 0.0) / f.size();
    EXPECT_DOUBLE_EQ(r.mean, mean);
    for (double v : f) {
        EXPECT_GT(v, 0.9);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Qst, NoiseAwareRequiresModel) {
    ExperimentConfig cfg = small_qst(InputState::Ghz);
    cfg.mode = NoiseMode::NoiseAware;
    EXPECT_THROW(run_qst_experiment(cfg), Error);
    cfg.noise = load_calibration(std::string(CCX_DATA_DIR) + "/calibration/sherbrooke_median.json")
                    .noise_model(3);
    cfg.repeats = 2;
    const Report r = run_qst_experiment(cfg);
    EXPECT_LT(r.mean, 0.95);
    EXPECT_GT(r.mean, 0.6);
}

TEST(Qpt, IdentityNullExperiment) {
    ExperimentConfig cfg;
    cfg.target = ProcessTarget::Identity;
    cfg.k = 1;
    cfg.shots_per_setting = 1000;
    cfg.repeats = 2;
    cfg.exact_probabilities = true;
    const Report r = run_qpt_experiment(cfg);
    EXPECT_NEAR(r.mean, 1.0, 1e-9);
    ASSERT_TRUE(r.mean_average_gate_fidelity.has_value());
    EXPECT_NEAR(*r.mean_average_gate_fidelity, 1.0, 1e-9);
    EXPECT_EQ(r.circuits_per_repeat, 12u);
}

TEST(Qpt, DryRunCountsAndBudgetGate) {
    ExperimentConfig cfg;
    cfg.k = 3;
    cfg.shots_per_setting = 11000;
    cfg.dry_run = true;
    cfg.repeats = 1;
    const Report r = run_qpt_experiment(cfg);
    EXPECT_EQ(r.circuits_per_repeat, 1728u);
    EXPECT_EQ(r.measurements_per_repeat, 19008000u);
    EXPECT_TRUE(r.repeats.empty());
    cfg.dry_run = false;
    try {
        run_qpt_experiment(cfg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "BudgetNotAccepted");
    }
}

TEST(Qpt, TwoQubitSampledFidelity) {
    // k = 2 Toffoli is not defined; use the identity with sampling
    ExperimentConfig cfg;
    cfg.target = ProcessTarget::Identity;
    cfg.k = 2;
    cfg.shots_per_setting = 4000;
    cfg.repeats = 2;
    cfg.threads = 2;
    const Report r = run_qpt_experiment(cfg);
    EXPECT_GT(r.mean, 0.97);
    EXPECT_LT(r.mean, 1.0);
    cfg.threads = 1;
    EXPECT_EQ(run_qpt_experiment(cfg).fidelities(), r.fidelities());
}

TEST(Config, Validation) {
    ExperimentConfig cfg;
    cfg.shots_per_setting = 0;
    EXPECT_THROW(cfg.validate(), Error);
    cfg = ExperimentConfig{};
    cfg.repeats = 0;
    EXPECT_THROW(cfg.validate(), Error);
    cfg = ExperimentConfig{};
    cfg.noise_scale = -1;
    EXPECT_THROW(cfg.validate(), Error);
    EXPECT_NO_THROW(ExperimentConfig{}.validate());
}

TEST(ReportIo, JsonRoundTrip) {
    Report r = run_qst_experiment(small_qst(InputState::Uniform));
    r.timestamp = "2026-01-01T00:00:00Z";
    const Report back = report_from_json(report_to_json(r));
    EXPECT_TRUE(back == r);
    EXPECT_EQ(back.fidelities(), r.fidelities());  // bit-exact through %.17g
    EXPECT_EQ(back.timestamp, r.timestamp);
    EXPECT_THROW(report_from_json("{}"), Error);
    EXPECT_THROW(report_from_json("[1,2"), Error);
}

TEST(ReportIo, CsvOneRowPerRepeat) {
    const Report r = run_qst_experiment(small_qst(InputState::Ghz));
    std::istringstream in(report_to_csv(r));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line,
              "experiment,mode,strategy,input_state,shots_per_setting,repeat,seed,fidelity,"
              "average_gate_fidelity,tp_deviation");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    EXPECT_EQ(rows, r.repeats.size());
}

}  // namespace
}  // namespace ccx
