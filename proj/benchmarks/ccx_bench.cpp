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

#include <benchmark/benchmark.h>

#include "ccx/calibration.hpp"
#include "ccx/simulator.hpp"
#include "ccx/synthesis.hpp"
#include "ccx/tomography.hpp"

namespace {

using namespace ccx;

NoiseModel median_noise() {
    return load_calibration(std::string(CCX_DATA_DIR) + "/calibration/sherbrooke_median.json")
        .noise_model(3);
}

void BM_DecomposeAndCertify(benchmark::State &state) {
    const auto s = static_cast<Strategy>(state.range(0));
    for (auto _ : state) {
        const Circuit c = decompose_toffoli(s);
        benchmark::DoNotOptimize(certify_toffoli(c, ToffoliRoles{}).equivalent);
    }
    state.SetLabel(std::string(strategy_name(s)));
}
BENCHMARK(BM_DecomposeAndCertify)->DenseRange(0, 3);

void BM_Statevector(benchmark::State &state) {
    const Circuit c = prepare_state(StatePrep::w()) + decompose_toffoli(Strategy::EcrNative);
    for (auto _ : state) benchmark::DoNotOptimize(run_statevector(c));
}
BENCHMARK(BM_Statevector);

void BM_NoisyDensity(benchmark::State &state) {
    const Circuit c = prepare_state(StatePrep::ghz()) + decompose_toffoli(Strategy::EcrNative);
    const NoiseModel nm = median_noise();
    for (auto _ : state) benchmark::DoNotOptimize(run_density(c, nm));
}
BENCHMARK(BM_NoisyDensity);

void BM_Sampling(benchmark::State &state) {
    const StateVector psi = ideal_state(StatePrep::uniform());
    const PauliString setting("XYZ");
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_counts(psi, setting, static_cast<std::uint64_t>(state.range(0)), ++seed));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sampling)->Arg(1000)->Arg(19000);

void BM_QstReconstruct(benchmark::State &state) {
    const StateVector psi = ideal_state(StatePrep::ghz());
    QstCounts data;
    std::uint64_t i = 0;
    for (const PauliString &s : qst_settings(3)) data[s] = sample_counts(psi, s, 19000, i++);
    for (auto _ : state) benchmark::DoNotOptimize(qst_reconstruct(data, 3));
}
BENCHMARK(BM_QstReconstruct);

void BM_QptReconstruct(benchmark::State &state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix u = k == 3 ? toffoli_reference_matrix()
                                   : ComplexMatrix::Identity(Eigen::Index{1} << k, Eigen::Index{1} << k);
    QptCounts data;
    std::uint64_t seed = 0;
    for (const ProbeLabel &p : qpt_probes(k)) {
        const StateVector out(u * p.state());
        for (const PauliString &s : qst_settings(k)) data[{p, s}] = sample_counts(out, s, 1000, ++seed);
    }
    for (auto _ : state) benchmark::DoNotOptimize(qpt_reconstruct(data, k));
}
BENCHMARK(BM_QptReconstruct)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
