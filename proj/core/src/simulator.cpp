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

#include "ccx/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ccx/error.hpp"
#include "ccx/synthesis.hpp"

namespace ccx {

namespace {

constexpr double pi = std::numbers::pi;

// Multiplies the rows of `m` by the local operator acting on `qubits`.
void apply_left(ComplexMatrix &m, const ComplexMatrix &local, std::span<const std::size_t> qubits) {
    const std::size_t k = qubits.size();
    const std::size_t ldim = std::size_t{1} << k;
    const auto dim = static_cast<std::size_t>(m.rows());
    std::size_t mask = 0;
    for (std::size_t q : qubits) mask |= std::size_t{1} << q;
    std::vector<std::size_t> offsets(ldim);
    for (std::size_t l = 0; l < ldim; ++l) {
        std::size_t o = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((l >> i) & 1U) o |= std::size_t{1} << qubits[i];
        }
        offsets[l] = o;
    }
    ComplexMatrix block(static_cast<Eigen::Index>(ldim), m.cols());
    for (std::size_t rest = 0; rest < dim; ++rest) {
        if (rest & mask) continue;
        for (std::size_t l = 0; l < ldim; ++l) {
            block.row(static_cast<Eigen::Index>(l)) = m.row(static_cast<Eigen::Index>(rest | offsets[l]));
        }
        block = local * block;
        for (std::size_t l = 0; l < ldim; ++l) {
            m.row(static_cast<Eigen::Index>(rest | offsets[l])) = block.row(static_cast<Eigen::Index>(l));
        }
    }
}

// rho -> L rho L^dag on the given qubits.
void conjugate(ComplexMatrix &rho, const ComplexMatrix &local, std::span<const std::size_t> qubits) {
    apply_left(rho, local, qubits);
    rho.adjointInPlace();
    apply_left(rho, local, qubits);
    rho.adjointInPlace();
}

void apply_channel(ComplexMatrix &rho, const KrausChannel &ch, std::span<const std::size_t> qubits) {
    if (ch.operators().size() == 1) {
        conjugate(rho, ch.operators().front(), qubits);
        return;
    }
    ComplexMatrix acc = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : ch.operators()) {
        ComplexMatrix term = rho;
        conjugate(term, k, qubits);
        acc += term;
    }
    rho = std::move(acc);
}

void require_simulable(const Circuit &c) {
    if (c.num_qubits() > 6) {
        throw usage_error("TooManyQubits", "simulation supports at most 6 qubits");
    }
}

// RY(theta) over the native set, in application order.
void append_ry(Circuit &c, double theta, std::size_t q) {
    c.append(Gate::sx(q)).append(Gate::rz(theta + pi, q)).append(Gate::sx(q)).append(
        Gate::rz(pi, q));
}

// CNOT(c -> t) lowered to ECR plus single-qubit corrections.
void append_cnot(Circuit &c, std::size_t control, std::size_t target) {
    c.append(cnot_to_ecr(control, target));
}

void append_h(Circuit &c, std::size_t q) {
    c.append(Gate::rz(pi / 2, q)).append(Gate::sx(q)).append(Gate::rz(pi / 2, q));
}

void append_cry(Circuit &c, double phi, std::size_t control, std::size_t target) {
    append_ry(c, phi / 2, target);
    append_cnot(c, control, target);
    append_ry(c, -phi / 2, target);
    append_cnot(c, control, target);
}

std::size_t prep_width(const StatePrep &prep) {
    switch (prep.kind) {
        case StatePrep::Kind::Ghz:
        case StatePrep::Kind::W:
        case StatePrep::Kind::Uniform:
            if (prep.num_qubits != 3) {
                throw usage_error("InvalidLabel", "GHZ, W and UNIFORM are defined on 3 qubits");
            }
            return 3;
        case StatePrep::Kind::Basis:
            if (prep.num_qubits == 0 || prep.num_qubits > 6 ||
                prep.basis_index >= (std::size_t{1} << prep.num_qubits)) {
                throw usage_error("InvalidLabel", "basis index out of range");
            }
            return prep.num_qubits;
        case StatePrep::Kind::Probe:
            if (prep.probes.empty() || prep.probes.size() > 6) {
                throw usage_error("InvalidLabel", "probe label length must be in [1, 6]");
            }
            return prep.probes.size();
    }
    throw usage_error("InvalidLabel", "unknown state preparation");
}

}  // namespace

std::string_view input_state_name(InputState s) noexcept {
    switch (s) {
        case InputState::Ghz: return "GHZ";
        case InputState::W: return "W";
        case InputState::Uniform: return "UNIFORM";
    }
    return "?";
}

std::optional<InputState> input_state_from_name(std::string_view name) noexcept {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (up == "GHZ") return InputState::Ghz;
    if (up == "W") return InputState::W;
    if (up == "UNIFORM" || up == "UNIF") return InputState::Uniform;
    return std::nullopt;
}

StatePrep StatePrep::of(InputState s) {
    switch (s) {
        case InputState::Ghz: return ghz();
        case InputState::W: return w();
        case InputState::Uniform: return uniform();
    }
    return ghz();
}

Circuit prepare_state(const StatePrep &prep) {
    const std::size_t n = prep_width(prep);
    Circuit c(n);
    switch (prep.kind) {
        case StatePrep::Kind::Ghz:
            append_h(c, 0);
            append_cnot(c, 0, 1);
            append_cnot(c, 1, 2);
            break;
        case StatePrep::Kind::W:
            c.append(Gate::x(0));
            append_cry(c, 2.0 * std::acos(1.0 / std::sqrt(3.0)), 0, 1);
            append_cnot(c, 1, 0);
            append_cry(c, pi / 2, 1, 2);
            append_cnot(c, 2, 1);
            break;
        case StatePrep::Kind::Uniform:
            for (std::size_t q = 0; q < n; ++q) append_h(c, q);
            break;
        case StatePrep::Kind::Basis:
            for (std::size_t q = 0; q < n; ++q) {
                if ((prep.basis_index >> q) & 1U) c.append(Gate::x(q));
            }
            break;
        case StatePrep::Kind::Probe:
            c.append(probe_preparation(ProbeLabel(prep.probes)));
            break;
    }
    return merge_single_qubit_gates(c, false);
}

StateVector ideal_state(const StatePrep &prep) {
    const std::size_t n = prep_width(prep);
    const auto dim = Eigen::Index{1} << n;
    ComplexVector v = ComplexVector::Zero(dim);
    switch (prep.kind) {
        case StatePrep::Kind::Ghz:
            v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
            break;
        case StatePrep::Kind::W:
            for (std::size_t q = 0; q < n; ++q) v(Eigen::Index{1} << q) = 1.0 / std::sqrt(3.0);
            break;
        case StatePrep::Kind::Uniform:
            v.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
            break;
        case StatePrep::Kind::Basis:
            v(static_cast<Eigen::Index>(prep.basis_index)) = 1.0;
            break;
        case StatePrep::Kind::Probe:
            v = ProbeLabel(prep.probes).state();
            break;
    }
    return StateVector(std::move(v));
}

StateVector run_statevector(const Circuit &c) {
    require_simulable(c);
    return run_statevector(c, StateVector::basis(c.num_qubits(), 0));
}

StateVector run_statevector(const Circuit &c, const StateVector &initial) {
    require_simulable(c);
    if (initial.num_qubits() != c.num_qubits()) {
        throw usage_error("DimensionMismatch", "initial state width differs from circuit width");
    }
    ComplexMatrix v = initial.amplitudes();
    for (const Gate &g : c.gates()) {
        if (g.kind() == GateKind::CCX) {
            throw usage_error("NonNativeGate", "CCX must be synthesized before simulation");
        }
        apply_left(v, gate_matrix_local(g), g.qubits());
    }
    ComplexVector out = v.col(0);
    return StateVector(std::move(out), 1e-9);
}

DensityMatrix run_density(const Circuit &c, const NoiseModel &nm) {
    require_simulable(c);
    return run_density(c, nm, DensityMatrix(StateVector::basis(c.num_qubits(), 0)));
}

DensityMatrix run_density(const Circuit &c, const NoiseModel &nm, const DensityMatrix &initial) {
    require_simulable(c);
    if (initial.num_qubits() != c.num_qubits()) {
        throw usage_error("DimensionMismatch", "initial state width differs from circuit width");
    }
    if (nm.num_qubits() < c.num_qubits()) {
        throw usage_error("MissingCalibration",
                          "noise model covers " + std::to_string(nm.num_qubits()) +
                              " qubits, circuit uses " + std::to_string(c.num_qubits()));
    }
    ComplexMatrix rho = initial.matrix();
    for (const Gate &g : c.gates()) {
        if (!is_native(g.kind())) {
            throw usage_error("NonNativeGate", "gate " + std::string(g.name()) +
                                                   " is not in the hardware native set");
        }
        conjugate(rho, gate_matrix_local(g), g.qubits());
        const GateNoise noise = nm.gate_noise(g);
        if (noise.error > 0.0) {
            apply_channel(rho, depolarizing_channel(noise.error, std::size_t{1} << g.arity()),
                          g.qubits());
        }
        if (noise.duration_ns > 0.0) {
            for (std::size_t q : g.qubits()) {
                const auto &cal = nm.qubit(q);
                if (std::isinf(cal.t1_us) && std::isinf(cal.t2_us)) continue;
                const std::size_t qs[1] = {q};
                apply_channel(rho, thermal_relaxation_channel(noise.duration_ns, cal.t1_us, cal.t2_us),
                              qs);
            }
        }
    }
    return project_to_density(rho);
}

DensityMatrix apply_readout_relaxation(const DensityMatrix &rho, const NoiseModel &nm) {
    const std::size_t n = rho.num_qubits();
    if (nm.num_qubits() < n) {
        throw usage_error("MissingCalibration", "noise model covers fewer qubits than the state");
    }
    ComplexMatrix m = rho.matrix();
    for (std::size_t q = 0; q < n; ++q) {
        const auto &cal = nm.qubit(q);
        if (cal.readout_length_ns <= 0.0 || (std::isinf(cal.t1_us) && std::isinf(cal.t2_us))) {
            continue;
        }
        const std::size_t qs[1] = {q};
        apply_channel(m, thermal_relaxation_channel(cal.readout_length_ns, cal.t1_us, cal.t2_us), qs);
    }
    return project_to_density(m);
}

std::vector<ReadoutConfusion> readout_confusion(const NoiseModel &nm, std::size_t num_qubits) {
    std::vector<ReadoutConfusion> out(num_qubits);
    if (!nm.readout_enabled()) return out;
    for (std::size_t q = 0; q < num_qubits; ++q) {
        const auto &cal = nm.qubit(q);
        out[q] = {cal.prob_meas1_prep0, cal.prob_meas0_prep1};
    }
    return out;
}

Eigen::VectorXd CountsMap::frequencies() const {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(Eigen::Index{1} << num_qubits);
    if (shots == 0) return f;
    for (const auto &[bits, n] : outcomes) {
        f(static_cast<Eigen::Index>(std::stoull(bits, nullptr, 2))) =
            static_cast<double>(n) / static_cast<double>(shots);
    }
    return f;
}

std::string bitstring(std::size_t index, std::size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> q) & 1U) s[num_qubits - 1 - q] = '1';
    }
    return s;
}

Eigen::VectorXd apply_readout_confusion(const Eigen::VectorXd &probs,
                                        const std::vector<ReadoutConfusion> &readout) {
    Eigen::VectorXd p = probs;
    const auto dim = static_cast<std::size_t>(p.size());
    for (std::size_t q = 0; q < readout.size(); ++q) {
        const auto [p10, p01] = readout[q];
        if (p10 == 0.0 && p01 == 0.0) continue;
        const std::size_t bit = std::size_t{1} << q;
        if (bit >= dim) throw usage_error("DimensionMismatch", "readout table wider than state");
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & bit) continue;
            const double a = p(static_cast<Eigen::Index>(i));
            const double b = p(static_cast<Eigen::Index>(i | bit));
            p(static_cast<Eigen::Index>(i)) = (1.0 - p10) * a + p01 * b;
            p(static_cast<Eigen::Index>(i | bit)) = p10 * a + (1.0 - p01) * b;
        }
    }
    return p;
}

namespace {

Eigen::VectorXd rotated_probabilities(const ComplexMatrix &rotated_diag_source, bool is_vector) {
    if (is_vector) return rotated_diag_source.col(0).cwiseAbs2();
    Eigen::VectorXd p = rotated_diag_source.diagonal().real();
    return p.cwiseMax(0.0);
}

void check_setting(const PauliString &setting, std::size_t n) {
    if (setting.size() != n) {
        throw usage_error("InvalidPauliString", "setting " + setting.label() + " has length " +
                                                    std::to_string(setting.size()) +
                                                    ", state has " + std::to_string(n) + " qubits");
    }
}

}  // namespace

Eigen::VectorXd measurement_probabilities(const StateVector &psi, const PauliString &setting,
                                          const std::vector<ReadoutConfusion> &readout) {
    check_setting(setting, psi.num_qubits());
    ComplexMatrix v = psi.amplitudes();
    const Circuit rotation = measurement_rotation(setting);
    for (const Gate &g : rotation.gates()) {
        apply_left(v, gate_matrix_local(g), g.qubits());
    }
    return apply_readout_confusion(rotated_probabilities(v, true), readout);
}

Eigen::VectorXd measurement_probabilities(const DensityMatrix &rho, const PauliString &setting,
                                          const std::vector<ReadoutConfusion> &readout) {
    check_setting(setting, rho.num_qubits());
    ComplexMatrix m = rho.matrix();
    const Circuit rotation = measurement_rotation(setting);
    for (const Gate &g : rotation.gates()) {
        conjugate(m, gate_matrix_local(g), g.qubits());
    }
    return apply_readout_confusion(rotated_probabilities(m, false), readout);
}

CountsMap sample_distribution(const Eigen::VectorXd &probs, std::uint64_t shots,
                              std::uint64_t seed) {
    if (shots == 0) throw usage_error("InvalidShots", "shots must be positive");
    const auto dim = static_cast<std::size_t>(probs.size());
    std::vector<double> cdf(dim);
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        acc += std::max(0.0, probs(static_cast<Eigen::Index>(i)));
        cdf[i] = acc;
    }
    if (!(acc > 0.0)) throw numerical_error("ZeroProbability", "distribution has no mass");
    std::vector<std::uint64_t> tally(dim, 0);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
        if (idx >= dim) idx = dim - 1;
        ++tally[idx];
    }
    CountsMap out;
    out.shots = shots;
    out.num_qubits = qubits_for_dim(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (tally[i] > 0) out.outcomes[bitstring(i, out.num_qubits)] = tally[i];
    }
    return out;
}

CountsMap sample_counts(const QuantumState &state, const PauliString &setting,
                        std::uint64_t shots, std::uint64_t seed,
                        const std::optional<std::vector<ReadoutConfusion>> &readout) {
    const std::vector<ReadoutConfusion> none;
    const auto &ro = readout ? *readout : none;
    const Eigen::VectorXd p = std::visit(
        [&](const auto &s) { return measurement_probabilities(s, setting, ro); }, state);
    return sample_distribution(p, shots, seed);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace ccx
