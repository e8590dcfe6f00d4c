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

#include "ccx/channels.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ccx/error.hpp"
#include "ccx/pauli.hpp"

namespace ccx {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators) : ops_(std::move(operators)) {
    if (ops_.empty()) throw numerical_error("NotTracePreserving", "channel has no operators");
    const Eigen::Index d = ops_.front().rows();
    for (const auto &k : ops_) {
        if (k.rows() != d || k.cols() != d) {
            throw numerical_error("DimensionMismatch", "Kraus operators differ in shape");
        }
    }
    const double err = trace_preservation_error();
    if (err > tol::kAlgebraic) {
        throw numerical_error("NotTracePreserving",
                              "max |sum K^dag K - I| = " + std::to_string(err));
    }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return KrausChannel({ComplexMatrix::Identity(d, d)});
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix &rho) const {
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : ops_) out.noalias() += k * rho * k.adjoint();
    return out;
}

double KrausChannel::trace_preservation_error() const {
    const Eigen::Index d = ops_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto &k : ops_) sum.noalias() += k.adjoint() * k;
    return max_abs(sum - ComplexMatrix::Identity(d, d));
}

KrausChannel thermal_relaxation_channel(double duration_ns, double t1_us, double t2_us) {
    if (!(duration_ns >= 0.0) || !std::isfinite(duration_ns)) {
        throw usage_error("InvalidDuration", "duration must be finite and non-negative");
    }
    if (!(t1_us > 0.0) || !(t2_us > 0.0)) {
        throw schema_error("InvalidCoherence", "T1 and T2 must be positive");
    }
    const double inv_t1 = std::isinf(t1_us) ? 0.0 : 1.0 / t1_us;
    const double inv_t2 = std::isinf(t2_us) ? 0.0 : 1.0 / t2_us;
    // t2 <= 2 t1 with a relative slack for round-off in the inputs
    if (inv_t2 < 0.5 * inv_t1 * (1.0 - 1e-12)) {
        throw schema_error("InvalidCoherence", "T2 = " + std::to_string(t2_us) +
                                                   " us exceeds 2*T1 = " +
                                                   std::to_string(2.0 * t1_us) + " us");
    }
    const double t_us = duration_ns * 1e-3;
    const double gamma = -std::expm1(-t_us * inv_t1);
    const double inv_tphi = std::max(0.0, inv_t2 - 0.5 * inv_t1);
    const double coherence = std::exp(-t_us * inv_tphi);

    ComplexMatrix a0(2, 2), a1(2, 2);
    a0 << 1, 0, 0, std::sqrt(1.0 - gamma);
    a1 << 0, std::sqrt(gamma), 0, 0;
    const ComplexMatrix z = pauli_matrix('Z');
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const double p0 = std::sqrt(0.5 * (1.0 + coherence));
    const double p1 = std::sqrt(0.5 * (1.0 - coherence));

    std::vector<ComplexMatrix> ops;
    for (const ComplexMatrix *amp : {&a0, &a1}) {
        for (const auto &[weight, phase] :
             {std::pair{p0, &id}, std::pair{p1, &z}}) {
            if (weight == 0.0) continue;
            ComplexMatrix k = weight * (*phase) * (*amp);
            if (max_abs(k) > 0.0) ops.push_back(std::move(k));
        }
    }
    return KrausChannel(std::move(ops));
}

double depolarizing_lambda(double err, std::size_t dim) {
    qubits_for_dim(dim);
    if (dim < 2) throw numerical_error("ErrTooLarge", "depolarizing channel needs dim >= 2");
    const double d = static_cast<double>(dim);
    if (!(err >= 0.0) || !(err < 1.0 - 1.0 / d)) {
        throw numerical_error("ErrTooLarge", "gate error " + std::to_string(err) +
                                             " outside [0, 1 - 1/d) for d = " +
                                             std::to_string(dim));
    }
    return err * d / (d - 1.0);
}

KrausChannel depolarizing_channel(double err, std::size_t dim) {
    return depolarizing_channel_lambda(depolarizing_lambda(err, dim), dim);
}

KrausChannel depolarizing_channel_lambda(double lambda, std::size_t dim) {
    const std::size_t n = qubits_for_dim(dim);
    const double d2 = static_cast<double>(dim * dim);
    if (!(lambda >= 0.0) || lambda > d2 / (d2 - 1.0) + 1e-15) {
        throw numerical_error("ErrTooLarge", "depolarizing weight out of range");
    }
    // (1 - lambda) rho + lambda I/d = (1 - lambda + lambda/d^2) rho + (lambda/d^2) sum_{P != I} P rho P
    const double w_id = std::sqrt(std::max(0.0, 1.0 - lambda + lambda / d2));
    const double w_p = std::sqrt(lambda / d2);
    std::vector<ComplexMatrix> ops;
    const auto d = static_cast<Eigen::Index>(dim);
    ops.push_back(w_id * ComplexMatrix::Identity(d, d));
    if (w_p > 0.0) {
        static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
        for (std::size_t idx = 1; idx < (std::size_t{1} << (2 * n)); ++idx) {
            std::string letters(n, 'I');
            for (std::size_t q = 0; q < n; ++q) letters[q] = kLetters[(idx >> (2 * q)) & 3U];
            ops.push_back(w_p * pauli_product(letters));
        }
    }
    return KrausChannel(std::move(ops));
}

}  // namespace ccx
