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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ccx/error.hpp"
#include "ccx/tomography.hpp"
#include "random.hpp"

namespace ccx {
namespace {

using testing::Rng;
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(ThermalRelaxation, ZeroDurationIsIdentity) {
    Rng rng(1);
    const KrausChannel ch = thermal_relaxation_channel(0.0, 100.0, 150.0);
    const ComplexMatrix rho = testing::random_density(rng, 2);
    EXPECT_LT(max_abs_diff(ch.apply(rho), rho), 1e-15);
}

TEST(ThermalRelaxation, MatchesClosedForm) {
    Rng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const double t1 = testing::uniform(rng, 10.0, 400.0);
        const double t2 = testing::uniform(rng, 1.0, 2.0 * t1);
        const double t_ns = testing::uniform(rng, 0.0, 5e4);
        const ComplexMatrix rho = testing::random_density(rng, 2);
        const ComplexMatrix out = thermal_relaxation_channel(t_ns, t1, t2).apply(rho);
        const double t = t_ns * 1e-3;
        const double p00 = 1.0 - (1.0 - rho(0, 0).real()) * std::exp(-t / t1);
        const Complex c01 = rho(0, 1) * std::exp(-t / t2);
        EXPECT_NEAR(out(0, 0).real(), p00, 1e-12);
        EXPECT_NEAR(std::abs(out(0, 1) - c01), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(out(1, 0) - std::conj(c01)), 0.0, 1e-12);
        EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
    }
}

TEST(ThermalRelaxation, MedianDampingExample) {
    // |1><1| decays to |0> with probability gamma
    ComplexMatrix one = ComplexMatrix::Zero(2, 2);
    one(1, 1) = 1;
    const ComplexMatrix out = thermal_relaxation_channel(500.0, 272.21, 188.10).apply(one);
    EXPECT_NEAR(out(0, 0).real(), 1.835e-3, 5e-7);
    EXPECT_NEAR(out(0, 0).real(), -std::expm1(-0.5 / 272.21), 1e-15);
}

TEST(ThermalRelaxation, LongTimeFixedPoint) {
    Rng rng(3);
    const ComplexMatrix out =
        thermal_relaxation_channel(1e9, 50.0, 80.0).apply(testing::random_density(rng, 2));
    EXPECT_NEAR(out(0, 0).real(), 1.0, 1e-12);
    EXPECT_LT(std::abs(out(0, 1)), 1e-12);
}

TEST(ThermalRelaxation, InfiniteCoherenceAndPureT1) {
    Rng rng(4);
    const ComplexMatrix rho = testing::random_density(rng, 2);
    EXPECT_LT(max_abs_diff(thermal_relaxation_channel(500.0, kInf, kInf).apply(rho), rho), 1e-15);
    // T2 = 2 T1 means no pure dephasing
    EXPECT_NO_THROW(thermal_relaxation_channel(500.0, 100.0, 200.0));
}

TEST(ThermalRelaxation, Errors) {
    for (auto [t1, t2] : {std::pair{100.0, 200.1}, std::pair{-1.0, 1.0}, std::pair{10.0, 0.0}}) {
        try {
            thermal_relaxation_channel(10.0, t1, t2);
            ADD_FAILURE();
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), "InvalidCoherence");
        }
    }
    EXPECT_THROW(thermal_relaxation_channel(-1.0, 10.0, 10.0), Error);
}

TEST(Depolarizing, ZeroErrorIsIdentity) {
    Rng rng(5);
    for (std::size_t dim : {2u, 4u, 8u}) {
        const ComplexMatrix rho = testing::random_density(rng, dim);
        EXPECT_LT(max_abs_diff(depolarizing_channel(0.0, dim).apply(rho), rho), 1e-14);
    }
}

TEST(Depolarizing, AverageFidelityMatchesError) {
    for (std::size_t dim : {2u, 4u}) {
        const std::size_t k = qubits_for_dim(dim);
        for (double err : {0.0, 2.36e-4, 7.56e-3, 0.1, 0.3}) {
            const ChoiMatrix choi = choi_of_channel(depolarizing_channel(err, dim));
            const ChoiMatrix id = choi_of_unitary(ComplexMatrix::Identity(dim, dim));
            const double f_pro = process_fidelity(choi, id);
            EXPECT_NEAR(average_gate_fidelity(f_pro, k), 1.0 - err, 1e-10) << dim << " " << err;
            // closed form of the mixture against the identity
            const double lambda = depolarizing_lambda(err, dim);
            const double d2 = static_cast<double>(dim * dim);
            EXPECT_NEAR(f_pro, 1.0 - lambda + lambda / d2, 1e-10);
        }
    }
}

TEST(Depolarizing, ActionIsMixtureWithMaximallyMixed) {
    Rng rng(6);
    const ComplexMatrix rho = testing::random_density(rng, 4);
    const double lambda = depolarizing_lambda(0.2, 4);
    const ComplexMatrix expected =
        (1.0 - lambda) * rho + lambda * ComplexMatrix::Identity(4, 4) / 4.0;
    EXPECT_LT(max_abs_diff(depolarizing_channel(0.2, 4).apply(rho), expected), 1e-12);
}

TEST(Depolarizing, LambdaMonotoneAndBounded) {
    double prev = -1.0;
    for (int i = 0; i < 100; ++i) {
        const double err = 0.5 * i / 100.0;
        const double l = depolarizing_lambda(err, 2);
        EXPECT_GT(l, prev);
        prev = l;
    }
    for (double bad : {0.5, 0.7, -0.01}) {
        try {
            depolarizing_lambda(bad, 2);
            ADD_FAILURE() << bad;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), "ErrTooLarge");
        }
    }
    EXPECT_NO_THROW(depolarizing_lambda(0.74, 4));
    EXPECT_THROW(depolarizing_lambda(0.75, 4), Error);
}

TEST(KrausChannel, TracePreservationProperty) {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const double t1 = testing::uniform(rng, 1.0, 500.0);
        const auto ch = thermal_relaxation_channel(testing::uniform(rng, 0.0, 1e4), t1,
                                                   testing::uniform(rng, 0.1, 2.0 * t1));
        EXPECT_LT(ch.trace_preservation_error(), 1e-12);
        const auto dep = depolarizing_channel(testing::uniform(rng, 0.0, 0.7), 4);
        EXPECT_LT(dep.trace_preservation_error(), 1e-12);
    }
    ComplexMatrix half = ComplexMatrix::Identity(2, 2) * 0.5;
    try {
        KrausChannel({half});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "NotTracePreserving");
    }
}

}  // namespace
}  // namespace ccx
