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

#ifndef CCX_TESTS_RANDOM_HPP
#define CCX_TESTS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "ccx/channels.hpp"
#include "ccx/circuit.hpp"
#include "ccx/qmath.hpp"

namespace ccx::testing {

using Rng = std::mt19937_64;

/// Haar-random unitary from the QR decomposition of a complex Ginibre matrix.
ComplexMatrix random_unitary(Rng &rng, std::size_t dim);

/// Haar-random pure state.
ComplexVector random_state(Rng &rng, std::size_t dim);

/// Random full-rank density matrix G G^dag / Tr(G G^dag).
ComplexMatrix random_density(Rng &rng, std::size_t dim);

/// Random channel with `rank` Kraus operators, cut from a random isometry.
KrausChannel random_channel(Rng &rng, std::size_t dim, std::size_t rank);

/// Random circuit over the given kinds on `num_qubits` qubits.
Circuit random_circuit(Rng &rng, std::size_t num_qubits, std::size_t length, bool native_only);

double uniform(Rng &rng, double lo, double hi);

}  // namespace ccx::testing

#endif  // CCX_TESTS_RANDOM_HPP
