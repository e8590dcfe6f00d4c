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

#ifndef CCX_CHANNELS_HPP
#define CCX_CHANNELS_HPP

#include <vector>

#include "ccx/qmath.hpp"

namespace ccx {

/// Completely positive, trace-preserving map in operator-sum form.
class KrausChannel {
  public:
    /// Throws NotTracePreserving if sum K^dag K differs from I by more than 1e-8.
    explicit KrausChannel(std::vector<ComplexMatrix> operators);
    static KrausChannel identity(std::size_t dim);

    const std::vector<ComplexMatrix> &operators() const noexcept { return ops_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(ops_.front().rows()); }

    ComplexMatrix apply(const ComplexMatrix &rho) const;
    /// max |sum K^dag K - I|.
    double trace_preservation_error() const;

  private:
    std::vector<ComplexMatrix> ops_;
};

/// Amplitude damping with gamma = 1 - exp(-t/T1) followed by pure dephasing
/// at rate 1/T_phi = 1/T2 - 1/(2 T1). Duration in ns, coherence times in us;
/// infinite T1/T2 disable the respective process.
/// Throws InvalidCoherence unless 0 < T2 <= 2 T1.
KrausChannel thermal_relaxation_channel(double duration_ns, double t1_us, double t2_us);

/// Depolarizing weight lambda for which E(rho) = (1 - lambda) rho + lambda I/d
/// has average gate fidelity 1 - err: lambda = err * d / (d - 1).
/// Throws ErrTooLarge unless 0 <= err < 1 - 1/d.
double depolarizing_lambda(double err, std::size_t dim);

KrausChannel depolarizing_channel(double err, std::size_t dim);

/// Same channel parametrized directly by lambda in [0, d^2 / (d^2 - 1)].
KrausChannel depolarizing_channel_lambda(double lambda, std::size_t dim);

}  // namespace ccx

#endif  // CCX_CHANNELS_HPP
